#ifndef MAXPLUS_SOLVER_HPP_
#define MAXPLUS_SOLVER_HPP_

#include <compare>
#include <vector>

#include "maxplus/matrix.hpp"

namespace maxplus {

/// ⊕ₖ Aₖ ⊗ X ⊗ Bₖ = C with every Aₖ m×m, every Bₖ n×n and C m×n.
struct SylvesterInstance {
  std::vector<TropicalMatrix> a;
  std::vector<TropicalMatrix> b;
  TropicalMatrix c;

  Index terms() const noexcept { return static_cast<Index>(a.size()); }
  Index m() const noexcept { return c.rows(); }
  Index n() const noexcept { return c.cols(); }

  /// Throws ShapeError if the term lists or shapes are inconsistent.
  void validate() const;
};

struct Cell {
  Index row = 0;
  Index col = 0;
  auto operator<=>(const Cell&) const = default;
};

struct SolveReport {
  TropicalMatrix principal;
  bool solvable = false;
  // Cells where substituting `principal` does not reproduce the right-hand
  // side, in row-major order.
  std::vector<Cell> mismatches;
  // Largest |lhs - rhs| over mismatched cells where both sides are finite.
  double residual_max_abs = 0.0;
  // Some mismatch has an infinity on exactly one side.
  bool residual_infinite = false;
};

struct SolveOptions {
  // Absolute tolerance for finite-vs-finite comparison. Ignored (treated as
  // zero) when every input entry is an integer.
  double tolerance = 1e-9;
};

/**
 * Compares a substituted left-hand side against the right-hand side and
 * fills the verdict fields of `report`. Infinity states must match exactly.
 */
void compare_substitution(const TropicalMatrix& lhs, const TropicalMatrix& rhs,
                          double tolerance, SolveReport& report);

/// Every row and every column has a finite entry.
bool is_doubly_r_astic(const TropicalMatrix& a);

/// x* = A♯ ⊗′ b, the greatest x with A ⊗ x ≤ b.
TropicalMatrix linear_principal_solution(const TropicalMatrix& a,
                                         const TropicalMatrix& b);

SolveReport solve_linear(const TropicalMatrix& a, const TropicalMatrix& b,
                         const SolveOptions& options = {});

/// X* = A♯ ⊗′ C ⊗′ B♯ in O(m²n + mn²).
TropicalMatrix axb_principal_solution(const TropicalMatrix& a,
                                      const TropicalMatrix& b,
                                      const TropicalMatrix& c);

/// X* = ⊕′ₖ Aₖ♯ ⊗′ C ⊗′ Bₖ♯, one term at a time with a running minimum.
TropicalMatrix sylvester_principal_solution(const SylvesterInstance& inst);

/// ⊕ₖ Aₖ ⊗ X ⊗ Bₖ.
TropicalMatrix sylvester_apply(const SylvesterInstance& inst,
                               const TropicalMatrix& x);

SolveReport solve_sylvester(const SylvesterInstance& inst,
                            const SolveOptions& options = {});

/// A ⊗ X ⊕ X ⊗ B = C, solved as the two-term instance (A, E), (E, B).
SolveReport solve_two_sided_special(const TropicalMatrix& a,
                                    const TropicalMatrix& b,
                                    const TropicalMatrix& c,
                                    const SolveOptions& options = {});

/// The two-term instance that solve_two_sided_special delegates to.
SylvesterInstance two_sided_instance(const TropicalMatrix& a,
                                     const TropicalMatrix& b,
                                     const TropicalMatrix& c);

/// Tolerance actually used for an instance: zero when all data is integral.
double effective_tolerance(const SylvesterInstance& inst,
                           const SolveOptions& options);

}  // namespace maxplus

#endif  // MAXPLUS_SOLVER_HPP_

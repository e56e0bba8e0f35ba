#include "maxplus/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace maxplus {

void SylvesterInstance::validate() const {
  if (a.empty()) {
    throw ShapeError("SylvesterInstance: at least one term is required");
  }
  if (a.size() != b.size()) {
    throw ShapeError("SylvesterInstance: " + std::to_string(a.size()) +
                     " A matrices but " + std::to_string(b.size()) +
                     " B matrices");
  }
  detail::require_nonempty(c, "SylvesterInstance C");
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].rows() != m() || a[k].cols() != m()) {
      throw ShapeError("SylvesterInstance: A" + std::to_string(k + 1) +
                       " is " + shape_string(a[k]) + ", expected " +
                       std::to_string(m()) + "x" + std::to_string(m()));
    }
    if (b[k].rows() != n() || b[k].cols() != n()) {
      throw ShapeError("SylvesterInstance: B" + std::to_string(k + 1) +
                       " is " + shape_string(b[k]) + ", expected " +
                       std::to_string(n()) + "x" + std::to_string(n()));
    }
  }
}

void compare_substitution(const TropicalMatrix& lhs, const TropicalMatrix& rhs,
                          double tolerance, SolveReport& report) {
  detail::require_shape(lhs.rows() == rhs.rows() && lhs.cols() == rhs.cols(),
                        lhs, rhs, "compare_substitution");
  report.mismatches.clear();
  report.residual_max_abs = 0.0;
  report.residual_infinite = false;
  for (Index i = 0; i < lhs.rows(); ++i) {
    for (Index j = 0; j < lhs.cols(); ++j) {
      const ExtendedReal l = lhs(i, j);
      const ExtendedReal r = rhs(i, j);
      if (l.is_finite() && r.is_finite()) {
        const double diff = std::abs(l.value() - r.value());
        if (diff > tolerance) {
          report.mismatches.push_back({i, j});
          report.residual_max_abs = std::max(report.residual_max_abs, diff);
        }
      } else if (l != r) {
        report.mismatches.push_back({i, j});
        report.residual_infinite = true;
      }
    }
  }
  report.solvable = report.mismatches.empty();
}

bool is_doubly_r_astic(const TropicalMatrix& a) {
  const auto finite =
      a.unaryExpr([](ExtendedReal x) { return x.is_finite(); });
  return finite.rowwise().any().all() && finite.colwise().any().all();
}

TropicalMatrix linear_principal_solution(const TropicalMatrix& a,
                                         const TropicalMatrix& b) {
  if (b.cols() != 1) {
    throw ShapeError("linear_principal_solution: right-hand side must be a "
                     "column, got " + shape_string(b));
  }
  return left_residual(a, b);
}

SolveReport solve_linear(const TropicalMatrix& a, const TropicalMatrix& b,
                         const SolveOptions& options) {
  SolveReport report;
  report.principal = linear_principal_solution(a, b);
  const double tol = has_integral_entries(a) && has_integral_entries(b)
                         ? 0.0
                         : options.tolerance;
  compare_substitution(max_plus_matmul(a, report.principal), b, tol, report);
  return report;
}

TropicalMatrix axb_principal_solution(const TropicalMatrix& a,
                                      const TropicalMatrix& b,
                                      const TropicalMatrix& c) {
  detail::require_shape(a.rows() == a.cols() && a.rows() == c.rows(), a, c,
                        "axb_principal_solution (A, C)");
  detail::require_shape(b.rows() == b.cols() && b.rows() == c.cols(), b, c,
                        "axb_principal_solution (B, C)");
  return right_residual(left_residual(a, c), b);
}

TropicalMatrix sylvester_principal_solution(const SylvesterInstance& inst) {
  inst.validate();
  TropicalMatrix x = TropicalMatrix::Constant(inst.m(), inst.n(), kPosInf);
  for (Index k = 0; k < inst.terms(); ++k) {
    x = min_plus_matadd(x, axb_principal_solution(inst.a[k], inst.b[k], inst.c));
  }
  return x;
}

TropicalMatrix sylvester_apply(const SylvesterInstance& inst,
                               const TropicalMatrix& x) {
  inst.validate();
  detail::require_shape(x.rows() == inst.m() && x.cols() == inst.n(), x,
                        inst.c, "sylvester_apply");
  TropicalMatrix y = TropicalMatrix::Constant(inst.m(), inst.n(), kNegInf);
  for (Index k = 0; k < inst.terms(); ++k) {
    y = max_plus_matadd(
        y, max_plus_matmul(max_plus_matmul(inst.a[k], x), inst.b[k]));
  }
  return y;
}

double effective_tolerance(const SylvesterInstance& inst,
                           const SolveOptions& options) {
  const auto integral = [](const TropicalMatrix& m) {
    return has_integral_entries(m);
  };
  const bool all_integral = integral(inst.c) &&
                            std::all_of(inst.a.begin(), inst.a.end(), integral) &&
                            std::all_of(inst.b.begin(), inst.b.end(), integral);
  return all_integral ? 0.0 : options.tolerance;
}

SolveReport solve_sylvester(const SylvesterInstance& inst,
                            const SolveOptions& options) {
  SolveReport report;
  report.principal = sylvester_principal_solution(inst);
  compare_substitution(sylvester_apply(inst, report.principal), inst.c,
                       effective_tolerance(inst, options), report);
  return report;
}

SylvesterInstance two_sided_instance(const TropicalMatrix& a,
                                     const TropicalMatrix& b,
                                     const TropicalMatrix& c) {
  SylvesterInstance inst;
  inst.a = {a, unit_matrix(c.rows())};
  inst.b = {unit_matrix(c.cols()), b};
  inst.c = c;
  return inst;
}

SolveReport solve_two_sided_special(const TropicalMatrix& a,
                                    const TropicalMatrix& b,
                                    const TropicalMatrix& c,
                                    const SolveOptions& options) {
  return solve_sylvester(two_sided_instance(a, b, c), options);
}

}  // namespace maxplus

#ifndef MAXPLUS_ORACLE_HPP_
#define MAXPLUS_ORACLE_HPP_

#include <stdexcept>

#include "maxplus/matrix.hpp"
#include "maxplus/solver.hpp"

namespace maxplus {

// Brute-force reference path: the whole instance becomes one max-plus linear
// system K ⊗ vec(X) = vec(C) of size mn. Used to cross-check the fast path,
// never to solve in production.

struct OracleOptions {
  // Largest accepted system size mn. K has (mn)² entries.
  Index max_system_size = 4096;
};

class OracleSizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct KroneckerSystem {
  TropicalMatrix k;  // mn × mn
  TropicalMatrix c;  // mn × 1
};

/// K = ⊕ₖ kron_max(Bₖᵀ, Aₖ), c = vec(C). Throws OracleSizeError above the cap.
KroneckerSystem kron_reformulate(const SylvesterInstance& inst,
                                 const OracleOptions& options = {});

TropicalMatrix oracle_principal_solution(const SylvesterInstance& inst,
                                         const OracleOptions& options = {});

/// Decides solvability on the Kronecker system; mismatches are reported in
/// the (row, col) coordinates of X, sorted row-major like solve_sylvester.
SolveReport oracle_solve(const SylvesterInstance& inst,
                         const SolveOptions& solve_options = {},
                         const OracleOptions& options = {});

}  // namespace maxplus

#endif  // MAXPLUS_ORACLE_HPP_

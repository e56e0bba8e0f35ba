#include "maxplus/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace maxplus {
namespace {

void require_within_cap(const SylvesterInstance& inst,
                        const OracleOptions& options) {
  const Index size = inst.m() * inst.n();
  if (size > options.max_system_size) {
    throw OracleSizeError("oracle: system size mn = " + std::to_string(size) +
                          " exceeds the cap of " +
                          std::to_string(options.max_system_size));
  }
}

}  // namespace

KroneckerSystem kron_reformulate(const SylvesterInstance& inst,
                                 const OracleOptions& options) {
  inst.validate();
  require_within_cap(inst, options);
  const Index m = inst.m();
  const Index n = inst.n();

  // Accumulates every kron_max(Bₜᵀ, Aₜ) straight into K so only one mn×mn
  // matrix is ever alive. Entry (j·m + i, l·m + k) of the t-th product is
  // Bₜ(l, j) ⊗ Aₜ(i, k).
  KroneckerSystem sys;
  sys.k = TropicalMatrix::Constant(m * n, m * n, kNegInf);
  for (Index t = 0; t < inst.terms(); ++t) {
    const TropicalMatrix& a = inst.a[t];
    const TropicalMatrix& b = inst.b[t];
    for (Index l = 0; l < n; ++l) {
      for (Index k = 0; k < m; ++k) {
        auto column = sys.k.col(l * m + k);
        for (Index j = 0; j < n; ++j) {
          const ExtendedReal s = b(l, j);
          for (Index i = 0; i < m; ++i) {
            column(j * m + i) =
                max_plus_add(column(j * m + i), max_plus_mul(s, a(i, k)));
          }
        }
      }
    }
  }
  const auto size = static_cast<std::uint64_t>(m * n);
  op_counter::add(static_cast<std::uint64_t>(inst.terms()) * size * size);
  sys.c = vec(inst.c);
  return sys;
}

TropicalMatrix oracle_principal_solution(const SylvesterInstance& inst,
                                         const OracleOptions& options) {
  const KroneckerSystem sys = kron_reformulate(inst, options);
  return unvec(linear_principal_solution(sys.k, sys.c), inst.m(), inst.n());
}

SolveReport oracle_solve(const SylvesterInstance& inst,
                         const SolveOptions& solve_options,
                         const OracleOptions& options) {
  const KroneckerSystem sys = kron_reformulate(inst, options);
  const TropicalMatrix x = linear_principal_solution(sys.k, sys.c);

  SolveReport report;
  compare_substitution(max_plus_matmul(sys.k, x), sys.c,
                       effective_tolerance(inst, solve_options), report);
  const Index m = inst.m();
  for (Cell& cell : report.mismatches) {
    cell = Cell{cell.row % m, cell.row / m};
  }
  std::sort(report.mismatches.begin(), report.mismatches.end());
  report.principal = unvec(x, m, inst.n());
  return report;
}

}  // namespace maxplus

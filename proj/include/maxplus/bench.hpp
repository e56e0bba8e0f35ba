#ifndef MAXPLUS_BENCH_HPP_
#define MAXPLUS_BENCH_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "maxplus/matrix.hpp"
#include "maxplus/oracle.hpp"

namespace maxplus {

enum class BenchMethod { kFast, kOracle };

std::string_view to_string(BenchMethod method);
std::optional<BenchMethod> parse_bench_method(std::string_view text);

/// One timed solve. op_count comes from the thread-local operation counter.
struct BenchRecord {
  Index m = 0;
  Index n = 0;
  Index p = 0;
  BenchMethod method = BenchMethod::kFast;
  int rep = 0;
  double wall_seconds = 0.0;
  std::uint64_t op_count = 0;
};

struct BenchPoint {
  Index m = 0;
  Index n = 0;
  Index p = 0;
};

struct BenchGrid {
  std::vector<Index> m;
  std::vector<Index> n;
  std::vector<Index> p;
  // Pair each m with n = m instead of taking the cartesian product.
  bool square = false;
  int reps = 3;
  std::vector<BenchMethod> methods = {BenchMethod::kFast, BenchMethod::kOracle};
  std::uint64_t seed = 1;
  OracleOptions oracle;

  /// Throws std::invalid_argument on an empty axis, a non-positive size or
  /// fewer than three repetitions.
  void validate() const;
  std::vector<BenchPoint> points() const;
};

/**
 * Runs every (point, method, rep) on the calling thread. Each point solves
 * one raw random instance (entries in [-10, 10], 10% NEG_INF) drawn from the
 * grid seed; instance generation is outside the timed region. Oracle points
 * above the size cap are skipped and reported through `on_skip`.
 */
std::vector<BenchRecord> run_bench(
    const BenchGrid& grid,
    const std::function<void(const std::string&)>& on_skip = {});

/// Operations of one verified solve: principal solution plus substitution.
std::uint64_t measure_op_count(const SylvesterInstance& inst,
                               BenchMethod method,
                               const OracleOptions& oracle = {});

/// p(m²n + mn² + mn): the count the fast path is held to within 4×.
std::uint64_t fast_op_reference(Index m, Index n, Index p);
/// p·m²n² + (mn)²: the count the oracle is held to within 4×.
std::uint64_t oracle_op_reference(Index m, Index n, Index p);

inline constexpr std::string_view kBenchCsvHeader =
    "m,n,p,method,rep,wall_seconds,op_count";
std::string format_bench_row(const BenchRecord& record);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace maxplus

#endif  // MAXPLUS_BENCH_HPP_

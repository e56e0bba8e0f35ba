#include "maxplus/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "maxplus/instance_io.hpp"
#include "maxplus/solver.hpp"

namespace maxplus {

std::string_view to_string(BenchMethod method) {
  return method == BenchMethod::kFast ? "fast" : "oracle";
}

std::optional<BenchMethod> parse_bench_method(std::string_view text) {
  if (text == "fast") {
    return BenchMethod::kFast;
  }
  if (text == "oracle") {
    return BenchMethod::kOracle;
  }
  return std::nullopt;
}

void BenchGrid::validate() const {
  const auto positive = [](const std::vector<Index>& axis) {
    if (axis.empty()) {
      return false;
    }
    for (Index v : axis) {
      if (v < 1) {
        return false;
      }
    }
    return true;
  };
  if (!positive(m) || (!square && !positive(n)) || !positive(p)) {
    throw std::invalid_argument(
        "bench: every grid axis needs at least one positive value");
  }
  if (reps < 3) {
    throw std::invalid_argument("bench: at least 3 repetitions are required");
  }
  if (methods.empty()) {
    throw std::invalid_argument("bench: no methods selected");
  }
}

std::vector<BenchPoint> BenchGrid::points() const {
  std::vector<BenchPoint> out;
  for (Index pv : p) {
    for (Index mv : m) {
      if (square) {
        out.push_back({mv, mv, pv});
        continue;
      }
      for (Index nv : n) {
        out.push_back({mv, nv, pv});
      }
    }
  }
  return out;
}

std::uint64_t measure_op_count(const SylvesterInstance& inst,
                               BenchMethod method,
                               const OracleOptions& oracle) {
  const ScopedOpCount ops;
  if (method == BenchMethod::kFast) {
    (void)solve_sylvester(inst);
  } else {
    (void)oracle_solve(inst, {}, oracle);
  }
  return ops.elapsed();
}

std::vector<BenchRecord> run_bench(
    const BenchGrid& grid,
    const std::function<void(const std::string&)>& on_skip) {
  grid.validate();
  std::vector<BenchRecord> records;
  for (const BenchPoint& pt : grid.points()) {
    GeneratorConfig cfg;
    cfg.m = pt.m;
    cfg.n = pt.n;
    cfg.p = pt.p;
    cfg.seed = grid.seed;
    cfg.neginf_density = 0.1;
    cfg.mode = GeneratorMode::kRawRandom;
    const SylvesterInstance inst = generate_instance(cfg).instance;

    for (BenchMethod method : grid.methods) {
      if (method == BenchMethod::kOracle &&
          pt.m * pt.n > grid.oracle.max_system_size) {
        if (on_skip) {
          on_skip("skipping oracle at m=" + std::to_string(pt.m) +
                  " n=" + std::to_string(pt.n) + " p=" + std::to_string(pt.p) +
                  ": mn exceeds the cap of " +
                  std::to_string(grid.oracle.max_system_size));
        }
        continue;
      }
      for (int rep = 0; rep < grid.reps; ++rep) {
        const auto start = std::chrono::steady_clock::now();
        const std::uint64_t ops = measure_op_count(inst, method, grid.oracle);
        const std::chrono::duration<double> elapsed =
            std::chrono::steady_clock::now() - start;
        records.push_back(
            {pt.m, pt.n, pt.p, method, rep, elapsed.count(), ops});
      }
    }
  }
  return records;
}

std::uint64_t fast_op_reference(Index m, Index n, Index p) {
  const auto mu = static_cast<std::uint64_t>(m);
  const auto nu = static_cast<std::uint64_t>(n);
  return static_cast<std::uint64_t>(p) * (mu * mu * nu + mu * nu * nu + mu * nu);
}

std::uint64_t oracle_op_reference(Index m, Index n, Index p) {
  const auto size = static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(n);
  return static_cast<std::uint64_t>(p) * size * size + size * size;
}

std::string format_bench_row(const BenchRecord& r) {
  char wall[32];
  std::snprintf(wall, sizeof wall, "%.9f", r.wall_seconds);
  return std::to_string(r.m) + "," + std::to_string(r.n) + "," +
         std::to_string(r.p) + "," + std::string(to_string(r.method)) + "," +
         std::to_string(r.rep) + "," + wall + "," + std::to_string(r.op_count);
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("loglog_slope: need two or more paired points");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double k = static_cast<double>(x.size());
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

}  // namespace maxplus

// maxplus: solve, cross-check, generate and benchmark max-plus Sylvester
// equations ⊕ₖ Aₖ ⊗ X ⊗ Bₖ = C.
//
// Exit codes: 0 solvable, 1 unsolvable, 2 usage/parse/shape error.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "maxplus/bench.hpp"
#include "maxplus/instance_io.hpp"
#include "maxplus/oracle.hpp"
#include "maxplus/solver.hpp"

namespace {

using namespace maxplus;

constexpr int kExitSolvable = 0;
constexpr int kExitUnsolvable = 1;
constexpr int kExitError = 2;

struct SolveArgs {
  std::string dir;
  std::vector<std::string> a;
  std::vector<std::string> b;
  std::string c;
  bool linear = false;
  bool two_sided = false;
  bool mismatches = false;
  bool oracle = false;
  double tolerance = 1e-9;
  Index oracle_cap = OracleOptions{}.max_system_size;
};

struct GenerateArgs {
  GeneratorConfig config;
  std::string mode = "solvable";
  std::string out;
};

struct BenchArgs {
  BenchGrid grid;
  std::vector<std::string> methods = {"fast", "oracle"};
};

void print_report(const SolveReport& report, bool with_mismatches) {
  std::cout << format_matrix(report.principal);
  std::cout << "solvable: " << (report.solvable ? "true" : "false") << '\n';
  if (with_mismatches) {
    std::cout << "mismatches: " << report.mismatches.size() << '\n';
    for (const Cell& cell : report.mismatches) {
      std::cout << cell.row << ' ' << cell.col << '\n';
    }
  }
}

bool same_outcome(const SolveReport& x, const SolveReport& y) {
  return x.solvable == y.solvable && x.mismatches == y.mismatches &&
         x.principal == y.principal;
}

int run_solve(const SolveArgs& args) {
  const SolveOptions options{args.tolerance};

  if (args.linear) {
    if (args.a.size() != 1 || !args.b.empty() || args.c.empty()) {
      throw std::invalid_argument("--linear takes exactly one --a and a --c");
    }
    if (args.oracle) {
      throw std::invalid_argument("--oracle does not apply to --linear");
    }
    const SolveReport report =
        solve_linear(read_matrix_file(args.a[0]), read_matrix_file(args.c),
                     options);
    print_report(report, args.mismatches);
    return report.solvable ? kExitSolvable : kExitUnsolvable;
  }

  SylvesterInstance inst;
  if (args.two_sided) {
    if (args.a.size() != 1 || args.b.size() != 1 || args.c.empty()) {
      throw std::invalid_argument(
          "--two-sided takes exactly one --a, one --b and a --c");
    }
    inst = two_sided_instance(read_matrix_file(args.a[0]),
                              read_matrix_file(args.b[0]),
                              read_matrix_file(args.c));
    inst.validate();
  } else {
    InstanceFileSet files;
    if (!args.dir.empty()) {
      files = InstanceFileSet::in_directory(args.dir);
    } else {
      files.a.assign(args.a.begin(), args.a.end());
      files.b.assign(args.b.begin(), args.b.end());
      files.c = args.c;
    }
    if (files.a.empty() || files.c.empty()) {
      throw std::invalid_argument(
          "solve needs --dir, or --a/--b pairs and a --c");
    }
    inst = read_instance(files);
  }

  const SolveReport report = solve_sylvester(inst, options);
  print_report(report, args.mismatches);

  if (args.oracle) {
    try {
      const SolveReport check =
          oracle_solve(inst, options, OracleOptions{args.oracle_cap});
      if (!same_outcome(report, check)) {
        std::cerr << "oracle disagreement\nfast principal:\n"
                  << format_matrix(report.principal) << "oracle principal:\n"
                  << format_matrix(check.principal)
                  << "fast solvable: " << report.solvable
                  << ", oracle solvable: " << check.solvable << '\n';
        std::cout << "oracle-agrees: false\n";
        return kExitError;
      }
      std::cout << "oracle-agrees: true\n";
    } catch (const OracleSizeError& e) {
      std::cerr << "note: " << e.what() << "; oracle check skipped\n";
    }
  }
  return report.solvable ? kExitSolvable : kExitUnsolvable;
}

int run_generate(GenerateArgs args) {
  const auto mode = parse_generator_mode(args.mode);
  if (!mode) {
    throw std::invalid_argument("unknown --mode '" + args.mode + "'");
  }
  args.config.mode = *mode;
  const GeneratedInstance gen = generate_instance(args.config);
  write_instance(args.out, gen.instance, gen.witness);
  std::cout << "seed: " << args.config.seed << '\n';
  return 0;
}

int run_bench(BenchArgs args) {
  args.grid.methods.clear();
  for (const auto& name : args.methods) {
    const auto method = parse_bench_method(name);
    if (!method) {
      throw std::invalid_argument("unknown method '" + name + "'");
    }
    args.grid.methods.push_back(*method);
  }
  args.grid.validate();
  std::cout << kBenchCsvHeader << '\n';
  const auto records = maxplus::run_bench(
      args.grid, [](const std::string& note) { std::cerr << note << '\n'; });
  for (const auto& record : records) {
    std::cout << format_bench_row(record) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Max-plus Sylvester equation solver"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand(
      "solve", "Compute the principal solution and decide solvability");
  solve_cmd->add_option("--dir", solve.dir,
                        "Directory holding A1..Ap, B1..Bp and C (.txt)");
  solve_cmd->add_option("--a", solve.a, "A-matrix file, repeat in term order");
  solve_cmd->add_option("--b", solve.b, "B-matrix file, repeat in term order");
  solve_cmd->add_option("--c", solve.c, "Right-hand side file");
  solve_cmd->add_flag("--linear", solve.linear,
                      "Solve A ⊗ x = b with one --a and --c as b");
  solve_cmd->add_flag("--two-sided", solve.two_sided,
                      "Solve A ⊗ X ⊕ X ⊗ B = C");
  solve_cmd->add_flag("--mismatches", solve.mismatches,
                      "List cells where the substitution differs from C");
  solve_cmd->add_flag("--oracle", solve.oracle,
                      "Cross-check against the Kronecker reformulation");
  solve_cmd->add_option("--tolerance", solve.tolerance,
                        "Absolute tolerance for non-integer data")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--oracle-cap", solve.oracle_cap,
                        "Largest mn the oracle accepts")
      ->capture_default_str();

  GenerateArgs gen;
  auto* gen_cmd =
      app.add_subcommand("generate", "Write a seeded random instance");
  gen_cmd->add_option("--m", gen.config.m, "Rows of X")->required();
  gen_cmd->add_option("--n", gen.config.n, "Columns of X")->required();
  gen_cmd->add_option("--p", gen.config.p, "Number of terms")->required();
  gen_cmd->add_option("--seed", gen.config.seed)->capture_default_str();
  gen_cmd->add_option("--mode", gen.mode, "solvable | raw")
      ->capture_default_str();
  gen_cmd->add_option("--low", gen.config.entry_low)->capture_default_str();
  gen_cmd->add_option("--high", gen.config.entry_high)->capture_default_str();
  gen_cmd->add_option("--neginf-density", gen.config.neginf_density)
      ->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output directory")->required();

  BenchArgs bench;
  bench.grid.m = {16, 32, 64};
  bench.grid.n = {16, 32, 64};
  bench.grid.p = {2};
  auto* bench_cmd = app.add_subcommand(
      "bench", "Time fast path and oracle over a grid; CSV on stdout");
  bench_cmd->add_option("--m", bench.grid.m, "Values of m")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--n", bench.grid.n, "Values of n")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--p", bench.grid.p, "Values of p")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_flag("--square", bench.grid.square,
                      "Use n = m instead of the m × n product");
  bench_cmd->add_option("--reps", bench.grid.reps)->capture_default_str();
  bench_cmd->add_option("--methods", bench.methods, "fast, oracle")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench.grid.seed)->capture_default_str();
  bench_cmd->add_option("--oracle-cap", bench.grid.oracle.max_system_size,
                        "Largest mn the oracle accepts")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*solve_cmd) {
      return run_solve(solve);
    }
    if (*gen_cmd) {
      return run_generate(gen);
    }
    return run_bench(bench);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}

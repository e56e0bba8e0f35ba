#include <catch_amalgamated.hpp>

#include "maxplus/instance_io.hpp"
#include "maxplus/solver.hpp"
#include "test_support.hpp"

using namespace maxplus;
using maxplus::testing::col;
using maxplus::testing::mat;

namespace {

SylvesterInstance scalar_two_term() {
  SylvesterInstance inst;
  inst.a = {mat(1, 1, {1}), mat(1, 1, {0})};
  inst.b = {mat(1, 1, {0}), mat(1, 1, {2})};
  inst.c = mat(1, 1, {5});
  return inst;
}

}  // namespace

TEST_CASE("linear principal solution", "[solver]") {
  CHECK(linear_principal_solution(mat(1, 1, {0}), col({5})) == col({5}));
  CHECK(linear_principal_solution(mat(2, 2, {0, 1, 2, 0}), col({3, 4})) ==
        col({2, 2}));
  CHECK(linear_principal_solution(mat(2, 2, {0, 0, 0, 0}), col({0, 1})) ==
        col({0, 0}));
  CHECK_THROWS_AS(linear_principal_solution(mat(2, 2, {0, 0, 0, 0}), col({0})),
                  ShapeError);
  CHECK_THROWS_AS(
      linear_principal_solution(mat(2, 2, {0, 0, 0, 0}), mat(2, 2, {0, 0, 0, 0})),
      ShapeError);
}

TEST_CASE("solve_linear", "[solver]") {
  const SolveReport ok = solve_linear(mat(2, 2, {0, 1, 2, 0}), col({3, 4}));
  CHECK(ok.solvable);
  CHECK(ok.mismatches.empty());
  CHECK(ok.principal == col({2, 2}));

  const SolveReport bad = solve_linear(mat(2, 2, {0, 0, 0, 0}), col({0, 1}));
  CHECK_FALSE(bad.solvable);
  CHECK(bad.principal == col({0, 0}));
  REQUIRE(bad.mismatches.size() == 1);
  CHECK(bad.mismatches[0] == Cell{1, 0});
  CHECK(bad.residual_max_abs == 1.0);
  CHECK_FALSE(bad.residual_infinite);

  const TropicalMatrix b = col({4, -7, 0.5});
  const SolveReport unit = solve_linear(unit_matrix(3), b);
  CHECK(unit.solvable);
  CHECK(unit.principal == b);
}

TEST_CASE("infinite discrepancies are flagged", "[solver]") {
  const SolveReport r = solve_linear(mat(2, 1, {0, 0}), col({kNegInf, 0}));
  CHECK(r.principal == col({kNegInf}));
  CHECK_FALSE(r.solvable);
  REQUIRE(r.mismatches.size() == 1);
  CHECK(r.mismatches[0] == Cell{1, 0});
  CHECK(r.residual_infinite);
}

TEST_CASE("unconstrained cells stay POS_INF", "[solver]") {
  // Column 1 of A is all NEG_INF, so x(1) is bounded by nothing.
  const SolveReport r =
      solve_linear(mat(2, 2, {0, kNegInf, 0, kNegInf}), col({1, 1}));
  CHECK(r.principal == col({1, kPosInf}));
  CHECK(r.solvable);
}

TEST_CASE("tolerance applies only to non-integer data", "[solver]") {
  SylvesterInstance inst;
  inst.a = {mat(1, 1, {0.1})};
  inst.b = {mat(1, 1, {0.7})};
  inst.c = mat(1, 1, {0.3});
  CHECK(effective_tolerance(inst, {}) == 1e-9);
  CHECK(solve_sylvester(inst).solvable);
  CHECK_FALSE(solve_sylvester(inst, SolveOptions{0.0}).solvable);

  const SylvesterInstance ints = scalar_two_term();
  CHECK(effective_tolerance(ints, SolveOptions{0.5}) == 0.0);
}

TEST_CASE("single-term principal solution", "[solver]") {
  CHECK(axb_principal_solution(mat(1, 1, {2}), mat(1, 1, {3}), mat(1, 1, {10})) ==
        mat(1, 1, {5}));
  const TropicalMatrix c = mat(2, 3, {1, 2, 3, 4, 5, kNegInf});
  CHECK(axb_principal_solution(unit_matrix(2), unit_matrix(3), c) == c);
  CHECK(axb_principal_solution(mat(2, 2, {0, 1, 2, 0}), unit_matrix(2),
                               mat(2, 2, {3, 3, 4, 4})) ==
        mat(2, 2, {2, 2, 2, 2}));
  CHECK_THROWS_AS(axb_principal_solution(unit_matrix(2), unit_matrix(2), c),
                  ShapeError);
}

TEST_CASE("single-term route equals the explicit conjugate products",
          "[solver][property]") {
  SplitMix64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const Index m = maxplus::testing::random_dim(rng, 1, 6);
    const Index n = maxplus::testing::random_dim(rng, 1, 6);
    const auto a = maxplus::testing::random_with_infinities(rng, m, m, 0.2, 0.05);
    const auto b = maxplus::testing::random_with_infinities(rng, n, n, 0.2, 0.05);
    const auto c = maxplus::testing::random_with_infinities(rng, m, n, 0.05, 0.05);
    CHECK(axb_principal_solution(a, b, c) ==
          min_plus_matmul(min_plus_matmul(conjugate(a), c), conjugate(b)));
  }
}

TEST_CASE("Sylvester principal solution", "[solver]") {
  const SylvesterInstance inst = scalar_two_term();
  CHECK(sylvester_principal_solution(inst) == mat(1, 1, {3}));

  SylvesterInstance one;
  one.a = {mat(2, 2, {0, 1, 2, 0})};
  one.b = {mat(3, 3, {0, -1, 2, kNegInf, 1, 0, 3, 3, kNegInf})};
  one.c = mat(2, 3, {5, 6, 7, 8, 9, 10});
  CHECK(sylvester_principal_solution(one) ==
        axb_principal_solution(one.a[0], one.b[0], one.c));

  SylvesterInstance units;
  for (int k = 0; k < 3; ++k) {
    units.a.push_back(unit_matrix(2));
    units.b.push_back(unit_matrix(3));
  }
  units.c = one.c;
  CHECK(sylvester_principal_solution(units) == one.c);
}

TEST_CASE("solve_sylvester verdicts", "[solver]") {
  const SolveReport ok = solve_sylvester(scalar_two_term());
  CHECK(ok.solvable);
  CHECK(ok.principal == mat(1, 1, {3}));

  SylvesterInstance bad;
  bad.a = {mat(2, 2, {0, 0, 0, 0})};
  bad.b = {mat(1, 1, {0})};
  bad.c = col({0, 1});
  const SolveReport r = solve_sylvester(bad);
  CHECK_FALSE(r.solvable);
  CHECK(r.principal == col({0, 0}));
  REQUIRE(r.mismatches.size() == 1);
  CHECK(r.mismatches[0] == Cell{1, 0});
}

TEST_CASE("instance validation", "[solver]") {
  SylvesterInstance inst = scalar_two_term();
  inst.b.pop_back();
  CHECK_THROWS_AS(solve_sylvester(inst), ShapeError);

  inst = scalar_two_term();
  inst.a[1] = unit_matrix(2);
  CHECK_THROWS_AS(sylvester_principal_solution(inst), ShapeError);

  SylvesterInstance empty;
  empty.c = mat(1, 1, {0});
  CHECK_THROWS_AS(solve_sylvester(empty), ShapeError);
}

TEST_CASE("two-sided special case", "[solver]") {
  const SolveReport r1 =
      solve_two_sided_special(mat(1, 1, {0}), mat(1, 1, {0}), mat(1, 1, {7}));
  CHECK(r1.solvable);
  CHECK(r1.principal == mat(1, 1, {7}));

  const SolveReport r2 =
      solve_two_sided_special(mat(1, 1, {2}), mat(1, 1, {0}), mat(1, 1, {5}));
  CHECK(r2.solvable);
  CHECK(r2.principal == mat(1, 1, {3}));

  const SolveReport r3 =
      solve_two_sided_special(mat(1, 1, {2}), mat(1, 1, {2}), mat(1, 1, {5}));
  CHECK(r3.solvable);
  CHECK(r3.principal == mat(1, 1, {3}));

  const SylvesterInstance inst =
      two_sided_instance(mat(1, 1, {2}), mat(2, 2, {0, 1, 1, 0}),
                         mat(1, 2, {4, 4}));
  CHECK(inst.a[1] == unit_matrix(1));
  CHECK(inst.b[0] == unit_matrix(2));
}

TEST_CASE("doubly R-astic check", "[solver]") {
  CHECK(is_doubly_r_astic(mat(2, 2, {0, kNegInf, kNegInf, 1})));
  CHECK_FALSE(is_doubly_r_astic(mat(2, 2, {kNegInf, kNegInf, 0, 1})));
  CHECK_FALSE(is_doubly_r_astic(mat(2, 2, {kNegInf, 0, kNegInf, 1})));
  CHECK(is_doubly_r_astic(mat(2, 3, {1, 2, 3, 4, 5, 6})));
  CHECK_FALSE(is_doubly_r_astic(mat(1, 1, {kPosInf})));
}

TEST_CASE("maximality, upper bound and monotonicity", "[solver][property]") {
  int strict = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    SplitMix64 dims(seed);
    GeneratorConfig cfg;
    cfg.m = maxplus::testing::random_dim(dims, 1, 5);
    cfg.n = maxplus::testing::random_dim(dims, 1, 5);
    cfg.p = maxplus::testing::random_dim(dims, 1, 4);
    cfg.seed = seed;
    cfg.neginf_density = 0.2;
    const GeneratedInstance gen = generate_instance(cfg);
    const SylvesterInstance& inst = gen.instance;

    const SolveReport r = solve_sylvester(inst);
    REQUIRE(r.solvable);
    CHECK(entrywise_leq(*gen.witness, r.principal));
    strict += (*gen.witness != r.principal) ? 1 : 0;

    // Raising C can only raise X*.
    SylvesterInstance higher = inst;
    higher.c = inst.c.unaryExpr([](ExtendedReal v) {
      return max_plus_mul(v, ExtendedReal(1.0));
    });
    CHECK(entrywise_leq(r.principal, sylvester_principal_solution(higher)));

    // Residuation bounds the substitution even when unsolvable.
    SylvesterInstance raw = inst;
    SplitMix64 crng(seed + 1000);
    raw.c = random_matrix(crng, inst.m(), inst.n(), -10, 10, 0.0);
    const TropicalMatrix x = sylvester_principal_solution(raw);
    CHECK(entrywise_leq(sylvester_apply(raw, x), raw.c));
  }
  CHECK(strict > 0);
}

TEST_CASE("fast path operation count", "[solver]") {
  for (Index m : {1, 3, 7}) {
    for (Index n : {1, 4, 6}) {
      for (Index p : {1, 2, 5}) {
        GeneratorConfig cfg;
        cfg.m = m;
        cfg.n = n;
        cfg.p = p;
        cfg.mode = GeneratorMode::kRawRandom;
        const SylvesterInstance inst = generate_instance(cfg).instance;
        const ScopedOpCount ops;
        (void)solve_sylvester(inst);
        // Principal solution and substitution each cost p(m²n + mn² + mn).
        const auto per_pass = static_cast<std::uint64_t>(p * (m * m * n + m * n * n + m * n));
        CHECK(ops.elapsed() == 2 * per_pass);
      }
    }
  }
}

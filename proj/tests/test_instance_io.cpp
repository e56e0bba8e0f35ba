#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <catch_amalgamated.hpp>

#include "maxplus/instance_io.hpp"
#include "test_support.hpp"

using namespace maxplus;
using maxplus::testing::mat;

namespace {

bool bit_identical(const TropicalMatrix& x, const TropicalMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    return false;
  }
  for (Index i = 0; i < x.size(); ++i) {
    const double a = x.data()[i].value();
    const double b = y.data()[i].value();
    if (std::memcmp(&a, &b, sizeof a) != 0) {
      return false;
    }
  }
  return true;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("maxplus_io_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("parse_matrix", "[io]") {
  CHECK(parse_matrix("2 2\n0 1\n2 0\n") == mat(2, 2, {0, 1, 2, 0}));
  CHECK(parse_matrix("1 2\n-inf 3.5\n") == mat(1, 2, {kNegInf, 3.5}));
  CHECK(parse_matrix("# comment\n1 1\n# another\n+INF") == mat(1, 1, {kPosInf}));
}

TEST_CASE("parse errors carry line numbers", "[io]") {
  const auto line_of = [](const char* text) -> std::size_t {
    try {
      (void)parse_matrix(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("2 1\n0\n1 2\n") == 3);
  CHECK(line_of("2\n0 1\n") == 1);
  CHECK(line_of("0 2\n") == 1);
  CHECK(line_of("1 2\n0 nan\n") == 2);
  CHECK(line_of("1 1\n0\n1\n") == 3);
  CHECK(line_of("2 1\n0\n") == 2);
  CHECK(line_of("") == 0);
  CHECK_THROWS_AS(parse_matrix(""), ParseError);
  CHECK_THROWS_WITH(parse_matrix("1 1\nx\n"), Catch::Matchers::ContainsSubstring("line 2"));
}

TEST_CASE("format_matrix", "[io]") {
  CHECK(format_matrix(mat(2, 2, {0, 1, 2, 0})) == "2 2\n0 1\n2 0\n");
  CHECK(format_matrix(mat(1, 1, {kNegInf})) == "1 1\n-inf\n");
  CHECK(format_matrix(mat(1, 3, {kPosInf, -0.5, 12})) == "1 3\n+inf -0.5 12\n");
}

TEST_CASE("format then parse is the identity", "[io][property]") {
  SplitMix64 rng(42);
  for (int t = 0; t < 1000; ++t) {
    const Index r = maxplus::testing::random_dim(rng, 1, 6);
    const Index c = maxplus::testing::random_dim(rng, 1, 6);
    TropicalMatrix m(r, c);
    for (Index i = 0; i < m.size(); ++i) {
      const double u = rng.uniform01();
      if (u < 0.1) {
        m.data()[i] = kNegInf;
      } else if (u < 0.2) {
        m.data()[i] = kPosInf;
      } else if (u < 0.6) {
        m.data()[i] = static_cast<double>(rng.uniform_int(-1000, 1000));
      } else {
        // Arbitrary doubles, including tiny and huge magnitudes.
        m.data()[i] = (rng.uniform01() - 0.5) *
                      std::ldexp(1.0, static_cast<int>(rng.uniform_int(-60, 60)));
      }
    }
    CHECK(bit_identical(parse_matrix(format_matrix(m)), m));
  }
  CHECK(bit_identical(parse_matrix(format_matrix(mat(1, 1, {-0.0}))),
                      mat(1, 1, {-0.0})));
}

TEST_CASE("SplitMix64 reference sequence", "[io][rng]") {
  SplitMix64 rng(1234567);
  CHECK(rng.next() == 6457827717110365317ULL);
  CHECK(rng.next() == 3203168211198807973ULL);
  CHECK(rng.next() == 9817491932198370423ULL);
  CHECK(rng.next() == 4593380528125082431ULL);
  CHECK(rng.next() == 16408922859458223821ULL);

  SplitMix64 bounded(9);
  for (int i = 0; i < 1000; ++i) {
    const auto v = bounded.uniform_int(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
  }
  CHECK(bounded.uniform_int(5, 5) == 5);
}

TEST_CASE("generator config validation", "[io][generator]") {
  GeneratorConfig cfg;
  cfg.entry_low = 3;
  cfg.entry_high = 2;
  CHECK_THROWS_AS(generate_instance(cfg), std::invalid_argument);
  cfg = {};
  cfg.neginf_density = 1.0;
  CHECK_THROWS_AS(generate_instance(cfg), std::invalid_argument);
  cfg = {};
  cfg.p = 0;
  CHECK_THROWS_AS(generate_instance(cfg), std::invalid_argument);
}

TEST_CASE("generator is deterministic and keeps its invariants",
          "[io][generator]") {
  for (double density : {0.0, 0.1, 0.5, 0.9}) {
    for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 0xdeadbeefULL}) {
      GeneratorConfig cfg;
      cfg.m = 4;
      cfg.n = 3;
      cfg.p = 3;
      cfg.seed = seed;
      cfg.neginf_density = density;
      const GeneratedInstance x = generate_instance(cfg);
      const GeneratedInstance y = generate_instance(cfg);
      for (Index k = 0; k < cfg.p; ++k) {
        CHECK(format_matrix(x.instance.a[k]) == format_matrix(y.instance.a[k]));
        CHECK(format_matrix(x.instance.b[k]) == format_matrix(y.instance.b[k]));
        CHECK(is_doubly_r_astic(x.instance.a[k]));
        CHECK(is_doubly_r_astic(x.instance.b[k]));
      }
      CHECK(format_matrix(x.instance.c) == format_matrix(y.instance.c));
      REQUIRE(x.witness);
      CHECK(solve_sylvester(x.instance).solvable);
      CHECK(entrywise_leq(*x.witness, solve_sylvester(x.instance).principal));

      cfg.mode = GeneratorMode::kRawRandom;
      const GeneratedInstance raw = generate_instance(cfg);
      CHECK_FALSE(raw.witness);
      CHECK(raw.instance.c.unaryExpr([](ExtendedReal v) { return v.is_finite(); }).all());
    }
  }
}

TEST_CASE("instance files", "[io]") {
  const auto dir = scratch_dir("files");
  GeneratorConfig cfg;
  cfg.m = 3;
  cfg.n = 2;
  cfg.p = 2;
  cfg.seed = 42;
  const GeneratedInstance gen = generate_instance(cfg);
  write_instance(dir, gen.instance, gen.witness);
  CHECK(std::filesystem::exists(dir / "X0.txt"));

  const InstanceFileSet files = InstanceFileSet::in_directory(dir);
  REQUIRE(files.a.size() == 2);
  const SylvesterInstance back = read_instance(files);
  CHECK(back.c == gen.instance.c);
  CHECK(back.a[1] == gen.instance.a[1]);
  CHECK(back.b[0] == gen.instance.b[0]);
  CHECK(slurp(dir / "C.txt") == format_matrix(gen.instance.c));

  InstanceFileSet broken = files;
  broken.b.pop_back();
  CHECK_THROWS_AS(read_instance(broken), ShapeError);
  broken = files;
  broken.a[0] = files.c;
  CHECK_THROWS_AS(read_instance(broken), ShapeError);
  CHECK_THROWS_AS(read_matrix_file(dir / "missing.txt"), std::runtime_error);

  {
    std::ofstream bad(dir / "bad.txt");
    bad << "2 2\n1 2\n3\n";
  }
  CHECK_THROWS_WITH(read_matrix_file(dir / "bad.txt"),
                    Catch::Matchers::ContainsSubstring("bad.txt") &&
                        Catch::Matchers::ContainsSubstring("line 3"));
  std::filesystem::remove_all(dir);
}

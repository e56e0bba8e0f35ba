#ifndef MAXPLUS_INSTANCE_IO_HPP_
#define MAXPLUS_INSTANCE_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "maxplus/matrix.hpp"
#include "maxplus/solver.hpp"

namespace maxplus {

// Matrix text format
// ------------------
// First line `rows cols`, then one line per row with entries separated by
// single spaces. Entries are decimal literals, `-inf` or `+inf`. Lines whose
// first non-blank character is `#` and blank lines are skipped. Output always
// ends with a newline; on input the final newline is optional.

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& detail,
             const std::string& source = {})
      : std::runtime_error((source.empty() ? "" : source + ": ") + "line " +
                           std::to_string(line) + ": " + detail),
        line_(line),
        detail_(detail) {}
  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

TropicalMatrix parse_matrix(std::string_view text);
std::string format_matrix(const TropicalMatrix& m);

/// Throws std::runtime_error when the file cannot be read, ParseError when
/// it is malformed (the message carries the path).
TropicalMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path,
                       const TropicalMatrix& m);

/// Paths of the p A-files, the p B-files and the C-file, in term order.
struct InstanceFileSet {
  std::vector<std::filesystem::path> a;
  std::vector<std::filesystem::path> b;
  std::filesystem::path c;

  /// A1.txt..Ap.txt, B1.txt..Bp.txt and C.txt inside `dir`.
  static InstanceFileSet in_directory(const std::filesystem::path& dir);
};

/// Reads and validates an instance. Throws ShapeError on inconsistent files.
SylvesterInstance read_instance(const InstanceFileSet& files);

/// Writes A1..Ap, B1..Bp, C and, when given, X0 into `dir` (created if
/// missing).
void write_instance(const std::filesystem::path& dir,
                    const SylvesterInstance& inst,
                    const std::optional<TropicalMatrix>& witness);

/**
 * SplitMix64 (Steele, Lea and Flood 2014), the generator behind every
 * random instance.
 *
 * The state advances by 0x9e3779b97f4a7c15 per draw and each output is the
 * standard mix64 finalizer of the new state. split() seeds a child stream
 * with the parent's next output. Sequences are fixed across releases.
 */
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  SplitMix64 split() noexcept { return SplitMix64(next()); }

  /// Uniform integer in [lo, hi] by rejection of the biased low tail.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) noexcept;

  /// Uniform double in [0, 1) from the top 53 bits of one draw.
  double uniform01() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

enum class GeneratorMode { kSolvableByConstruction, kRawRandom };

struct GeneratorConfig {
  Index m = 1;
  Index n = 1;
  Index p = 1;
  std::uint64_t seed = 0;
  std::int64_t entry_low = -10;
  std::int64_t entry_high = 10;
  // Probability that an entry of Aₖ or Bₖ is NEG_INF. X₀ and C are finite.
  double neginf_density = 0.0;
  GeneratorMode mode = GeneratorMode::kSolvableByConstruction;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

struct GeneratedInstance {
  SylvesterInstance instance;
  std::optional<TropicalMatrix> witness;
};

/**
 * Deterministic for a fixed config. Draw order from SplitMix64(seed):
 * for k = 1..p, Aₖ from one split stream and then Bₖ from the next; finally
 * X₀ (construction mode) or C (raw mode) from a last split stream. Entries
 * are drawn column by column. Any all-NEG_INF row of Aₖ or Bₖ is redrawn,
 * then any all-NEG_INF column, until the factor is doubly R-astic.
 * In construction mode C = ⊕ₖ Aₖ ⊗ X₀ ⊗ Bₖ.
 */
GeneratedInstance generate_instance(const GeneratorConfig& config);

/// Random rows×cols matrix with the generator's entry rules; used by tests.
TropicalMatrix random_matrix(SplitMix64& rng, Index rows, Index cols,
                             std::int64_t lo, std::int64_t hi,
                             double neginf_density);

std::string_view to_string(GeneratorMode mode);
std::optional<GeneratorMode> parse_generator_mode(std::string_view text);

}  // namespace maxplus

#endif  // MAXPLUS_INSTANCE_IO_HPP_

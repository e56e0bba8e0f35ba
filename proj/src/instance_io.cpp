#include "maxplus/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace maxplus {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const std::size_t start = line.find_first_not_of(" \t\r", pos);
    if (start == std::string_view::npos) {
      break;
    }
    std::size_t end = line.find_first_of(" \t\r", start);
    if (end == std::string_view::npos) {
      end = line.size();
    }
    fields.push_back(line.substr(start, end - start));
    pos = end;
  }
  return fields;
}

Index parse_dimension(std::string_view field, std::size_t line_no) {
  Index v = 0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size() || v < 1) {
    throw ParseError(line_no, "invalid dimension '" + std::string(field) + "'");
  }
  return v;
}

// Draws one entry of a factor matrix.
ExtendedReal draw_entry(SplitMix64& rng, std::int64_t lo, std::int64_t hi,
                        double neginf_density) {
  if (neginf_density > 0.0 && rng.uniform01() < neginf_density) {
    return kNegInf;
  }
  return ExtendedReal(static_cast<double>(rng.uniform_int(lo, hi)));
}

bool all_neg_inf(const auto& v) {
  return v.unaryExpr([](ExtendedReal x) { return x.is_neg_inf(); }).all();
}

}  // namespace

TropicalMatrix parse_matrix(std::string_view text) {
  std::optional<TropicalMatrix> m;
  Index row = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#') {
      continue;
    }
    if (!m) {
      if (fields.size() != 2) {
        throw ParseError(line_no, "header must be 'rows cols'");
      }
      const Index rows = parse_dimension(fields[0], line_no);
      const Index cols = parse_dimension(fields[1], line_no);
      m.emplace(rows, cols);
      continue;
    }
    if (row >= m->rows()) {
      throw ParseError(line_no, "more than the declared " +
                                    std::to_string(m->rows()) + " rows");
    }
    if (static_cast<Index>(fields.size()) != m->cols()) {
      throw ParseError(line_no, "row has " + std::to_string(fields.size()) +
                                    " entries, expected " +
                                    std::to_string(m->cols()));
    }
    for (Index j = 0; j < m->cols(); ++j) {
      try {
        (*m)(row, j) = parse_scalar(fields[static_cast<std::size_t>(j)]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
    }
    ++row;
  }
  if (!m) {
    throw ParseError(line_no, "missing 'rows cols' header");
  }
  if (row != m->rows()) {
    throw ParseError(line_no, "expected " + std::to_string(m->rows()) +
                                  " rows, found " + std::to_string(row));
  }
  return *m;
}

std::string format_matrix(const TropicalMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) +
                    "\n";
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j > 0) {
        out += ' ';
      }
      out += format_scalar(m(i, j));
    }
    out += '\n';
  }
  return out;
}

TropicalMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_matrix(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.detail(), path.string());
  }
}

void write_matrix_file(const std::filesystem::path& path,
                       const TropicalMatrix& m) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << format_matrix(m);
  out.flush();
  if (!out) {
    throw std::runtime_error("cannot write '" + path.string() + "'");
  }
}

InstanceFileSet InstanceFileSet::in_directory(
    const std::filesystem::path& dir) {
  InstanceFileSet files;
  for (int k = 1; std::filesystem::exists(dir / ("A" + std::to_string(k) + ".txt"));
       ++k) {
    files.a.push_back(dir / ("A" + std::to_string(k) + ".txt"));
    files.b.push_back(dir / ("B" + std::to_string(k) + ".txt"));
  }
  files.c = dir / "C.txt";
  return files;
}

SylvesterInstance read_instance(const InstanceFileSet& files) {
  if (files.a.size() != files.b.size()) {
    throw ShapeError("instance: " + std::to_string(files.a.size()) +
                     " A files but " + std::to_string(files.b.size()) +
                     " B files");
  }
  SylvesterInstance inst;
  for (const auto& path : files.a) {
    inst.a.push_back(read_matrix_file(path));
  }
  for (const auto& path : files.b) {
    inst.b.push_back(read_matrix_file(path));
  }
  inst.c = read_matrix_file(files.c);
  inst.validate();
  return inst;
}

void write_instance(const std::filesystem::path& dir,
                    const SylvesterInstance& inst,
                    const std::optional<TropicalMatrix>& witness) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw std::runtime_error("cannot create '" + dir.string() +
                             "': " + ec.message());
  }
  for (Index k = 0; k < inst.terms(); ++k) {
    const std::string idx = std::to_string(k + 1);
    write_matrix_file(dir / ("A" + idx + ".txt"), inst.a[k]);
    write_matrix_file(dir / ("B" + idx + ".txt"), inst.b[k]);
  }
  write_matrix_file(dir / "C.txt", inst.c);
  if (witness) {
    write_matrix_file(dir / "X0.txt", *witness);
  }
}

std::int64_t SplitMix64::uniform_int(std::int64_t lo, std::int64_t hi) noexcept {
  const std::uint64_t span = static_cast<std::uint64_t>(hi) -
                             static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) {
    return static_cast<std::int64_t>(next());
  }
  const std::uint64_t threshold = (0 - span) % span;
  std::uint64_t r = next();
  while (r < threshold) {
    r = next();
  }
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + r % span);
}

void GeneratorConfig::validate() const {
  if (m < 1 || n < 1 || p < 1) {
    throw std::invalid_argument("generator: m, n and p must be positive");
  }
  if (entry_low > entry_high) {
    throw std::invalid_argument("generator: entry_low exceeds entry_high");
  }
  if (!(neginf_density >= 0.0 && neginf_density < 1.0)) {
    throw std::invalid_argument("generator: neginf_density must be in [0, 1)");
  }
}

TropicalMatrix random_matrix(SplitMix64& rng, Index rows, Index cols,
                             std::int64_t lo, std::int64_t hi,
                             double neginf_density) {
  TropicalMatrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      m(i, j) = draw_entry(rng, lo, hi, neginf_density);
    }
  }
  return m;
}

namespace {

TropicalMatrix random_factor(SplitMix64 rng, Index size,
                             const GeneratorConfig& cfg) {
  TropicalMatrix m = random_matrix(rng, size, size, cfg.entry_low,
                                   cfg.entry_high, cfg.neginf_density);
  // Redrawing an all-NEG_INF line only turns NEG_INF entries finite, so the
  // column pass cannot undo the row pass.
  for (Index i = 0; i < size; ++i) {
    while (all_neg_inf(m.row(i))) {
      for (Index j = 0; j < size; ++j) {
        m(i, j) = draw_entry(rng, cfg.entry_low, cfg.entry_high,
                             cfg.neginf_density);
      }
    }
  }
  for (Index j = 0; j < size; ++j) {
    while (all_neg_inf(m.col(j))) {
      for (Index i = 0; i < size; ++i) {
        m(i, j) = draw_entry(rng, cfg.entry_low, cfg.entry_high,
                             cfg.neginf_density);
      }
    }
  }
  return m;
}

}  // namespace

GeneratedInstance generate_instance(const GeneratorConfig& config) {
  config.validate();
  SplitMix64 root(config.seed);
  GeneratedInstance out;
  SylvesterInstance& inst = out.instance;
  for (Index k = 0; k < config.p; ++k) {
    inst.a.push_back(random_factor(root.split(), config.m, config));
    inst.b.push_back(random_factor(root.split(), config.n, config));
  }
  SplitMix64 last = root.split();
  const TropicalMatrix finite = random_matrix(
      last, config.m, config.n, config.entry_low, config.entry_high, 0.0);
  if (config.mode == GeneratorMode::kSolvableByConstruction) {
    inst.c = TropicalMatrix::Constant(config.m, config.n, kNegInf);
    inst.c = sylvester_apply(inst, finite);
    out.witness = finite;
  } else {
    inst.c = finite;
  }
  return out;
}

std::string_view to_string(GeneratorMode mode) {
  return mode == GeneratorMode::kSolvableByConstruction ? "solvable" : "raw";
}

std::optional<GeneratorMode> parse_generator_mode(std::string_view text) {
  if (text == "solvable" || text == "solvable_by_construction") {
    return GeneratorMode::kSolvableByConstruction;
  }
  if (text == "raw" || text == "raw_random") {
    return GeneratorMode::kRawRandom;
  }
  return std::nullopt;
}

}  // namespace maxplus

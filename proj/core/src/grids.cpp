#include "sincstab/grids.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace sincstab {

const char* to_string(GridKind kind) {
  switch (kind) {
    case GridKind::power_law: return "power_law";
    case GridKind::uniform_offset: return "uniform_offset";
    case GridKind::complex_offset: return "complex_offset";
    case GridKind::ingham: return "ingham";
    case GridKind::explicit_list: return "explicit";
  }
  return "unknown";
}

PerturbedGrid::PerturbedGrid(GridKind kind, std::vector<int> indices,
                             std::vector<std::complex<double>> nodes, GridParams params)
    : PerturbedGrid(kind, std::move(indices), std::move(nodes), {}, std::move(params)) {}

PerturbedGrid::PerturbedGrid(GridKind kind, std::vector<int> indices,
                             std::vector<std::complex<double>> nodes,
                             std::vector<std::complex<double>> offsets, GridParams params)
    : kind_(kind), indices_(std::move(indices)), nodes_(std::move(nodes)),
      offsets_(std::move(offsets)), params_(std::move(params)) {
  if (indices_.empty()) throw std::invalid_argument("PerturbedGrid: empty index set");
  if (indices_.size() != nodes_.size()) {
    throw std::invalid_argument("PerturbedGrid: indices and nodes differ in length");
  }
  for (std::size_t i = 1; i < indices_.size(); ++i) {
    if (indices_[i] <= indices_[i - 1]) {
      throw std::invalid_argument("PerturbedGrid: indices must be strictly increasing");
    }
  }
  for (const auto& z : nodes_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("PerturbedGrid: non-finite node");
    }
    if (z.imag() != 0.0) real_ = false;
  }
  if (offsets_.empty()) {
    offsets_.resize(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      offsets_[i] = nodes_[i] - static_cast<double>(indices_[i]);
    }
  } else if (offsets_.size() != nodes_.size()) {
    throw std::invalid_argument("PerturbedGrid: offsets and nodes differ in length");
  }
}

std::vector<double> PerturbedGrid::real_nodes() const {
  std::vector<double> out(nodes_.size());
  std::transform(nodes_.begin(), nodes_.end(), out.begin(), [](auto z) { return z.real(); });
  return out;
}

int PerturbedGrid::radius() const {
  return std::max(std::abs(indices_.front()), std::abs(indices_.back()));
}

PerturbedGrid power_law_grid(double amplitude, double exponent, int n_max,
                             bool extend_nonpositive) {
  if (!(amplitude > 0.0) || !std::isfinite(amplitude)) {
    throw std::domain_error("power_law_grid: amplitude A must be positive");
  }
  if (!(exponent > 0.5) || !std::isfinite(exponent)) {
    throw std::domain_error("power_law_grid: exponent must exceed 1/2");
  }
  if (n_max < 1) throw std::domain_error("power_law_grid: N must be at least 1");

  const int first = extend_nonpositive ? -n_max : 1;
  std::vector<int> indices(static_cast<std::size_t>(n_max - first + 1));
  std::iota(indices.begin(), indices.end(), first);

  std::vector<std::complex<double>> nodes;
  std::vector<std::complex<double>> offsets;
  nodes.reserve(indices.size());
  offsets.reserve(indices.size());
  for (int n : indices) {
    const double dn = n;
    const double off = n >= 1 ? amplitude / std::pow(dn, exponent) : 0.0;
    nodes.emplace_back(dn + off, 0.0);
    offsets.emplace_back(off, 0.0);
  }
  return {GridKind::power_law, std::move(indices), std::move(nodes), std::move(offsets),
          GridParams{amplitude, exponent, extend_nonpositive, {}}};
}

PerturbedGrid uniform_offset_grid(std::span<const std::complex<double>> offsets,
                                  IndexRange base) {
  if (base.empty()) throw std::invalid_argument("uniform_offset_grid: empty index range");
  if (offsets.size() != base.size()) {
    throw std::invalid_argument("uniform_offset_grid: offsets do not match index range");
  }
  std::vector<int> indices(base.size());
  std::iota(indices.begin(), indices.end(), base.first);
  std::vector<std::complex<double>> nodes(base.size());
  bool complex = false;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto off = offsets[i];
    if (!std::isfinite(off.real()) || !std::isfinite(off.imag())) {
      throw std::invalid_argument("uniform_offset_grid: non-finite offset");
    }
    complex = complex || off.imag() != 0.0;
    nodes[i] = static_cast<double>(indices[i]) + off;
  }
  return {complex ? GridKind::complex_offset : GridKind::uniform_offset, std::move(indices),
          std::move(nodes), std::vector<std::complex<double>>(offsets.begin(), offsets.end())};
}

PerturbedGrid uniform_offset_grid(std::span<const double> offsets, IndexRange base) {
  std::vector<std::complex<double>> promoted(offsets.begin(), offsets.end());
  return uniform_offset_grid(promoted, base);
}

PerturbedGrid constant_offset_grid(std::complex<double> offset, IndexRange base) {
  std::vector<std::complex<double>> offsets(base.size(), offset);
  return uniform_offset_grid(offsets, base);
}

PerturbedGrid ingham_grid(int n_max) {
  if (n_max < 1) throw std::domain_error("ingham_grid: N must be at least 1");
  std::vector<int> indices(static_cast<std::size_t>(2 * n_max + 1));
  std::iota(indices.begin(), indices.end(), -n_max);
  std::vector<std::complex<double>> nodes;
  std::vector<std::complex<double>> offsets;
  nodes.reserve(indices.size());
  offsets.reserve(indices.size());
  for (int n : indices) {
    const double shift = n > 0 ? 0.25 : (n < 0 ? -0.25 : 0.0);
    nodes.emplace_back(static_cast<double>(n) + shift, 0.0);
    offsets.emplace_back(shift, 0.0);
  }
  return {GridKind::ingham, std::move(indices), std::move(nodes), std::move(offsets)};
}

GridParseError::GridParseError(const std::string& source, int line, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message), line_(line) {}

namespace {

double parse_real(const std::string& token, const std::string& source, int line) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    throw GridParseError(source, line, "cannot parse number '" + token + "'");
  }
  if (used != token.size()) {
    throw GridParseError(source, line, "trailing characters in '" + token + "'");
  }
  if (!std::isfinite(value)) throw GridParseError(source, line, "non-finite node");
  return value;
}

}  // namespace

PerturbedGrid parse_grid(std::istream& in, const std::string& source) {
  struct Record {
    int index;
    std::complex<double> node;
    int line;
  };
  std::vector<Record> records;
  std::string text;
  int line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    std::istringstream fields(text);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() < 2 || tokens.size() > 3) {
      throw GridParseError(source, line_no, "expected 'index re [im]'");
    }

    std::size_t used = 0;
    long index = 0;
    try {
      index = std::stol(tokens[0], &used);
    } catch (const std::exception&) {
      throw GridParseError(source, line_no, "cannot parse index '" + tokens[0] + "'");
    }
    if (used != tokens[0].size() || index < -1'000'000'000 || index > 1'000'000'000) {
      throw GridParseError(source, line_no, "invalid index '" + tokens[0] + "'");
    }
    const double re = parse_real(tokens[1], source, line_no);
    const double im = tokens.size() == 3 ? parse_real(tokens[2], source, line_no) : 0.0;
    records.push_back({static_cast<int>(index), {re, im}, line_no});
  }
  if (records.empty()) throw GridParseError(source, line_no, "no grid records");

  std::stable_sort(records.begin(), records.end(),
                   [](const Record& a, const Record& b) { return a.index < b.index; });
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].index == records[i - 1].index) {
      throw GridParseError(source, records[i].line,
                           "duplicate index " + std::to_string(records[i].index));
    }
  }

  std::vector<int> indices;
  std::vector<std::complex<double>> nodes;
  indices.reserve(records.size());
  nodes.reserve(records.size());
  for (const auto& r : records) {
    indices.push_back(r.index);
    nodes.push_back(r.node);
  }
  return {GridKind::explicit_list, std::move(indices), std::move(nodes),
          GridParams{0.0, 0.0, false, source}};
}

PerturbedGrid grid_from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("grid_from_file: cannot open " + path.string());
  return parse_grid(in, path.string());
}

double max_deviation(const PerturbedGrid& grid) {
  double worst = 0.0;
  for (const auto& off : grid.offsets()) worst = std::max(worst, std::abs(off));
  return worst;
}

}  // namespace sincstab

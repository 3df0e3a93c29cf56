// Perturbed sampling sequences {lambda_n} and their loaders.

#pragma once

#include <complex>
#include <filesystem>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sincstab {

/// Inclusive integer interval [first, last].
struct IndexRange {
  int first = 0;
  int last = -1;

  [[nodiscard]] bool empty() const { return last < first; }
  [[nodiscard]] std::size_t size() const {
    return empty() ? 0 : static_cast<std::size_t>(last - first) + 1;
  }
  [[nodiscard]] bool contains(int k) const { return first <= k && k <= last; }
  [[nodiscard]] bool contains(const IndexRange& other) const {
    return other.empty() || (first <= other.first && other.last <= last);
  }

  static IndexRange symmetric(int radius) { return {-radius, radius}; }
  static IndexRange one_sided(int n) { return {1, n}; }

  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

enum class GridKind { power_law, uniform_offset, complex_offset, ingham, explicit_list };

const char* to_string(GridKind kind);

struct GridParams {
  double amplitude = 0.0;      // A for power-law grids
  double exponent = 0.0;       // alpha for power-law grids
  bool extend_nonpositive = false;
  std::string source;          // file path for explicit grids
};

/// Immutable sampling set. nodes[i] is lambda_{indices[i]}; indices are
/// strictly increasing.
class PerturbedGrid {
 public:
  PerturbedGrid(GridKind kind, std::vector<int> indices, std::vector<std::complex<double>> nodes,
                GridParams params = {});
  /// As above with the exact offsets lambda_n - n supplied by the generator,
  /// so that deviations are not polluted by the rounding of n + offset.
  PerturbedGrid(GridKind kind, std::vector<int> indices, std::vector<std::complex<double>> nodes,
                std::vector<std::complex<double>> offsets, GridParams params = {});

  [[nodiscard]] GridKind kind() const { return kind_; }
  [[nodiscard]] const GridParams& params() const { return params_; }
  [[nodiscard]] std::span<const int> indices() const { return indices_; }
  [[nodiscard]] std::span<const std::complex<double>> nodes() const { return nodes_; }
  [[nodiscard]] std::size_t size() const { return nodes_.size(); }
  /// offsets[i] = lambda_{indices[i]} - indices[i].
  [[nodiscard]] std::span<const std::complex<double>> offsets() const { return offsets_; }

  /// True when every node has zero imaginary part.
  [[nodiscard]] bool is_real() const { return real_; }
  /// Real parts of the nodes; meaningful for real grids.
  [[nodiscard]] std::vector<double> real_nodes() const;

  /// Smallest interval containing every index.
  [[nodiscard]] IndexRange span_range() const { return {indices_.front(), indices_.back()}; }
  /// max |k| over listed indices.
  [[nodiscard]] int radius() const;

 private:
  GridKind kind_;
  std::vector<int> indices_;
  std::vector<std::complex<double>> nodes_;
  std::vector<std::complex<double>> offsets_;
  GridParams params_;
  bool real_ = true;
};

/// lambda_n = n + A / n^alpha for n = 1..N; with extend_nonpositive the
/// indices run over -N..N and lambda_n = n for n <= 0.
PerturbedGrid power_law_grid(double amplitude, double exponent, int n_max,
                             bool extend_nonpositive = false);

/// lambda_n = n + offsets[n - base.first].
PerturbedGrid uniform_offset_grid(std::span<const std::complex<double>> offsets, IndexRange base);
PerturbedGrid uniform_offset_grid(std::span<const double> offsets, IndexRange base);

/// Every node shifted by the same offset over `base`.
PerturbedGrid constant_offset_grid(std::complex<double> offset, IndexRange base);

/// lambda_n = n + 1/4 (n > 0), 0 (n = 0), n - 1/4 (n < 0) over -N..N.
PerturbedGrid ingham_grid(int n_max);

/// Thrown by the grid-file reader; carries the 1-based offending line.
class GridParseError : public std::runtime_error {
 public:
  GridParseError(const std::string& source, int line, const std::string& message);
  [[nodiscard]] int line() const { return line_; }

 private:
  int line_;
};

/// Reads `index<TAB>re[<TAB>im]` records; `#` starts a comment.
PerturbedGrid parse_grid(std::istream& in, const std::string& source = "<stream>");
PerturbedGrid grid_from_file(const std::filesystem::path& path);

/// max |lambda_n - n| over the listed indices.
double max_deviation(const PerturbedGrid& grid);

}  // namespace sincstab

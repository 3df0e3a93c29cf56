// Truncated synthesis and Gram matrices of perturbed sinc systems, and the
// numerical quantities behind the stability theorems: the perturbation
// operator norm ||S - I|| (the empirical Paley-Wiener constant) and the
// extremal Gram eigenvalues (Riesz bounds).
//
// The inner product is the plain Lebesgue one on the real line, under which
// {sinc(. - n)} is orthonormal. A perturbed atom sinc(. - lambda_n) expands
// as sum_k sinc(lambda_n - k) sinc(. - k), so on a finite row window the
// synthesis operator is the matrix S(k, n) = sinc(lambda_n - k).

#pragma once

#include <cstdint>
#include <ostream>
#include <variant>
#include <vector>

#include "sincstab/bounds.hpp"
#include "sincstab/grids.hpp"
#include "sincstab/linalg.hpp"

namespace sincstab {

struct TruncationWindow {
  IndexRange rows;
  IndexRange cols;
  double norm_tolerance = 1e-10;
  int max_iterations = 10'000;
  std::uint64_t seed = 0x5eed;

  void validate() const;
};

inline constexpr int kMaxDefaultRows = 4001;

/// Rows span the grid range padded by four grid radii, capped at 4001 rows;
/// columns span the grid range.
TruncationWindow default_window(const PerturbedGrid& grid);

/// Rows -radius..radius; columns span the grid range.
TruncationWindow window_with_radius(const PerturbedGrid& grid, int radius);

using RealMatrix = linalg::Matrix<double>;
using ComplexMatrix = linalg::Matrix<std::complex<double>>;
using DenseMatrix = std::variant<RealMatrix, ComplexMatrix>;

struct SynthesisMatrix {
  TruncationWindow window;
  std::vector<int> row_indices;
  std::vector<int> col_indices;  // grid indices, one column per node
  DenseMatrix entries;

  [[nodiscard]] bool is_complex() const {
    return std::holds_alternative<ComplexMatrix>(entries);
  }
};

struct GramSummary {
  TruncationWindow window;
  double perturbation_norm = 0.0;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  // (1 - delta)^2 and (1 + delta)^2 when delta < 1; lower is 0 otherwise.
  double implied_riesz_lower = 0.0;
  double implied_riesz_upper = 0.0;
  int iterations_used = 0;        // power iterations for the norm
  int eigen_iterations = 0;       // Lanczos steps (1 for a dense solve)
  bool norm_converged = false;
  bool eigen_converged = false;
  bool converged = false;
};

enum class GramRoute {
  analytic_real,      // G(m, n) = sinc(lambda_m - lambda_n)
  synthesis_product,  // G = S^H S on the row window
};

const char* to_string(GramRoute route);

struct GramMatrix {
  GramRoute route;
  DenseMatrix entries;
};

/// S(k, n) = sinc(lambda_n - k) over window.rows x grid nodes.
SynthesisMatrix synthesis_matrix(const PerturbedGrid& grid, const TruncationWindow& window);

/// S - I with I(k, n) = [k == n], the matrix whose norm is the empirical
/// Paley-Wiener constant.
DenseMatrix perturbation_matrix(const PerturbedGrid& grid, const TruncationWindow& window);

/// ||S - I||_2 by power iteration; only the norm fields of the summary are set.
GramSummary perturbation_norm(const PerturbedGrid& grid, const TruncationWindow& window);

/// Analytic Gram for real grids. Complex grids take the S^H S route on `window`.
GramMatrix gram_matrix(const PerturbedGrid& grid, const TruncationWindow& window);

/// Gram sizes up to this use a dense eigensolver; larger ones use Lanczos.
inline constexpr Eigen::Index kDenseEigenLimit = 1000;

/// Extremal Gram eigenvalues plus the perturbation norm and implied bounds.
GramSummary riesz_bounds_estimate(const PerturbedGrid& grid, const TruncationWindow& window);

struct PaleyWienerReport {
  BoundReport verdict;               // bound_name == numerical_norm
  GramSummary norm;                  // norm fields only
  std::vector<BoundReport> analytic; // closed-form estimates for the same grid
};

/// Numerical Paley-Wiener test: lambda = ||S - I||, passing when lambda < 1
/// and the estimator converged. Real grids carry lemma_sum and Kadec
/// cross-references; complex grids carry complex_master at max_deviation.
PaleyWienerReport paley_wiener_check(const PerturbedGrid& grid, const TruncationWindow& window);

/// Same verdict built from a norm estimate already in hand.
PaleyWienerReport paley_wiener_from_norm(const PerturbedGrid& grid, const GramSummary& norm);

/// Row-major `k n re im` dump, one entry per line.
void write_matrix_dump(std::ostream& out, const SynthesisMatrix& matrix);

}  // namespace sincstab

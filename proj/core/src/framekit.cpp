#include "sincstab/framekit.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sincstab/specfun.hpp"

namespace sincstab {

namespace {

void require_fit(const PerturbedGrid& grid, const TruncationWindow& window) {
  window.validate();
  const IndexRange span = grid.span_range();
  if (!window.cols.contains(span)) {
    throw std::invalid_argument("window too small for grid: column range must contain " +
                                std::to_string(span.first) + ".." + std::to_string(span.last));
  }
  if (!window.rows.contains(span)) {
    throw std::invalid_argument("window too small for grid: row range must contain " +
                                std::to_string(span.first) + ".." + std::to_string(span.last));
  }
}

template <class Scalar>
linalg::Matrix<Scalar> fill_synthesis(const PerturbedGrid& grid, const IndexRange& rows,
                                      bool subtract_identity) {
  const auto nodes = grid.nodes();
  const auto idx = grid.indices();
  const auto n_rows = static_cast<Eigen::Index>(rows.size());
  const auto n_cols = static_cast<Eigen::Index>(nodes.size());
  linalg::Matrix<Scalar> m(n_rows, n_cols);
  for (Eigen::Index c = 0; c < n_cols; ++c) {
    const auto lambda = nodes[static_cast<std::size_t>(c)];
    for (Eigen::Index r = 0; r < n_rows; ++r) {
      const int k = rows.first + static_cast<int>(r);
      if constexpr (std::is_same_v<Scalar, double>) {
        m(r, c) = sinc(lambda.real() - k);
      } else {
        m(r, c) = sinc_complex(lambda - static_cast<double>(k));
      }
      if (subtract_identity && k == idx[static_cast<std::size_t>(c)]) m(r, c) -= Scalar(1.0);
    }
  }
  return m;
}

DenseMatrix build(const PerturbedGrid& grid, const IndexRange& rows, bool subtract_identity) {
  if (grid.is_real()) return fill_synthesis<double>(grid, rows, subtract_identity);
  return fill_synthesis<std::complex<double>>(grid, rows, subtract_identity);
}

}  // namespace

void TruncationWindow::validate() const {
  if (rows.empty() || cols.empty()) throw std::invalid_argument("TruncationWindow: empty range");
  if (!(norm_tolerance > 0.0)) {
    throw std::invalid_argument("TruncationWindow: norm_tolerance must be positive");
  }
  if (max_iterations < 1) {
    throw std::invalid_argument("TruncationWindow: max_iterations must be positive");
  }
}

TruncationWindow default_window(const PerturbedGrid& grid) {
  const IndexRange span = grid.span_range();
  const int pad = 4 * std::max(grid.radius(), 1);
  IndexRange rows{span.first - pad, span.last + pad};
  if (rows.size() > static_cast<std::size_t>(kMaxDefaultRows)) {
    const int centre = span.first + (span.last - span.first) / 2;
    const int half = kMaxDefaultRows / 2;
    rows = {std::min(centre - half, span.first), std::max(centre + half, span.last)};
  }
  return TruncationWindow{rows, span};
}

TruncationWindow window_with_radius(const PerturbedGrid& grid, int radius) {
  if (radius < 0) throw std::invalid_argument("window radius must be non-negative");
  return TruncationWindow{IndexRange::symmetric(radius), grid.span_range()};
}

const char* to_string(GramRoute route) {
  switch (route) {
    case GramRoute::analytic_real: return "analytic_real";
    case GramRoute::synthesis_product: return "synthesis_product";
  }
  return "unknown";
}

SynthesisMatrix synthesis_matrix(const PerturbedGrid& grid, const TruncationWindow& window) {
  require_fit(grid, window);
  SynthesisMatrix out{window, {}, {grid.indices().begin(), grid.indices().end()},
                      build(grid, window.rows, false)};
  out.row_indices.resize(window.rows.size());
  for (std::size_t r = 0; r < out.row_indices.size(); ++r) {
    out.row_indices[r] = window.rows.first + static_cast<int>(r);
  }
  return out;
}

DenseMatrix perturbation_matrix(const PerturbedGrid& grid, const TruncationWindow& window) {
  require_fit(grid, window);
  return build(grid, window.rows, true);
}

GramSummary perturbation_norm(const PerturbedGrid& grid, const TruncationWindow& window) {
  const DenseMatrix d = perturbation_matrix(grid, window);
  const auto est = std::visit(
      [&](const auto& m) {
        return linalg::spectral_norm_power(m, window.norm_tolerance, window.max_iterations,
                                           window.seed);
      },
      d);
  GramSummary out;
  out.window = window;
  out.perturbation_norm = est.norm;
  out.iterations_used = est.iterations;
  out.norm_converged = est.converged;
  out.converged = est.converged;
  return out;
}

GramMatrix gram_matrix(const PerturbedGrid& grid, const TruncationWindow& window) {
  if (grid.is_real()) {
    const auto lambda = grid.real_nodes();
    const auto n = static_cast<Eigen::Index>(lambda.size());
    RealMatrix g(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
      g(j, j) = 1.0;
      for (Eigen::Index i = j + 1; i < n; ++i) {
        const double v = sinc(lambda[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(j)]);
        g(i, j) = v;
        g(j, i) = v;
      }
    }
    return {GramRoute::analytic_real, std::move(g)};
  }
  const auto s = std::get<ComplexMatrix>(synthesis_matrix(grid, window).entries);
  ComplexMatrix g = s.adjoint() * s;
  return {GramRoute::synthesis_product, std::move(g)};
}

GramSummary riesz_bounds_estimate(const PerturbedGrid& grid, const TruncationWindow& window) {
  GramSummary out = perturbation_norm(grid, window);
  const GramMatrix gram = gram_matrix(grid, window);

  const auto eig = std::visit(
      [&](const auto& g) {
        if (g.rows() <= kDenseEigenLimit) return linalg::dense_extremal(g);
        constexpr int kMaxLanczosSteps = 600;
        return linalg::lanczos_extremal(g, window.norm_tolerance, kMaxLanczosSteps, window.seed);
      },
      gram.entries);

  out.min_eigenvalue = std::max(0.0, eig.min);
  out.max_eigenvalue = std::max(out.min_eigenvalue, eig.max);
  out.eigen_iterations = eig.iterations;
  out.eigen_converged = eig.converged;

  const double delta = out.perturbation_norm;
  out.implied_riesz_lower = delta < 1.0 ? (1.0 - delta) * (1.0 - delta) : 0.0;
  out.implied_riesz_upper = (1.0 + delta) * (1.0 + delta);
  out.converged = out.norm_converged && out.eigen_converged;
  return out;
}

PaleyWienerReport paley_wiener_check(const PerturbedGrid& grid, const TruncationWindow& window) {
  return paley_wiener_from_norm(grid, perturbation_norm(grid, window));
}

PaleyWienerReport paley_wiener_from_norm(const PerturbedGrid& grid, const GramSummary& norm) {
  PaleyWienerReport out;
  out.norm = norm;

  const double dev = max_deviation(grid);
  out.verdict.bound_name = BoundName::numerical_norm;
  out.verdict.inputs.deviation = dev;
  out.verdict.lambda_value = out.norm.perturbation_norm;
  out.verdict.threshold = 1.0;
  out.verdict.satisfies_pw = out.norm.perturbation_norm < 1.0 && out.norm.norm_converged;

  if (grid.is_real()) {
    out.analytic.push_back(lemma_sum_bound(grid));
    out.analytic.push_back(kadec_transfer_lambda(dev));
  } else {
    out.analytic.push_back(complex_master(dev));
  }
  return out;
}

void write_matrix_dump(std::ostream& out, const SynthesisMatrix& matrix) {
  const auto old_precision = out.precision(17);
  std::visit(
      [&](const auto& m) {
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
          for (Eigen::Index c = 0; c < m.cols(); ++c) {
            const std::complex<double> v = m(r, c);
            out << matrix.row_indices[static_cast<std::size_t>(r)] << ' '
                << matrix.col_indices[static_cast<std::size_t>(c)] << ' ' << v.real() << ' '
                << v.imag() << '\n';
          }
        }
      },
      matrix.entries);
  out.precision(old_precision);
}

}  // namespace sincstab

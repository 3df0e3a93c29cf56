// Iterative dense kernels shared by framekit and reconstruct:
// power iteration for the spectral norm, Lanczos for extremal eigenvalues of
// Hermitian matrices, and conjugate gradients for SPD systems.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <type_traits>
#include <vector>

namespace sincstab::linalg {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

struct NormEstimate {
  double norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct ExtremalEigen {
  double min = 0.0;
  double max = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct CgResult {
  Eigen::VectorXd x;
  int iterations = 0;
  double relative_residual = 0.0;
  bool converged = false;
  // Extremal Ritz values of the Lanczos tridiagonal implied by the CG
  // coefficients; estimates of the extreme eigenvalues of the operator.
  double ritz_min = 0.0;
  double ritz_max = 0.0;
};

/// Unit-norm start vector drawn from a fixed-seed generator.
template <class Scalar>
Vector<Scalar> random_unit_vector(Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Vector<Scalar> v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if constexpr (std::is_same_v<Scalar, double>) {
      v(i) = dist(rng);
    } else {
      const double re = dist(rng);
      const double im = dist(rng);
      v(i) = Scalar(re, im);
    }
  }
  return v / v.norm();
}

/// Largest singular value of `a` by power iteration on a^H a. Stops when
/// the eigen-residual ||a^H a v - theta v|| falls below tol * theta, which
/// places theta within a relative tol of an eigenvalue of a^H a.
template <class Scalar>
NormEstimate spectral_norm_power(const Matrix<Scalar>& a, double tol, int max_iterations,
                                 std::uint64_t seed) {
  NormEstimate out;
  if (a.size() == 0 || a.cwiseAbs().maxCoeff() == 0.0) {
    out.converged = true;
    return out;
  }
  Vector<Scalar> v = random_unit_vector<Scalar>(a.cols(), seed);
  double theta = 0.0;
  for (int it = 1; it <= max_iterations; ++it) {
    const Vector<Scalar> w = a * v;
    theta = w.squaredNorm();
    Vector<Scalar> u = a.adjoint() * w;
    const double residual = (u - theta * v).norm();
    out.iterations = it;
    if (residual <= tol * theta) {
      out.converged = true;
      break;
    }
    const double un = u.norm();
    if (un == 0.0) break;
    v = u / un;
  }
  out.norm = std::sqrt(theta);
  return out;
}

/// Extremal eigenvalues of a Hermitian matrix by Lanczos with full
/// reorthogonalization. Converged when both extreme Ritz pairs have
/// residual |beta_j s_j| <= tol * max|theta|.
template <class Scalar>
ExtremalEigen lanczos_extremal(const Matrix<Scalar>& a, double tol, int max_steps,
                               std::uint64_t seed) {
  ExtremalEigen out;
  const Eigen::Index n = a.rows();
  if (n == 0) {
    out.converged = true;
    return out;
  }
  const int steps = static_cast<int>(std::min<Eigen::Index>(n, std::max(max_steps, 1)));

  Matrix<Scalar> q(n, steps);
  std::vector<double> alpha;
  std::vector<double> beta;
  q.col(0) = random_unit_vector<Scalar>(n, seed);

  for (int j = 0; j < steps; ++j) {
    Vector<Scalar> w = a * q.col(j);
    alpha.push_back(std::real(q.col(j).dot(w)));
    // two passes of classical Gram-Schmidt against the whole basis
    for (int pass = 0; pass < 2; ++pass) {
      w -= q.leftCols(j + 1) * (q.leftCols(j + 1).adjoint() * w);
    }
    const double b = w.norm();

    const int m = j + 1;
    Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), m);
    Eigen::VectorXd sub(std::max(m - 1, 0));
    for (int i = 0; i + 1 < m; ++i) sub(i) = beta[static_cast<std::size_t>(i)];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
    tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    const auto& theta = tri.eigenvalues();
    const auto& s = tri.eigenvectors();
    out.min = theta(0);
    out.max = theta(m - 1);
    out.iterations = m;

    const double scale = std::max({std::fabs(out.min), std::fabs(out.max), 1e-300});
    const bool invariant = b <= 1e-14 * scale;
    const double res_min = b * std::fabs(s(m - 1, 0));
    const double res_max = b * std::fabs(s(m - 1, m - 1));
    if (invariant || m == n || (res_min <= tol * scale && res_max <= tol * scale)) {
      out.converged = true;
      break;
    }
    if (j + 1 < steps) {
      beta.push_back(b);
      q.col(j + 1) = w / b;
    }
  }
  return out;
}

/// Extremal eigenvalues from a full dense decomposition.
template <class Scalar>
ExtremalEigen dense_extremal(const Matrix<Scalar>& a) {
  ExtremalEigen out;
  out.converged = true;
  if (a.rows() == 0) return out;
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> es(a, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    out.converged = false;
    return out;
  }
  out.min = es.eigenvalues()(0);
  out.max = es.eigenvalues()(a.rows() - 1);
  out.iterations = 1;
  return out;
}

/// Unpreconditioned conjugate gradients for a symmetric positive definite
/// system. Reports the true final residual ||b - A x|| / ||b||.
CgResult conjugate_gradient(const Eigen::MatrixXd& a, const Eigen::VectorXd& b, double tol,
                            int max_iterations);

}  // namespace sincstab::linalg

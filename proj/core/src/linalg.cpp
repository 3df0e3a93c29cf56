#include "sincstab/linalg.hpp"

namespace sincstab::linalg {

namespace {

// Lanczos tridiagonal recovered from the CG step lengths and directions:
// T(j,j) = 1/alpha_j + beta_{j-1}/alpha_{j-1}, T(j,j+1) = sqrt(beta_j)/alpha_j.
void ritz_from_cg(const std::vector<double>& alphas, const std::vector<double>& betas,
                  CgResult& out) {
  const auto m = static_cast<Eigen::Index>(alphas.size());
  if (m == 0) return;
  Eigen::VectorXd diag(m);
  Eigen::VectorXd sub(std::max<Eigen::Index>(m - 1, 0));
  for (Eigen::Index j = 0; j < m; ++j) {
    diag(j) = 1.0 / alphas[static_cast<std::size_t>(j)];
    if (j > 0) {
      diag(j) += betas[static_cast<std::size_t>(j - 1)] / alphas[static_cast<std::size_t>(j - 1)];
      sub(j - 1) = std::sqrt(betas[static_cast<std::size_t>(j - 1)]) /
                   alphas[static_cast<std::size_t>(j - 1)];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
  tri.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  out.ritz_min = tri.eigenvalues()(0);
  out.ritz_max = tri.eigenvalues()(m - 1);
}

}  // namespace

CgResult conjugate_gradient(const Eigen::MatrixXd& a, const Eigen::VectorXd& b, double tol,
                            int max_iterations) {
  CgResult out;
  const Eigen::Index n = b.size();
  out.x = Eigen::VectorXd::Zero(n);
  const double b_norm = b.norm();
  if (b_norm == 0.0) {
    out.converged = true;
    return out;
  }

  std::vector<double> alphas;
  std::vector<double> betas;

  // The recurrence residual drifts from b - A x; a few restarts from the
  // true residual make the reported residual honest.
  constexpr int kMaxCycles = 4;
  for (int cycle = 0; cycle < kMaxCycles && out.iterations < max_iterations; ++cycle) {
    Eigen::VectorXd r = b - a * out.x;
    if (r.norm() <= tol * b_norm) break;
    Eigen::VectorXd p = r;
    double rho = r.squaredNorm();
    while (out.iterations < max_iterations) {
      const Eigen::VectorXd q = a * p;
      const double pq = p.dot(q);
      if (!(pq > 0.0)) break;  // not positive definite along p
      const double step = rho / pq;
      out.x += step * p;
      r -= step * q;
      ++out.iterations;
      if (cycle == 0) alphas.push_back(step);

      const double rho_next = r.squaredNorm();
      if (std::sqrt(rho_next) <= tol * b_norm) break;
      const double beta = rho_next / rho;
      if (cycle == 0) betas.push_back(beta);
      p = r + beta * p;
      rho = rho_next;
    }
  }

  out.relative_residual = (b - a * out.x).norm() / b_norm;
  out.converged = out.relative_residual <= tol;
  ritz_from_cg(alphas, betas, out);
  return out;
}

}  // namespace sincstab::linalg

#include <doctest.h>

#include <complex>

#include "oracles.hpp"
#include "sincstab/linalg.hpp"

using namespace sincstab::linalg;

namespace {

Eigen::MatrixXd random_matrix(oracle::Gen& gen, Eigen::Index rows, Eigen::Index cols) {
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = gen.uniform(-1.0, 1.0);
  }
  return m;
}

Eigen::MatrixXcd random_complex_matrix(oracle::Gen& gen, Eigen::Index rows, Eigen::Index cols) {
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = {gen.uniform(-1.0, 1.0), gen.uniform(-1.0, 1.0)};
  }
  return m;
}

// SPD with eigenvalues spread over [lo, hi].
Eigen::MatrixXd random_spd(oracle::Gen& gen, Eigen::Index n, double lo, double hi) {
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(random_matrix(gen, n, n));
  const Eigen::MatrixXd q = qr.householderQ();
  Eigen::VectorXd d(n);
  for (Eigen::Index i = 0; i < n; ++i) d(i) = lo + (hi - lo) * i / std::max<Eigen::Index>(n - 1, 1);
  return q * d.asDiagonal() * q.transpose();
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("random_unit_vector is normalized and seed-deterministic") {
  const auto a = random_unit_vector<double>(50, 7);
  const auto b = random_unit_vector<double>(50, 7);
  const auto c = random_unit_vector<double>(50, 8);
  CHECK(a.norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(a == b);
  CHECK(a != c);
  CHECK(random_unit_vector<std::complex<double>>(20, 3).norm() ==
        doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("property: power iteration matches the largest singular value") {
  oracle::Gen gen(41);
  for (int trial = 0; trial < 30; ++trial) {
    const auto rows = gen.integer(1, 60);
    const auto cols = gen.integer(1, 40);
    if (trial % 2 == 0) {
      const auto m = random_matrix(gen, rows, cols);
      const auto est = spectral_norm_power<double>(m, 1e-12, 100'000, 5);
      CHECK(est.converged);
      CHECK(est.norm == doctest::Approx(oracle::spectral_norm(m)).epsilon(1e-10));
    } else {
      const auto m = random_complex_matrix(gen, rows, cols);
      const auto est = spectral_norm_power<std::complex<double>>(m, 1e-12, 100'000, 5);
      CHECK(est.converged);
      CHECK(est.norm == doctest::Approx(oracle::spectral_norm(m)).epsilon(1e-10));
    }
  }
}

TEST_CASE("power iteration edge cases") {
  const Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(4, 3);
  const auto z = spectral_norm_power<double>(zero, 1e-10, 10, 1);
  CHECK(z.norm == 0.0);
  CHECK(z.converged);

  // two nearly equal singular values and a one-step budget: honest failure
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(3, 3);
  d.diagonal() << 1.0, 0.999999, 0.5;
  const auto capped = spectral_norm_power<double>(d, 1e-14, 1, 1);
  CHECK_FALSE(capped.converged);
  CHECK(capped.iterations == 1);
  CHECK(capped.norm <= 1.0 + 1e-15);
}

TEST_CASE("property: Lanczos extremal eigenvalues match the dense solver") {
  oracle::Gen gen(42);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = gen.integer(2, 120);
    if (trial % 2 == 0) {
      const auto a = random_spd(gen, n, gen.uniform(0.1, 1.0), gen.uniform(1.5, 4.0));
      const auto lz = lanczos_extremal<double>(a, 1e-12, 400, 9);
      const auto de = dense_extremal<double>(a);
      CHECK(lz.converged);
      CHECK(lz.min == doctest::Approx(de.min).epsilon(1e-9));
      CHECK(lz.max == doctest::Approx(de.max).epsilon(1e-9));
    } else {
      const auto s = random_complex_matrix(gen, n + 5, n);
      const Eigen::MatrixXcd h = s.adjoint() * s;
      const auto lz = lanczos_extremal<std::complex<double>>(h, 1e-12, 400, 9);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
      CHECK(lz.converged);
      CHECK(lz.min == doctest::Approx(es.eigenvalues()(0)).epsilon(1e-8).scale(1.0));
      CHECK(lz.max == doctest::Approx(es.eigenvalues()(n - 1)).epsilon(1e-9));
    }
  }
}

TEST_CASE("property: CG solves SPD systems and its Ritz values sit inside the spectrum") {
  oracle::Gen gen(43);
  for (int trial = 0; trial < 25; ++trial) {
    const auto n = gen.integer(1, 80);
    const double lo = gen.uniform(0.05, 1.0);
    const double hi = gen.uniform(1.0, 5.0);
    const auto a = random_spd(gen, n, lo, hi);
    const Eigen::VectorXd b = random_matrix(gen, n, 1);
    const auto cg = conjugate_gradient(a, b, 1e-12, 10 * static_cast<int>(n));
    CHECK(cg.converged);
    CHECK(cg.relative_residual <= 1e-12);
    const Eigen::VectorXd x = oracle::dense_solve(a, b);
    CHECK((cg.x - x).norm() <= 1e-9 * std::max(1.0, x.norm()));
    CHECK(cg.ritz_min >= lo - 1e-9);
    CHECK(cg.ritz_max <= hi + 1e-9);
    CHECK(cg.ritz_min <= cg.ritz_max);
  }
}

TEST_CASE("CG reports failure honestly") {
  oracle::Gen gen(44);
  const auto a = random_spd(gen, 60, 1e-3, 10.0);
  const Eigen::VectorXd b = random_matrix(gen, 60, 1);
  const auto cg = conjugate_gradient(a, b, 1e-14, 3);
  CHECK_FALSE(cg.converged);
  CHECK(cg.iterations == 3);
  CHECK(cg.relative_residual == doctest::Approx((b - a * cg.x).norm() / b.norm()));

  const auto zero = conjugate_gradient(a, Eigen::VectorXd::Zero(60), 1e-10, 10);
  CHECK(zero.converged);
  CHECK(zero.x.norm() == 0.0);
}

}  // TEST_SUITE

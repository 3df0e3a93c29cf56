// Independent reference computations for the test suites. Nothing here calls
// into the library: scalar oracles run in 50-digit arithmetic, matrix
// oracles use dense decompositions.

#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using hp = boost::multiprecision::cpp_bin_float_50;

inline hp pi_hp() { return boost::math::constants::pi<hp>(); }

inline double sinc(double x) {
  if (x == 0.0) return 1.0;
  const hp px = pi_hp() * hp(x);
  return static_cast<double>(boost::multiprecision::sin(px) / px);
}

inline double one_minus_sinc(double x) {
  if (x == 0.0) return 0.0;
  const hp px = pi_hp() * hp(x);
  return static_cast<double>(1 - boost::multiprecision::sin(px) / px);
}

inline std::complex<double> sinc_complex(std::complex<double> z) {
  using boost::multiprecision::cos;
  using boost::multiprecision::cosh;
  using boost::multiprecision::sin;
  using boost::multiprecision::sinh;
  if (z == std::complex<double>(0.0, 0.0)) return 1.0;
  const hp a = pi_hp() * hp(z.real());
  const hp b = pi_hp() * hp(z.imag());
  // sin(a + ib) / (a + ib)
  const hp re = sin(a) * cosh(b);
  const hp im = cos(a) * sinh(b);
  const hp den = a * a + b * b;
  return {static_cast<double>((re * a + im * b) / den),
          static_cast<double>((im * a - re * b) / den)};
}

/// Bisection on a monotone function over [lo, hi] in 50-digit arithmetic.
inline hp bisect(const std::function<hp(const hp&)>& f, hp lo, hp hi, int steps = 200) {
  const bool rising = f(hi) > f(lo);
  for (int i = 0; i < steps; ++i) {
    const hp mid = (lo + hi) / 2;
    if ((f(mid) < 0) == rising) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

/// Solves xi e^xi = x for xi in [lo, hi] (one branch at a time).
inline double lambert_bisect(double x, double lo, double hi) {
  const hp target(x);
  return static_cast<double>(bisect(
      [&](const hp& xi) { return xi * boost::multiprecision::exp(xi) - target; }, hp(lo), hp(hi)));
}

/// Direct summation of n^{-s} for n = 1..terms plus the Euler-Maclaurin
/// correction of the tail up to N^{-s-1}; long double accumulation.
inline double zeta_direct(double s, long terms = 10'000'000) {
  long double acc = 0.0L;
  for (long n = terms; n >= 1; --n) acc += std::pow(static_cast<long double>(n), -s);
  const long double big_n = static_cast<long double>(terms);
  const long double tail = std::pow(big_n, 1.0L - s) / (s - 1.0L) - std::pow(big_n, -s) / 2.0L +
                           s * std::pow(big_n, -s - 1.0L) / 12.0L;
  return static_cast<double>(acc + tail);
}

/// sum_{n >= 2} n^{-s} in 50-digit arithmetic; practical for s >= 8.
inline double zeta_minus_one_hp(double s, int terms = 20'000) {
  hp acc = 0;
  for (int n = terms; n >= 2; --n) acc += boost::multiprecision::pow(hp(n), -hp(s));
  return static_cast<double>(acc);
}

/// sum_{k >= 1} x^k / (k+1)! until the terms vanish at 50 digits.
inline double master_series(double x) {
  hp term = hp(x) / 2;
  hp acc = 0;
  for (int k = 1; k < 400 && term > hp(1e-45) * (acc + 1); ++k) {
    acc += term;
    term *= hp(x) / (k + 2);
  }
  return static_cast<double>(acc);
}

inline double kadec(double l) {
  const hp pl = pi_hp() * hp(l);
  return static_cast<double>(1 - boost::multiprecision::cos(pl) + boost::multiprecision::sin(pl));
}

/// 2 sum_{n >= 1} [1 - sinc(A / n^alpha)] by direct summation over
/// n = 1..terms (Taylor series of 1 - sinc in long double) plus an
/// Euler-Maclaurin tail for the two leading Taylor orders.
inline double power_law_lambda(double a, double alpha, long terms = 1'000'000) {
  const long double pa = 3.14159265358979323846264338327950288L * a;
  auto one_minus_sinc = [](long double y) {  // y = pi x
    long double term = y * y / 6.0L;
    long double acc = 0.0L;
    for (int l = 1; l < 30; ++l) {
      acc += term;
      term *= -y * y / ((2.0L * l + 2.0L) * (2.0L * l + 3.0L));
    }
    return acc;
  };
  long double acc = 0.0L;
  for (long n = terms; n >= 1; --n) acc += one_minus_sinc(pa / std::pow(static_cast<long double>(n), alpha));
  const long double big_n = static_cast<long double>(terms);
  long double tail = 0.0L;
  const long double coeff[2] = {pa * pa / 6.0L, -pa * pa * pa * pa / 120.0L};
  for (int l = 0; l < 2; ++l) {
    const long double p = 2.0L * (l + 1) * alpha;  // term c n^{-p}
    const long double c = coeff[l];
    tail += c * (std::pow(big_n, 1.0L - p) / (p - 1.0L) - std::pow(big_n, -p) / 2.0L +
                 p * std::pow(big_n, -p - 1.0L) / 12.0L);
  }
  return static_cast<double>(2.0L * (acc + tail));
}

/// Largest singular value from a full SVD.
template <class M>
double spectral_norm(const M& m) {
  Eigen::JacobiSVD<M> svd(m);
  return svd.singularValues()(0);
}

/// G(m, n) = sinc(lambda_m - lambda_n) with oracle sinc.
inline Eigen::MatrixXd gram(const std::vector<double>& nodes) {
  const auto n = static_cast<Eigen::Index>(nodes.size());
  Eigen::MatrixXd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      g(i, j) = sinc(nodes[static_cast<std::size_t>(i)] - nodes[static_cast<std::size_t>(j)]);
    }
  }
  return g;
}

inline Eigen::VectorXd dense_solve(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  return a.colPivHouseholderQr().solve(b);
}

/// Hand-rolled generator for the property tests: a seeded engine plus the
/// draws the tests need.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  /// Finite doubles spread over many binades, both signs.
  double wide_double() {
    const double mag = std::pow(10.0, uniform(-12.0, 6.0));
    return coin() ? mag : -mag;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle

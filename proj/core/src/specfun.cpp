#include "sincstab/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace sincstab {

namespace {

constexpr double kE = std::numbers::e;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Inputs this far below -1/e are treated as the branch point itself.
constexpr double kBranchGuard = 1e-14;

// Below this distance from the branch point (in p = sqrt(2(1 + e x)))
// the Puiseux series is already exact to rounding.
constexpr double kSeriesOnlyRadius = 1e-3;

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw std::domain_error(std::string(what) + ": non-finite argument");
  }
}

// W(x) = -1 + p - p^2/3 + 11/72 p^3 - ... about x = -1/e, with
// p = +sqrt(2(1 + e x)) on W0 and p = -sqrt(...) on W-1.
double branch_point_series(double p) {
  constexpr std::array<double, 7> c = {
      -1.0, 1.0, -1.0 / 3.0, 11.0 / 72.0, -43.0 / 540.0, 769.0 / 17280.0, -221.0 / 8505.0};
  double acc = c.back();
  for (auto it = c.rbegin() + 1; it != c.rend(); ++it) acc = acc * p + *it;
  return acc;
}

double halley(double w, double x) {
  for (int iter = 0; iter < 64; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    if (f == 0.0 || wp1 == 0.0) break;
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    const double step = f / denom;
    w -= step;
    if (std::fabs(step) <= 4.0 * kEps * std::fabs(w)) break;
  }
  return w;
}

// Validates x against [-1/e, 0) and returns 1 + e x (clamped at 0).
double branch_distance(double x, const char* what) {
  require_finite(x, what);
  if (x >= 0.0) {
    throw std::domain_error(std::string(what) + ": argument must lie in [-1/e, 0)");
  }
  if (x < -kInvE - kBranchGuard) {
    throw std::domain_error(std::string(what) + ": argument below branch point -1/e");
  }
  if (x <= -kInvE) return 0.0;
  return std::max(0.0, std::fma(kE, x, 1.0));
}

}  // namespace

double sin_pi(double x) {
  const double sign = std::signbit(x) ? -1.0 : 1.0;
  double y = std::fmod(std::fabs(x), 2.0);
  double s = sign;
  if (y >= 1.0) {
    y -= 1.0;
    s = -s;
  }
  if (y > 0.5) y = 1.0 - y;
  const double r = (y < 0.25) ? std::sin(kPi * y) : std::cos(kPi * (0.5 - y));
  return s * r;
}

double cos_pi(double x) {
  double y = std::fmod(std::fabs(x), 2.0);
  double s = 1.0;
  if (y >= 1.0) {
    y -= 1.0;
    s = -s;
  }
  if (y > 0.5) {
    y = 1.0 - y;
    s = -s;
  }
  const double r = (y <= 0.25) ? std::cos(kPi * y) : std::sin(kPi * (0.5 - y));
  return s * r;
}

double sinc(double x) {
  require_finite(x, "sinc");
  if (x == 0.0) return 1.0;
  const double ax = std::fabs(x);
  return sin_pi(ax) / (kPi * ax);
}

double one_minus_sinc(double x) {
  require_finite(x, "one_minus_sinc");
  if (std::fabs(x) >= 0.1) return 1.0 - sinc(x);
  // sum_{l>=1} (-1)^{l+1} u^l / (2l+1)!, u = (pi x)^2 < 0.0987
  const double u = (kPi * x) * (kPi * x);
  double term = u / 6.0;
  double acc = 0.0;
  for (int l = 1; l <= 8; ++l) {
    acc += term;
    term *= -u / ((2.0 * l + 2.0) * (2.0 * l + 3.0));
  }
  return acc;
}

std::complex<double> sinc_complex(std::complex<double> z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::domain_error("sinc_complex: non-finite argument");
  }
  if (z.imag() == 0.0) return {sinc(z.real()), 0.0};

  const std::complex<double> w = kPi * z;
  if (std::abs(w) < 0.1) {
    // degree-12 Taylor polynomial of sin(w)/w in w^2
    const std::complex<double> w2 = w * w;
    constexpr std::array<double, 7> c = {
        1.0, -1.0 / 6.0, 1.0 / 120.0, -1.0 / 5040.0, 1.0 / 362880.0, -1.0 / 39916800.0,
        1.0 / 6227020800.0};
    std::complex<double> acc = c.back();
    for (auto it = c.rbegin() + 1; it != c.rend(); ++it) acc = acc * w2 + *it;
    return acc;
  }

  const double x = z.real();
  const double y = z.imag();
  const std::complex<double> s{sin_pi(x) * std::cosh(kPi * y), cos_pi(x) * std::sinh(kPi * y)};
  return s / w;
}

BranchedWValue lambert_w0(double x) {
  const double q = branch_distance(x, "lambert_w0");
  const double p = std::sqrt(2.0 * q);
  double w;
  if (p == 0.0) {
    w = -1.0;
  } else if (p < kSeriesOnlyRadius) {
    w = branch_point_series(p);
  } else {
    const double seed = (x < -0.25) ? branch_point_series(p) : x * std::exp(-x);
    w = halley(seed, x);
  }
  w = std::min(std::max(w, -1.0), -std::numeric_limits<double>::denorm_min());
  return {WBranch::principal, x, w};
}

BranchedWValue lambert_wm1(double x) {
  const double q = branch_distance(x, "lambert_wm1");
  const double p = std::sqrt(2.0 * q);
  double w;
  if (p == 0.0) {
    w = -1.0;
  } else if (p < kSeriesOnlyRadius) {
    w = branch_point_series(-p);
  } else {
    double seed;
    if (x < -0.25) {
      seed = branch_point_series(-p);
    } else {
      const double l1 = std::log(-x);
      const double l2 = std::log(-l1);
      seed = l1 - l2 + l2 / l1;
    }
    w = halley(seed, x);
  }
  w = std::min(w, -1.0);
  return {WBranch::minus_one, x, w};
}

OseenConstant lamb_oseen_alpha() {
  const double arg = -0.5 * std::exp(-0.5);
  return {-0.5 - lambert_wm1(arg).value};
}

double riemann_zeta_minus_one(double s) {
  require_finite(s, "riemann_zeta");
  if (s <= 1.0) {
    throw std::domain_error("riemann_zeta: requires s > 1");
  }

  // Euler-Maclaurin: head sum over 2..N-1, integral tail, half end term and
  // Bernoulli corrections B_2j/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}.
  // With N = 20 and up to ten corrections the remainder is below 1e-20 for
  // every s > 1.
  constexpr int kHead = 20;
  constexpr std::array<double, 10> bernoulli_over_factorial = {
      1.0 / 6.0 / 2.0,
      -1.0 / 30.0 / 24.0,
      1.0 / 42.0 / 720.0,
      -1.0 / 30.0 / 40320.0,
      5.0 / 66.0 / 3628800.0,
      -691.0 / 2730.0 / 479001600.0,
      7.0 / 6.0 / 87178291200.0,
      -3617.0 / 510.0 / 20922789888000.0,
      43867.0 / 798.0 / 6402373705728000.0,
      -174611.0 / 330.0 / 2432902008176640000.0,
  };

  double head = 0.0;
  for (int n = kHead - 1; n >= 2; --n) head += std::pow(static_cast<double>(n), -s);

  const double big_n = kHead;
  const double n_pow = std::pow(big_n, -s);
  double tail = big_n * n_pow / (s - 1.0) + 0.5 * n_pow;

  double rising = s;            // s(s+1)...(s+2j-2)
  double n_factor = n_pow / big_n;  // N^{-s-2j+1}
  for (std::size_t j = 0; j < bernoulli_over_factorial.size(); ++j) {
    const double term = bernoulli_over_factorial[j] * rising * n_factor;
    tail += term;
    if (std::fabs(term) < 1e-20) break;
    rising *= (s + 2.0 * j + 1.0) * (s + 2.0 * j + 2.0);
    n_factor /= big_n * big_n;
  }
  return tail + head;
}

double riemann_zeta(double s) { return 1.0 + riemann_zeta_minus_one(s); }

}  // namespace sincstab

#include "sincstab/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "sincstab/specfun.hpp"

namespace sincstab {

namespace {

constexpr double kKadecLimit = 0.25;

void require_exponent(double exponent, const char* what) {
  if (!std::isfinite(exponent) || !(exponent > 0.5)) {
    throw std::domain_error(std::string(what) +
                            ": exponent must exceed 1/2 (zeta(2 alpha) diverges otherwise)");
  }
}

void require_amplitude(double amplitude, const char* what) {
  if (!std::isfinite(amplitude) || !(amplitude > 0.0)) {
    throw std::domain_error(std::string(what) + ": amplitude A must be positive");
  }
}

BoundReport make_report(BoundName name, BoundInputs inputs, double lambda,
                        std::optional<double> threshold = std::nullopt) {
  BoundReport r{name, inputs, lambda, threshold, lambda < 1.0, std::nullopt, std::nullopt};
  return r;
}

}  // namespace

const char* to_string(BoundName name) {
  switch (name) {
    case BoundName::kadec_transfer: return "kadec_transfer";
    case BoundName::lemma_sum: return "lemma_sum";
    case BoundName::power_law_threshold: return "power_law_threshold";
    case BoundName::complex_master: return "complex_master";
    case BoundName::table_lambda: return "table_lambda";
    case BoundName::numerical_norm: return "numerical_norm";
  }
  return "unknown";
}

BoundReport kadec_transfer_lambda(double deviation) {
  if (!std::isfinite(deviation) || deviation < 0.0) {
    throw std::domain_error("kadec_transfer_lambda: L must be finite and non-negative");
  }
  // cos_pi and sin_pi share a kernel at 1/4, so the value there is exactly 1.
  const double lambda = 1.0 - cos_pi(deviation) + sin_pi(deviation);
  auto report = make_report(BoundName::kadec_transfer, {deviation, {}, {}}, lambda, kKadecLimit);
  if (deviation >= kKadecLimit) report.satisfies_pw = false;
  return report;
}

BoundReport lemma_sum_bound(const PerturbedGrid& grid) {
  if (!grid.is_real()) {
    throw std::domain_error("lemma_sum_bound: requires a real grid");
  }
  const auto offsets = grid.offsets();
  // Smallest terms first; perturbations typically shrink with |n|.
  double sum = 0.0;
  for (std::size_t i = offsets.size(); i-- > 0;) sum += one_minus_sinc(offsets[i].real());
  return make_report(BoundName::lemma_sum, {max_deviation(grid), {}, {}}, 2.0 * sum);
}

double power_law_threshold(double exponent) {
  require_exponent(exponent, "power_law_threshold");
  return 1.0 / (kPi * std::sqrt(2.0 * std::sqrt(2.0) * riemann_zeta(2.0 * exponent)));
}

BoundReport power_law_certificate(double amplitude, double exponent) {
  require_amplitude(amplitude, "power_law_certificate");
  require_exponent(exponent, "power_law_certificate");
  if (amplitude > 0.25) {
    throw std::domain_error(
        "power_law_certificate: pi A / n^alpha must lie in (0, pi/4], i.e. A <= 1/4; "
        "the sin^2/cos estimate behind the certificate does not hold outside it");
  }
  const double pa = kPi * amplitude;
  const double lambda = 2.0 * std::sqrt(2.0) * pa * pa * riemann_zeta(2.0 * exponent);
  return make_report(BoundName::power_law_threshold, {{}, amplitude, exponent}, lambda,
                     power_law_threshold(exponent));
}

double complex_bound_L() {
  return std::sqrt(3.0 * lamb_oseen_alpha().alpha / 8.0) / kPi;
}

BoundReport complex_master(double deviation) {
  if (!std::isfinite(deviation) || deviation < 0.0) {
    throw std::domain_error("complex_master: L must be finite and non-negative");
  }
  const double x = 8.0 / 3.0 * kPi * kPi * deviation * deviation;
  double lambda = 0.0;
  if (x < 0.5) {
    // sum_{k>=1} x^k / (k+1)!
    double term = x / 2.0;
    for (int k = 1; term > 1e-18 * (lambda + term); ++k) {
      lambda += term;
      term *= x / (k + 2.0);
    }
  } else {
    lambda = (std::expm1(x) - x) / x;
  }
  return make_report(BoundName::complex_master, {deviation, {}, {}}, lambda, complex_bound_L());
}

BoundReport table_lambda(double amplitude, double exponent) {
  require_amplitude(amplitude, "table_lambda");
  require_exponent(exponent, "table_lambda");

  const double lambda1 = 2.0 * one_minus_sinc(amplitude);

  const double u = (kPi * amplitude) * (kPi * amplitude);
  double weight = u / 6.0;  // (pi A)^{2l} / (2l+1)! at l = 1
  double lambda2 = 0.0;
  for (int l = 1; l < 400; ++l) {
    const double term = 2.0 * weight * riemann_zeta_minus_one(2.0 * l * exponent);
    if (std::fabs(term) < kSeriesTolerance) break;
    lambda2 += (l % 2 == 1) ? term : -term;
    weight *= u / ((2.0 * l + 2.0) * (2.0 * l + 3.0));
  }

  auto report = make_report(BoundName::table_lambda, {{}, amplitude, exponent}, lambda1 + lambda2);
  report.lambda1 = lambda1;
  report.lambda2 = lambda2;
  return report;
}

double critical_A(double exponent, double tolerance) {
  require_exponent(exponent, "critical_A");
  if (!(tolerance > 0.0)) throw std::domain_error("critical_A: tolerance must be positive");

  // lambda(A) = 2 sum_n [1 - sinc(A / n^alpha)] increases on (0, 1], and
  // lambda(1) >= 2 > 1, so [1e-6, 1] always brackets the root.
  double lo = 1e-6;
  double hi = 1.0;
  constexpr int kLadder = 64;
  double previous = -1.0;
  for (int i = 0; i <= kLadder; ++i) {
    const double a = lo + (hi - lo) * i / kLadder;
    const double value = table_lambda(a, exponent).lambda_value;
    if (!(value > previous)) {
      throw std::runtime_error("critical_A: table_lambda not increasing on the search interval");
    }
    previous = value;
  }

  auto f = [exponent](double a) { return table_lambda(a, exponent).lambda_value - 1.0; };
  if (f(lo) >= 0.0 || f(hi) <= 0.0) {
    throw std::runtime_error("critical_A: no sign change of lambda - 1 on the search interval");
  }
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if (f_mid < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace sincstab

// Closed-form stability thresholds for perturbed sinc systems.
//
// Every estimate is expressed as a Paley-Wiener constant lambda: the
// perturbed system is certified as a Riesz basis of PW_pi when lambda < 1.
// A violated bound is reported (satisfies_pw == false), never thrown; only
// arguments outside an estimate's domain raise std::domain_error.

#pragma once

#include <optional>

#include "sincstab/grids.hpp"

namespace sincstab {

enum class BoundName {
  kadec_transfer,
  lemma_sum,
  power_law_threshold,
  complex_master,
  table_lambda,
  numerical_norm,
};

const char* to_string(BoundName name);

struct BoundInputs {
  std::optional<double> deviation;  // L
  std::optional<double> amplitude;  // A
  std::optional<double> exponent;   // alpha
};

struct BoundReport {
  BoundName bound_name;
  BoundInputs inputs;
  double lambda_value = 0.0;
  std::optional<double> threshold;
  bool satisfies_pw = false;
  // Components of table_lambda; empty for the other bounds.
  std::optional<double> lambda1;
  std::optional<double> lambda2;
};

/// Alternating zeta-weighted series stop once the next term drops below this.
inline constexpr double kSeriesTolerance = 1e-12;

/// Kadec estimate transferred to sinc systems: 1 - cos(pi L) + sin(pi L).
/// Equals 1 at L = 1/4; L >= 1/4 yields a failing report with threshold 1/4.
BoundReport kadec_transfer_lambda(double deviation);

/// 2 * sum_n [1 - sinc(lambda_n - n)] over the grid. Real grids only.
BoundReport lemma_sum_bound(const PerturbedGrid& grid);

/// Largest A certified for lambda_n - n = A/n^alpha:
/// 1 / (pi sqrt(2 sqrt(2) zeta(2 alpha))).
double power_law_threshold(double exponent);

/// 2 sqrt(2) (pi A)^2 zeta(2 alpha); requires A <= 1/4 so that every
/// pi A / n^alpha stays inside (0, pi/4].
BoundReport power_law_certificate(double amplitude, double exponent);

/// Largest L certified for complex perturbations: sqrt(3 alpha / 8) / pi
/// with alpha the Lamb-Oseen constant.
double complex_bound_L();

/// (e^x - x - 1)/x with x = (8/3) pi^2 L^2; the limit 0 at L = 0.
BoundReport complex_master(double deviation);

/// lambda1 = 2(1 - sinc(A)),
/// lambda2 = 2 sum_l (-1)^{l+1} (pi A)^{2l} / (2l+1)! [zeta(2 l alpha) - 1].
BoundReport table_lambda(double amplitude, double exponent);

/// Root A* of table_lambda(A, alpha) = 1 located by bisection.
double critical_A(double exponent, double tolerance = 1e-6);

}  // namespace sincstab

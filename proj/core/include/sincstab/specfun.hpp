// Scalar special functions: normalized sinc, Lambert W on [-1/e, 0),
// the Lamb-Oseen constant and the Riemann zeta function for real s > 1.
//
// Every function here is pure and reentrant. Domain violations throw
// std::domain_error.

#pragma once

#include <complex>
#include <numbers>

namespace sincstab {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kInvE = 0.36787944117144233;  // 1/e rounded to double

/// sin(pi x) with exact zeros at integers and exact odd symmetry.
double sin_pi(double x);
/// cos(pi x) with exact zeros at half-integers and exact even symmetry.
double cos_pi(double x);

/// Normalized sinc: sin(pi x)/(pi x), 1 at the origin.
double sinc(double x);

/// 1 - sinc(x), evaluated without cancellation for small |x|.
double one_minus_sinc(double x);

/// Analytic continuation of sinc to the complex plane. Uses the degree-12
/// Taylor polynomial for |pi z| < 0.1 and the direct quotient elsewhere.
std::complex<double> sinc_complex(std::complex<double> z);

enum class WBranch { principal, minus_one };

struct BranchedWValue {
  WBranch branch;
  double argument;
  double value;
};

/// Principal branch W0 restricted to [-1/e, 0); values in [-1, 0).
BranchedWValue lambert_w0(double x);
/// Lower branch W-1 on [-1/e, 0); values in (-inf, -1].
BranchedWValue lambert_wm1(double x);

struct OseenConstant {
  double alpha;
};

/// Positive root of e^a = 2a + 1, computed as -1/2 - W-1(-e^{-1/2}/2).
OseenConstant lamb_oseen_alpha();

/// Riemann zeta for real s > 1 via Euler-Maclaurin summation.
double riemann_zeta(double s);

/// zeta(s) - 1 without the cancellation of subtracting 1 from zeta(s).
double riemann_zeta_minus_one(double s);

}  // namespace sincstab

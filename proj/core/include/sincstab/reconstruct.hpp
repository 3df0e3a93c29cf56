// Bandlimited reconstruction from nonuniform samples.
//
// A function f in PW_pi is expanded on the perturbed system,
// f(t) = sum_n c_n sinc(t - lambda_n). Interpolating the samples f(lambda_m)
// gives the Gram system G c = f(lambda), G(m, n) = sinc(lambda_m - lambda_n),
// which is symmetric positive definite whenever the system is a Riesz basis.
// The dual (biorthogonal) family is never formed explicitly.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sincstab/grids.hpp"

namespace sincstab {

/// f(t) = sum_j coeff_j sinc(t - shift_j); a finite combination of sinc
/// translates and therefore exactly in PW_pi.
class BandlimitedSignal {
 public:
  struct Atom {
    double shift;
    double coeff;
  };

  BandlimitedSignal() = default;
  explicit BandlimitedSignal(std::vector<Atom> atoms);

  /// sinc(t - shift)
  static BandlimitedSignal translate(double shift, double coeff = 1.0);
  /// Parses "shift:coeff,shift:coeff,..." (coeff defaults to 1).
  static BandlimitedSignal parse(const std::string& spec);

  [[nodiscard]] double operator()(double t) const;
  [[nodiscard]] const std::vector<Atom>& atoms() const { return atoms_; }

 private:
  std::vector<Atom> atoms_;
};

struct SolverOptions {
  double tolerance = 1e-10;
  int max_iterations = 0;  // 0 selects 5 x number of unknowns
};

/// Below this the CG Ritz estimate of the smallest Gram eigenvalue triggers
/// a conditioning warning.
inline constexpr double kSmallEigenvalueWarning = 0.5;

struct ReconstructionResult {
  std::vector<int> indices;
  std::vector<double> nodes;
  std::vector<double> coefficients;
  double residual_norm = 0.0;  // relative, ||G c - samples|| / ||samples||
  int solver_iterations = 0;
  bool converged = false;
  double min_eigenvalue_estimate = 0.0;
  double max_eigenvalue_estimate = 0.0;
  std::vector<std::string> warnings;
  std::vector<std::pair<double, double>> eval_grid;  // (t, f_hat(t))
  double relative_l2_error = 0.0;
};

/// f(lambda_n) for every node. Real grids only.
std::vector<double> sample_signal(const BandlimitedSignal& signal, const PerturbedGrid& grid);

/// Solves G c = samples by conjugate gradients. A solve that misses the
/// tolerance comes back with converged == false and the final residual.
ReconstructionResult solve_coefficients(const std::vector<double>& samples,
                                        const PerturbedGrid& grid,
                                        const SolverOptions& options = {});

/// f_hat(t) = sum_n c_n sinc(t - lambda_n).
std::vector<double> evaluate_reconstruction(const ReconstructionResult& result,
                                            const std::vector<double>& t_values);

struct Interval {
  double lo;
  double hi;
};

/// Relative L2 error ||f - f_hat|| / ||f|| on `interval` by the composite
/// trapezoidal rule with n_points uniform nodes.
double reconstruction_error(const BandlimitedSignal& signal, const ReconstructionResult& result,
                            Interval interval, int n_points);

/// Sample, solve and evaluate in one pass; fills eval_grid and
/// relative_l2_error.
ReconstructionResult reconstruct(const BandlimitedSignal& signal, const PerturbedGrid& grid,
                                 Interval interval, int n_points,
                                 const SolverOptions& options = {});

}  // namespace sincstab

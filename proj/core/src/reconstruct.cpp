#include "sincstab/reconstruct.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sincstab/framekit.hpp"
#include "sincstab/linalg.hpp"
#include "sincstab/specfun.hpp"

namespace sincstab {

BandlimitedSignal::BandlimitedSignal(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  for (const auto& a : atoms_) {
    if (!std::isfinite(a.shift) || !std::isfinite(a.coeff)) {
      throw std::invalid_argument("BandlimitedSignal: non-finite atom");
    }
  }
}

BandlimitedSignal BandlimitedSignal::translate(double shift, double coeff) {
  return BandlimitedSignal({{shift, coeff}});
}

BandlimitedSignal BandlimitedSignal::parse(const std::string& spec) {
  std::vector<Atom> atoms;
  std::istringstream in(spec);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    try {
      std::size_t used = 0;
      const std::string shift_text = item.substr(0, colon);
      const double shift = std::stod(shift_text, &used);
      if (used != shift_text.size()) throw std::invalid_argument(item);
      double coeff = 1.0;
      if (colon != std::string::npos) {
        const std::string coeff_text = item.substr(colon + 1);
        coeff = std::stod(coeff_text, &used);
        if (used != coeff_text.size()) throw std::invalid_argument(item);
      }
      atoms.push_back({shift, coeff});
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse signal atom '" + item +
                                  "' (expected shift[:coeff])");
    }
  }
  if (atoms.empty()) throw std::invalid_argument("signal specification has no atoms");
  return BandlimitedSignal(std::move(atoms));
}

double BandlimitedSignal::operator()(double t) const {
  double acc = 0.0;
  for (const auto& a : atoms_) acc += a.coeff * sinc(t - a.shift);
  return acc;
}

std::vector<double> sample_signal(const BandlimitedSignal& signal, const PerturbedGrid& grid) {
  if (!grid.is_real()) {
    throw std::domain_error("sample_signal: reconstruction is defined for real grids only");
  }
  std::vector<double> out;
  out.reserve(grid.size());
  for (double x : grid.real_nodes()) out.push_back(signal(x));
  return out;
}

ReconstructionResult solve_coefficients(const std::vector<double>& samples,
                                        const PerturbedGrid& grid,
                                        const SolverOptions& options) {
  if (!grid.is_real()) {
    throw std::domain_error("solve_coefficients: reconstruction is defined for real grids only");
  }
  if (samples.size() != grid.size()) {
    throw std::invalid_argument("solve_coefficients: samples do not match grid size");
  }
  const auto gram = std::get<RealMatrix>(gram_matrix(grid, default_window(grid)).entries);
  const Eigen::Map<const Eigen::VectorXd> rhs(samples.data(),
                                              static_cast<Eigen::Index>(samples.size()));
  const int max_iter = options.max_iterations > 0
                           ? options.max_iterations
                           : 5 * static_cast<int>(samples.size());
  const auto cg = linalg::conjugate_gradient(gram, rhs, options.tolerance, max_iter);

  ReconstructionResult out;
  out.indices.assign(grid.indices().begin(), grid.indices().end());
  out.nodes = grid.real_nodes();
  out.coefficients.assign(cg.x.data(), cg.x.data() + cg.x.size());
  out.residual_norm = cg.relative_residual;
  out.solver_iterations = cg.iterations;
  out.converged = cg.converged;
  out.min_eigenvalue_estimate = cg.ritz_min;
  out.max_eigenvalue_estimate = cg.ritz_max;
  if (cg.iterations > 0 && cg.ritz_min < kSmallEigenvalueWarning) {
    std::ostringstream msg;
    msg << "small minimum Gram eigenvalue (estimate " << cg.ritz_min
        << "); the system is close to losing the Riesz property";
    out.warnings.push_back(msg.str());
  }
  if (!cg.converged) {
    std::ostringstream msg;
    msg << "conjugate gradients did not converge: " << cg.iterations
        << " iterations, relative residual " << cg.relative_residual;
    out.warnings.push_back(msg.str());
  }
  return out;
}

std::vector<double> evaluate_reconstruction(const ReconstructionResult& result,
                                            const std::vector<double>& t_values) {
  if (result.coefficients.size() != result.nodes.size()) {
    throw std::invalid_argument("evaluate_reconstruction: coefficients missing");
  }
  std::vector<double> out;
  out.reserve(t_values.size());
  for (double t : t_values) {
    double acc = 0.0;
    for (std::size_t n = 0; n < result.nodes.size(); ++n) {
      acc += result.coefficients[n] * sinc(t - result.nodes[n]);
    }
    out.push_back(acc);
  }
  return out;
}

namespace {

std::vector<double> uniform_points(Interval interval, int n_points) {
  if (n_points < 2) throw std::domain_error("reconstruction_error: n_points must be at least 2");
  if (!(interval.hi > interval.lo)) throw std::domain_error("reconstruction_error: empty interval");
  std::vector<double> t(static_cast<std::size_t>(n_points));
  const double h = (interval.hi - interval.lo) / (n_points - 1);
  for (int i = 0; i < n_points; ++i) t[static_cast<std::size_t>(i)] = interval.lo + h * i;
  t.back() = interval.hi;
  return t;
}

double trapezoid_relative_error(const BandlimitedSignal& signal, const std::vector<double>& t,
                                const std::vector<double>& f_hat) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double w = (i == 0 || i + 1 == t.size()) ? 0.5 : 1.0;
    const double f = signal(t[i]);
    num += w * (f - f_hat[i]) * (f - f_hat[i]);
    den += w * f * f;
  }
  if (den == 0.0) throw std::domain_error("reconstruction_error: reference signal has zero norm");
  return std::sqrt(num / den);
}

}  // namespace

double reconstruction_error(const BandlimitedSignal& signal, const ReconstructionResult& result,
                            Interval interval, int n_points) {
  const auto t = uniform_points(interval, n_points);
  return trapezoid_relative_error(signal, t, evaluate_reconstruction(result, t));
}

ReconstructionResult reconstruct(const BandlimitedSignal& signal, const PerturbedGrid& grid,
                                 Interval interval, int n_points, const SolverOptions& options) {
  auto result = solve_coefficients(sample_signal(signal, grid), grid, options);
  const auto t = uniform_points(interval, n_points);
  const auto f_hat = evaluate_reconstruction(result, t);
  result.relative_l2_error = trapezoid_relative_error(signal, t, f_hat);
  result.eval_grid.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) result.eval_grid.emplace_back(t[i], f_hat[i]);
  return result;
}

}  // namespace sincstab

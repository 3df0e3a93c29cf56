// Acceptance suite: one PASS/FAIL line per criterion, each with its measured
// runtime against the criterion's time limit. Exit status is the number of
// failing criteria.

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sincstab/bounds.hpp"
#include "sincstab/cli.hpp"
#include "sincstab/framekit.hpp"
#include "sincstab/grids.hpp"
#include "sincstab/reconstruct.hpp"
#include "sincstab/specfun.hpp"

using namespace sincstab;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double limit_ms;
  std::function<Outcome()> body;
};

std::string fmt(const char* f, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Outcome lamb_oseen() {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run({"--format", "json", "oseen"}, out, err);
  if (code != 0) return {false, "oseen exited with " + std::to_string(code)};
  const auto doc = nlohmann::json::parse(out.str());
  const double alpha = doc["results"]["alpha"].get<double>();
  const double residual = std::exp(alpha) - 2.0 * alpha - 1.0;
  const bool ok = std::fabs(alpha - 1.25643) < 5e-6 && std::fabs(residual) < 1e-12;
  return {ok, fmt("alpha=%.12f", alpha) + fmt(" residual=%.2e", residual)};
}

Outcome complex_threshold() {
  const double l = complex_bound_L();
  const double lambda = complex_master(l).lambda_value;
  const bool ok = std::fabs(l - 0.218492) < 1e-6 && std::fabs(lambda - 1.0) < 1e-4;
  return {ok, fmt("L=%.9f", l) + fmt(" master(L)=%.12f", lambda)};
}

struct Cell {
  double alpha, a, lambda1, lambda2, lambda;
};

Outcome table_cells(const std::vector<Cell>& cells) {
  double worst = 0.0;
  for (const auto& c : cells) {
    const auto r = table_lambda(c.a, c.alpha);
    worst = std::max({worst, std::fabs(*r.lambda1 - c.lambda1), std::fabs(*r.lambda2 - c.lambda2),
                      std::fabs(r.lambda_value - c.lambda)});
  }
  return {worst <= 1e-5, fmt("max cell deviation=%.2e", worst)};
}

Outcome split_table() {
  return table_cells({{0.7, 0.25, 0.199367, 0.431376, 0.630743},
                      {0.65, 0.25, 0.199367, 0.600929, 0.800296},
                      {0.63, 0.25, 0.199367, 0.705618, 0.904986},
                      {0.62, 0.25, 0.199367, 0.771134, 0.970502},
                      {0.61599, 0.25, 0.199367, 0.800596, 0.999963}});
}

Outcome sum_table() {
  const std::vector<double> amps = {0.25, 0.35, 0.4, 0.42, 0.44, 0.44366};
  const std::vector<double> lambdas = {0.331456, 0.637257, 0.822432, 0.902013, 0.984574, 0.999996};
  double worst = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    worst = std::max(worst, std::fabs(table_lambda(amps[i], 1.0).lambda_value - lambdas[i]));
  }
  const double a_star = critical_A(1.0);
  const bool ok = worst <= 1e-5 && std::fabs(a_star - 0.44366) <= 1e-4;
  return {ok, fmt("max lambda deviation=%.2e", worst) + fmt(" critical_A(1)=%.7f", a_star)};
}

Outcome lemma_dominance() {
  double worst = -INFINITY;
  for (double a : {0.1, 0.2}) {
    for (double alpha : {0.75, 1.0, 2.0}) {
      const auto grid = power_law_grid(a, alpha, 1000);
      const auto window = window_with_radius(grid, 1000);
      const auto est = perturbation_norm(grid, window);
      if (!est.converged) return {false, "norm estimate did not converge"};
      const double gap = est.perturbation_norm * est.perturbation_norm -
                         lemma_sum_bound(grid).lambda_value;
      worst = std::max(worst, gap);
    }
  }
  return {worst <= 1e-6, fmt("max(norm^2 - lemma sum)=%.3e", worst)};
}

Outcome oracle_equivalence() {
  oracle::Gen gen(0xacce);
  double worst_norm = 0.0;
  double worst_coef = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const int r = gen.integer(2, 19);  // at most 39 nodes
    std::vector<double> off(static_cast<std::size_t>(2 * r + 1));
    for (auto& o : off) o = gen.uniform(-0.24, 0.24);
    const auto grid = uniform_offset_grid(off, IndexRange::symmetric(r));
    const auto window = window_with_radius(grid, gen.integer(r, 60));

    const auto est = perturbation_norm(grid, window);
    const double svd = oracle::spectral_norm(std::get<RealMatrix>(perturbation_matrix(grid, window)));
    worst_norm = std::max(worst_norm, std::fabs(est.perturbation_norm - svd));

    std::vector<double> samples(grid.size());
    for (auto& s : samples) s = gen.uniform(-1.0, 1.0);
    const auto cg = solve_coefficients(samples, grid);
    if (!cg.converged) return {false, "CG did not converge on trial " + std::to_string(trial)};
    const Eigen::VectorXd direct = oracle::dense_solve(
        oracle::gram(grid.real_nodes()),
        Eigen::Map<const Eigen::VectorXd>(samples.data(), static_cast<Eigen::Index>(samples.size())));
    for (std::size_t i = 0; i < samples.size(); ++i) {
      worst_coef = std::max(worst_coef, std::fabs(cg.coefficients[i] - direct(static_cast<Eigen::Index>(i))));
    }
  }
  const bool ok = worst_norm <= 1e-8 && worst_coef <= 1e-8;
  return {ok, fmt("max |norm - svd|=%.2e", worst_norm) + fmt(" max |c_cg - c_direct|=%.2e", worst_coef)};
}

Outcome kadec_edge() {
  const double edge = kadec_transfer_lambda(0.25).lambda_value;
  bool increasing = true;
  double prev = -1.0;
  for (int i = 0; i < 100; ++i) {
    const double v = kadec_transfer_lambda(0.25 * i / 99.0).lambda_value;
    increasing = increasing && v > prev;
    prev = v;
  }
  const bool ok = std::fabs(edge - 1.0) <= 1e-12 && increasing;
  return {ok, fmt("lambda(1/4)-1=%.1e", edge - 1.0) + (increasing ? " increasing" : " NOT increasing")};
}

Outcome ingham_degradation() {
  std::string detail = "min eigenvalues:";
  double prev = INFINITY;
  bool ok = true;
  for (int n : {8, 16, 32, 64}) {
    const auto grid = ingham_grid(n);
    const auto s = riesz_bounds_estimate(grid, window_with_radius(grid, 512));
    ok = ok && s.eigen_converged && s.min_eigenvalue < prev;
    prev = s.min_eigenvalue;
    detail += fmt(" %.6f", s.min_eigenvalue);
  }
  return {ok, detail};
}

Outcome reconstruction() {
  const auto signal = BandlimitedSignal::translate(0.3);
  std::string detail = "errors:";
  double prev = INFINITY;
  bool ok = true;
  for (int n : {25, 50, 100, 200}) {
    const auto grid = power_law_grid(0.2, 1.0, n, true);
    window_with_radius(grid, 1200).validate();
    const auto r = reconstruct(signal, grid, {-20.0, 20.0}, 2001);
    ok = ok && r.converged && r.relative_l2_error <= 1.1 * prev;
    prev = r.relative_l2_error;
    detail += fmt(" %.4e", r.relative_l2_error);
  }
  ok = ok && prev < 1e-2;
  return {ok, detail};
}

Outcome coefficient_inequality() {
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::pow;
  int equalities = 0;
  for (int k = 1; k <= 50; ++k) {
    // 2(k+1)/(2k+1) <= (8/3)^k/(k+1)  <=>  2 (k+1)^2 3^k <= (2k+1) 8^k
    const cpp_int lhs = 2 * cpp_int(k + 1) * (k + 1) * pow(cpp_int(3), k);
    const cpp_int rhs = cpp_int(2 * k + 1) * pow(cpp_int(8), k);
    if (lhs > rhs) return {false, "violated at k=" + std::to_string(k)};
    if (lhs == rhs) {
      if (k != 1) return {false, "equality at k=" + std::to_string(k)};
      ++equalities;
    }
  }
  return {equalities == 1, "holds for k=1..50, equality only at k=1"};
}

Outcome special_functions() {
  double worst_id = 0.0;
  for (int i = 1; i <= 1000; ++i) {
    // id1: W0(xi e^xi) = xi on [-1, 0)
    const double xi0 = -1.0 + (i - 0.5) / 1000.0;
    worst_id = std::max(worst_id, std::fabs(lambert_w0(xi0 * std::exp(xi0)).value - xi0));
    // id3: W-1(xi e^xi) = xi on [-40, -1)
    const double xi1 = -1.0 - 39.0 * (i - 0.5) / 1000.0;
    worst_id = std::max(worst_id, std::fabs(lambert_wm1(xi1 * std::exp(xi1)).value - xi1));
    // id2 / id4: W e^W = x over [-1/e, 0)
    const double x = -kInvE * (i - 0.5) / 1000.0;
    const double w0 = lambert_w0(x).value;
    const double wm1 = lambert_wm1(x).value;
    worst_id = std::max({worst_id, std::fabs(w0 * std::exp(w0) - x) / std::fabs(x),
                         std::fabs(wm1 * std::exp(wm1) - x) / std::fabs(x)});
  }
  const double pi = std::numbers::pi;
  const double z2 = std::fabs(riemann_zeta(2.0) - pi * pi / 6.0);
  const double z4 = std::fabs(riemann_zeta(4.0) - std::pow(pi, 4) / 90.0);
  const bool ok = worst_id <= 1e-12 && z2 <= 1e-13 && z4 <= 1e-13;
  return {ok, fmt("max identity error=%.2e", worst_id) + fmt(" |zeta(2)-pi^2/6|=%.1e", z2) +
                  fmt(" |zeta(4)-pi^4/90|=%.1e", z4)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Lamb-Oseen constant", 1.0, lamb_oseen},
      {2, "complex threshold", 1.0, complex_threshold},
      {3, "lambda1 and lambda2 table", 1000.0, split_table},
      {4, "lambda table and critical A", 1000.0, sum_table},
      {5, "lemma-sum dominance of the perturbation norm", 30'000.0, lemma_dominance},
      {6, "power iteration and CG against dense oracles", 10'000.0, oracle_equivalence},
      {7, "Kadec edge", 1.0, kadec_edge},
      {8, "Ingham degradation", 60'000.0, ingham_degradation},
      {9, "reconstruction on power-law grids", 60'000.0, reconstruction},
      {10, "master-series coefficient inequality", 1.0, coefficient_inequality},
      {11, "special-function identities", 1000.0, special_functions},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = ms < c.limit_ms;
    const bool pass = outcome.pass && in_time;
    failures += pass ? 0 : 1;
    std::printf("%s  [%2d] %-46s %s  (%.3f ms, limit %.0f ms%s)\n", pass ? "PASS" : "FAIL", c.id,
                c.title, outcome.detail.c_str(), ms, c.limit_ms, in_time ? "" : ", OVER TIME");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures;
}

#include "sincstab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "sincstab/bounds.hpp"
#include "sincstab/framekit.hpp"
#include "sincstab/grids.hpp"
#include "sincstab/reconstruct.hpp"
#include "sincstab/specfun.hpp"

namespace sincstab::cli {

namespace {

using Json = nlohmann::ordered_json;

// Shortest decimal text that round-trips to the same double.
std::string exact(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return {buf.data(), res.ptr};
}

std::string sig6(double v) {
  std::ostringstream o;
  o << std::setprecision(6) << v;
  return o.str();
}

Json optional_json(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

struct Output {
  Json params = Json::object();
  Json results = Json::object();
  std::ostringstream human;
  std::ostringstream csv;
  int exit_code = kOk;
};

struct CommonOptions {
  std::string format = "human";
  std::string out_path;
  std::uint64_t seed = 0x5eed;
  bool timing = false;
};

struct GridOptions {
  bool power_law = false;
  double amplitude = 0.0;
  double exponent = 0.0;
  int n_max = 0;
  bool extend_nonpositive = false;
  std::optional<double> uniform_offset;
  double imag = 0.0;
  bool ingham = false;
  std::string grid_file;
};

struct WindowOptions {
  std::optional<int> radius;
  double tol = 1e-10;
  int max_iter = 10'000;
};

void add_grid_flags(CLI::App* sub, GridOptions& g) {
  sub->add_flag("--power-law", g.power_law, "Power-law grid lambda_n = n + A/n^alpha");
  sub->add_option("--A", g.amplitude, "Power-law amplitude A");
  sub->add_option("--alpha", g.exponent, "Power-law exponent alpha");
  sub->add_option("--N", g.n_max, "Grid size: indices 1..N (power law) or -N..N");
  sub->add_flag("--extend-nonpositive", g.extend_nonpositive,
                "Power law over -N..N with lambda_n = n for n <= 0");
  sub->add_option("--uniform-offset", g.uniform_offset,
                  "Constant offset grid lambda_n = n + F (+ i*imag) over -N..N");
  sub->add_option("--imag", g.imag, "Imaginary part of the constant offset");
  sub->add_flag("--ingham", g.ingham, "Ingham grid n +- 1/4 over -N..N");
  sub->add_option("--grid-file", g.grid_file, "Grid file: index<TAB>re[<TAB>im] per line");
}

void add_window_flags(CLI::App* sub, WindowOptions& w) {
  sub->add_option("--window", w.radius, "Row window radius: rows -W..W");
  sub->add_option("--tol", w.tol, "Relative tolerance of the iterative kernels");
  sub->add_option("--max-iter", w.max_iter, "Iteration cap of the iterative kernels");
}

PerturbedGrid make_grid(const GridOptions& g, Json& params) {
  const int chosen = int{g.power_law} + int{g.uniform_offset.has_value()} + int{g.ingham} +
                     int{!g.grid_file.empty()};
  if (chosen != 1) {
    throw CLI::ValidationError(
        "grid", "choose exactly one of --power-law, --uniform-offset, --ingham, --grid-file");
  }
  auto require_n = [&] {
    if (g.n_max < 1) throw CLI::ValidationError("--N", "--N must be a positive integer");
  };
  Json grid;
  if (g.power_law) {
    require_n();
    grid = {{"kind", "power_law"}, {"A", g.amplitude}, {"alpha", g.exponent}, {"N", g.n_max},
            {"extend_nonpositive", g.extend_nonpositive}};
    params["grid"] = grid;
    return power_law_grid(g.amplitude, g.exponent, g.n_max, g.extend_nonpositive);
  }
  if (g.uniform_offset) {
    require_n();
    grid = {{"kind", "uniform_offset"}, {"offset", *g.uniform_offset}, {"imag", g.imag},
            {"N", g.n_max}};
    params["grid"] = grid;
    return constant_offset_grid({*g.uniform_offset, g.imag}, IndexRange::symmetric(g.n_max));
  }
  if (g.ingham) {
    require_n();
    params["grid"] = {{"kind", "ingham"}, {"N", g.n_max}};
    return ingham_grid(g.n_max);
  }
  params["grid"] = {{"kind", "explicit"}, {"file", g.grid_file}};
  return grid_from_file(g.grid_file);
}

TruncationWindow make_window(const PerturbedGrid& grid, const WindowOptions& w,
                             std::uint64_t seed, Json& params) {
  TruncationWindow window = w.radius ? window_with_radius(grid, *w.radius) : default_window(grid);
  window.norm_tolerance = w.tol;
  window.max_iterations = w.max_iter;
  window.seed = seed;
  window.validate();
  params["window"] = {{"rows", {window.rows.first, window.rows.last}},
                      {"cols", {window.cols.first, window.cols.last}},
                      {"tol", window.norm_tolerance},
                      {"max_iter", window.max_iterations}};
  return window;
}

Json report_json(const BoundReport& r) {
  return {{"bound", to_string(r.bound_name)},
          {"inputs",
           {{"L", optional_json(r.inputs.deviation)},
            {"A", optional_json(r.inputs.amplitude)},
            {"alpha", optional_json(r.inputs.exponent)}}},
          {"lambda", r.lambda_value},
          {"threshold", optional_json(r.threshold)},
          {"satisfies_pw", r.satisfies_pw},
          {"lambda1", optional_json(r.lambda1)},
          {"lambda2", optional_json(r.lambda2)}};
}

void kv_csv(std::ostream& csv, const std::string& key, double value) {
  csv << key << ',' << exact(value) << '\n';
}

const char* verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

// ---------------------------------------------------------------- oseen

void run_oseen(Output& o) {
  const double alpha = lamb_oseen_alpha().alpha;
  const double residual = std::exp(alpha) - 2.0 * alpha - 1.0;
  const double arg = -0.5 * std::exp(-0.5);
  const double w0 = lambert_w0(arg).value;
  const double wm1 = lambert_wm1(arg).value;
  const double bound = complex_bound_L();

  o.results = {{"alpha", alpha},
               {"residual", residual},
               {"w0", w0},
               {"wm1", wm1},
               {"complex_bound", bound}};

  o.human << "Lamb-Oseen constant   alpha = " << sig6(alpha) << '\n'
          << "identity residual     e^alpha - 2 alpha - 1 = " << sig6(residual) << '\n'
          << "W0(-e^(-1/2)/2)       = " << sig6(w0) << '\n'
          << "W-1(-e^(-1/2)/2)      = " << sig6(wm1) << '\n'
          << "complex bound         sqrt(3 alpha/8)/pi = " << sig6(bound) << '\n';

  o.csv << "quantity,value\n";
  kv_csv(o.csv, "alpha", alpha);
  kv_csv(o.csv, "residual", residual);
  kv_csv(o.csv, "w0", w0);
  kv_csv(o.csv, "wm1", wm1);
  kv_csv(o.csv, "complex_bound", bound);
}

// --------------------------------------------------------------- bounds

struct BoundsOptions {
  bool complex = false;
  bool kadec = false;
  bool lemma = false;
  std::optional<double> deviation;
};

void render_report(Output& o, const BoundReport& r, const std::string& threshold_note) {
  o.results["report"] = report_json(r);
  o.human << "bound      " << to_string(r.bound_name) << '\n';
  if (r.inputs.deviation) o.human << "L          " << sig6(*r.inputs.deviation) << '\n';
  if (r.inputs.amplitude) o.human << "A          " << sig6(*r.inputs.amplitude) << '\n';
  if (r.inputs.exponent) o.human << "alpha      " << sig6(*r.inputs.exponent) << '\n';
  if (r.threshold) o.human << "threshold  " << sig6(*r.threshold) << "  (" << threshold_note << ")\n";
  if (r.lambda1) o.human << "lambda1    " << sig6(*r.lambda1) << '\n';
  if (r.lambda2) o.human << "lambda2    " << sig6(*r.lambda2) << '\n';
  o.human << "lambda     " << sig6(r.lambda_value) << '\n'
          << "verdict    " << verdict(r.satisfies_pw)
          << (r.satisfies_pw ? "  (lambda < 1: Riesz basis certified)"
                             : "  (lambda >= 1: no certificate)")
          << '\n';

  o.csv << "field,value\n" << "bound," << to_string(r.bound_name) << '\n';
  if (r.inputs.deviation) kv_csv(o.csv, "L", *r.inputs.deviation);
  if (r.inputs.amplitude) kv_csv(o.csv, "A", *r.inputs.amplitude);
  if (r.inputs.exponent) kv_csv(o.csv, "alpha", *r.inputs.exponent);
  if (r.threshold) kv_csv(o.csv, "threshold", *r.threshold);
  if (r.lambda1) kv_csv(o.csv, "lambda1", *r.lambda1);
  if (r.lambda2) kv_csv(o.csv, "lambda2", *r.lambda2);
  kv_csv(o.csv, "lambda", r.lambda_value);
  o.csv << "satisfies_pw," << (r.satisfies_pw ? "true" : "false") << '\n';
}

void run_bounds(Output& o, const BoundsOptions& b, const GridOptions& g) {
  const int modes = int{b.complex} + int{b.kadec} + int{b.lemma};
  if (modes > 1) {
    throw CLI::ValidationError("bounds", "choose one of --complex, --kadec, --lemma");
  }
  auto need_l = [&]() -> double {
    if (!b.deviation) throw CLI::ValidationError("--L", "--L is required for this bound");
    return *b.deviation;
  };

  if (b.complex) {
    const double l = need_l();
    o.params = {{"mode", "complex"}, {"L", l}};
    render_report(o, complex_master(l), "largest certified L for complex perturbations");
  } else if (b.kadec) {
    const double l = need_l();
    o.params = {{"mode", "kadec"}, {"L", l}};
    render_report(o, kadec_transfer_lambda(l), "Kadec one-quarter limit on L");
  } else if (b.lemma) {
    o.params = {{"mode", "lemma"}};
    const auto grid = make_grid(g, o.params);
    render_report(o, lemma_sum_bound(grid), "");
  } else if (g.power_law) {
    o.params = {{"mode", "power_law"}, {"A", g.amplitude}, {"alpha", g.exponent}};
    render_report(o, power_law_certificate(g.amplitude, g.exponent),
                  "largest certified A at this alpha");
  } else {
    throw CLI::ValidationError("bounds", "choose one of --complex, --kadec, --lemma, --power-law");
  }
}

// ---------------------------------------------------------------- table

struct TableOptions {
  std::vector<double> alphas;
  std::vector<double> amplitudes;
  std::vector<double> alpha_range;
  std::vector<double> amplitude_range;
  bool critical = false;
  bool reference = false;
};

std::vector<double> expand_range(const std::vector<double>& spec, const char* flag) {
  if (spec.empty()) return {};
  if (spec.size() != 3 || spec[2] < 1 || spec[2] != std::floor(spec[2])) {
    throw CLI::ValidationError(flag, std::string(flag) + " expects lo,hi,count");
  }
  const int count = static_cast<int>(spec[2]);
  std::vector<double> out;
  for (int i = 0; i < count; ++i) {
    out.push_back(count == 1 ? spec[0] : spec[0] + (spec[1] - spec[0]) * i / (count - 1));
  }
  return out;
}

void run_table(Output& o, const TableOptions& t) {
  std::vector<double> alphas = t.alphas;
  for (double a : expand_range(t.alpha_range, "--alpha-range")) alphas.push_back(a);
  std::vector<double> amps = t.amplitudes;
  for (double a : expand_range(t.amplitude_range, "--A-range")) amps.push_back(a);

  std::vector<std::pair<double, double>> cells;  // (alpha, A)
  if (t.reference) {
    for (double a : {0.7, 0.65, 0.63, 0.62, 0.61599}) cells.emplace_back(a, 0.25);
    for (double a : {0.25, 0.35, 0.4, 0.42, 0.44, 0.44366}) cells.emplace_back(1.0, a);
  }
  for (double alpha : alphas) {
    for (double a : amps) cells.emplace_back(alpha, a);
  }
  std::vector<double> critical_alphas;
  if (t.critical) {
    critical_alphas = alphas;
    if (t.reference && critical_alphas.empty()) critical_alphas = {1.0};
  }
  if (cells.empty() && critical_alphas.empty()) {
    throw CLI::ValidationError("table", "no (alpha, A) cells: give --alpha and --A, or --reference");
  }

  o.params = {{"alpha", alphas}, {"A", amps}, {"reference", t.reference}, {"critical", t.critical}};
  Json rows = Json::array();
  Json critical = Json::array();
  Json errors = Json::array();

  o.human << std::left << std::setw(10) << "alpha" << std::setw(10) << "A" << std::setw(12)
          << "lambda1" << std::setw(12) << "lambda2" << std::setw(12) << "lambda" << '\n';
  o.csv << "alpha,A,lambda1,lambda2,lambda,kind\n";

  auto emit_row = [&](double alpha, double a, const BoundReport& r, const char* kind) {
    rows.push_back({{"alpha", alpha},
                    {"A", a},
                    {"lambda1", *r.lambda1},
                    {"lambda2", *r.lambda2},
                    {"lambda", r.lambda_value},
                    {"satisfies_pw", r.satisfies_pw},
                    {"kind", kind}});
    o.human << std::setw(10) << sig6(alpha) << std::setw(10) << sig6(a) << std::setw(12)
            << sig6(*r.lambda1) << std::setw(12) << sig6(*r.lambda2) << std::setw(12)
            << sig6(r.lambda_value) << (std::string(kind) == "critical" ? "critical A" : "")
            << '\n';
    o.csv << exact(alpha) << ',' << exact(a) << ',' << exact(*r.lambda1) << ','
          << exact(*r.lambda2) << ',' << exact(r.lambda_value) << ',' << kind << '\n';
  };

  for (const auto& [alpha, a] : cells) {
    try {
      emit_row(alpha, a, table_lambda(a, alpha), "table");
    } catch (const std::exception& e) {
      errors.push_back({{"alpha", alpha}, {"A", a}, {"error", e.what()}});
      o.human << std::setw(10) << sig6(alpha) << std::setw(10) << sig6(a) << "error: " << e.what()
              << '\n';
      o.exit_code = kUsageError;
    }
  }
  for (double alpha : critical_alphas) {
    try {
      const double a_star = critical_A(alpha);
      critical.push_back({{"alpha", alpha}, {"A_critical", a_star}});
      emit_row(alpha, a_star, table_lambda(a_star, alpha), "critical");
    } catch (const std::exception& e) {
      errors.push_back({{"alpha", alpha}, {"A", nullptr}, {"error", e.what()}});
      o.human << std::setw(10) << sig6(alpha) << "critical A error: " << e.what() << '\n';
      o.exit_code = kUsageError;
    }
  }
  o.results = {{"rows", rows}, {"critical", critical}, {"errors", errors}};
}

// ----------------------------------------------------------------- gram

void run_gram(Output& o, const GridOptions& g, const WindowOptions& w, std::uint64_t seed,
              const std::string& dump_path) {
  const auto grid = make_grid(g, o.params);
  const auto window = make_window(grid, w, seed, o.params);
  const auto summary = riesz_bounds_estimate(grid, window);
  const auto pw = paley_wiener_from_norm(grid, summary);

  if (!dump_path.empty()) {
    std::ofstream dump(dump_path);
    if (!dump) throw std::runtime_error("cannot write matrix dump " + dump_path);
    write_matrix_dump(dump, synthesis_matrix(grid, window));
    o.params["dump"] = dump_path;
  }

  Json analytic = Json::array();
  for (const auto& r : pw.analytic) analytic.push_back(report_json(r));
  o.results = {{"nodes", grid.size()},
               {"complex", !grid.is_real()},
               {"gram_route", to_string(grid.is_real() ? GramRoute::analytic_real
                                                       : GramRoute::synthesis_product)},
               {"max_deviation", max_deviation(grid)},
               {"perturbation_norm", summary.perturbation_norm},
               {"min_eigenvalue", summary.min_eigenvalue},
               {"max_eigenvalue", summary.max_eigenvalue},
               {"implied_riesz_lower", summary.implied_riesz_lower},
               {"implied_riesz_upper", summary.implied_riesz_upper},
               {"iterations_used", summary.iterations_used},
               {"eigen_iterations", summary.eigen_iterations},
               {"norm_converged", summary.norm_converged},
               {"eigen_converged", summary.eigen_converged},
               {"converged", summary.converged},
               {"verdict", report_json(pw.verdict)},
               {"analytic", analytic}};

  o.human << "grid                 " << to_string(grid.kind()) << ", " << grid.size() << " nodes"
          << (grid.is_real() ? "" : " (complex)") << '\n'
          << "row window           " << window.rows.first << ".." << window.rows.last << '\n'
          << "max deviation        " << sig6(max_deviation(grid)) << '\n'
          << "||S - I||            " << sig6(summary.perturbation_norm) << "  ("
          << summary.iterations_used << " power iterations"
          << (summary.norm_converged ? "" : ", NOT converged") << ")\n"
          << "Gram eigenvalues     [" << sig6(summary.min_eigenvalue) << ", "
          << sig6(summary.max_eigenvalue) << "]"
          << (summary.eigen_converged ? "" : "  (NOT converged)") << '\n'
          << "implied Riesz bounds [" << sig6(summary.implied_riesz_lower) << ", "
          << sig6(summary.implied_riesz_upper) << "]\n"
          << "Paley-Wiener         " << verdict(pw.verdict.satisfies_pw) << '\n';
  for (const auto& r : pw.analytic) {
    o.human << "  " << std::left << std::setw(19) << to_string(r.bound_name)
            << sig6(r.lambda_value) << "  " << verdict(r.satisfies_pw) << '\n';
  }

  o.csv << "field,value\n";
  kv_csv(o.csv, "perturbation_norm", summary.perturbation_norm);
  kv_csv(o.csv, "min_eigenvalue", summary.min_eigenvalue);
  kv_csv(o.csv, "max_eigenvalue", summary.max_eigenvalue);
  kv_csv(o.csv, "implied_riesz_lower", summary.implied_riesz_lower);
  kv_csv(o.csv, "implied_riesz_upper", summary.implied_riesz_upper);
  o.csv << "iterations_used," << summary.iterations_used << '\n'
        << "converged," << (summary.converged ? "true" : "false") << '\n';

  if (!summary.converged) o.exit_code = kNotConverged;
}

// ---------------------------------------------------------- reconstruct

struct ReconstructOptions {
  std::string signal = "0.3:1";
  std::vector<double> interval = {-20.0, 20.0};
  int points = 2001;
  std::string csv_path;
  std::string coefficients_path;
};

void write_eval_csv(std::ostream& out, const BandlimitedSignal& signal,
                    const ReconstructionResult& r) {
  const Json meta = {{"solver", "conjugate_gradient"},
                     {"iterations", r.solver_iterations},
                     {"residual_norm", r.residual_norm},
                     {"converged", r.converged},
                     {"relative_l2_error", r.relative_l2_error},
                     {"nodes", r.nodes.size()}};
  out << "# " << meta.dump() << '\n' << "t,f_ref,f_hat,abs_err\n";
  for (const auto& [t, f_hat] : r.eval_grid) {
    const double f = signal(t);
    out << exact(t) << ',' << exact(f) << ',' << exact(f_hat) << ',' << exact(std::fabs(f - f_hat))
        << '\n';
  }
}

void run_reconstruct(Output& o, const GridOptions& g, const WindowOptions& w,
                     const ReconstructOptions& ro) {
  const auto grid = make_grid(g, o.params);
  if (w.radius && *w.radius < grid.radius()) {
    throw std::invalid_argument("window too small for grid");
  }
  if (ro.interval.size() != 2) {
    throw CLI::ValidationError("--interval", "--interval expects lo,hi");
  }
  const auto signal = BandlimitedSignal::parse(ro.signal);
  SolverOptions solver;
  solver.tolerance = w.tol;
  solver.max_iterations = w.max_iter;
  o.params["signal"] = ro.signal;
  o.params["interval"] = ro.interval;
  o.params["points"] = ro.points;
  o.params["tol"] = solver.tolerance;

  const auto r = reconstruct(signal, grid, {ro.interval[0], ro.interval[1]}, ro.points, solver);

  o.results = {{"nodes", r.nodes.size()},
               {"relative_l2_error", r.relative_l2_error},
               {"residual_norm", r.residual_norm},
               {"solver_iterations", r.solver_iterations},
               {"converged", r.converged},
               {"min_eigenvalue_estimate", r.min_eigenvalue_estimate},
               {"max_eigenvalue_estimate", r.max_eigenvalue_estimate},
               {"warnings", r.warnings}};

  o.human << "nodes                " << r.nodes.size() << '\n'
          << "relative L2 error    " << sig6(r.relative_l2_error) << "  on [" << ro.interval[0]
          << ", " << ro.interval[1] << "]\n"
          << "CG iterations        " << r.solver_iterations << '\n'
          << "relative residual    " << sig6(r.residual_norm) << '\n'
          << "Gram eigen estimate  [" << sig6(r.min_eigenvalue_estimate) << ", "
          << sig6(r.max_eigenvalue_estimate) << "]\n";
  for (const auto& warning : r.warnings) o.human << "warning: " << warning << '\n';

  write_eval_csv(o.csv, signal, r);
  if (!ro.csv_path.empty()) {
    std::ofstream f(ro.csv_path);
    if (!f) throw std::runtime_error("cannot write " + ro.csv_path);
    write_eval_csv(f, signal, r);
  }
  if (!ro.coefficients_path.empty()) {
    std::ofstream f(ro.coefficients_path);
    if (!f) throw std::runtime_error("cannot write " + ro.coefficients_path);
    f << "index,lambda,coefficient\n";
    for (std::size_t i = 0; i < r.coefficients.size(); ++i) {
      f << r.indices[i] << ',' << exact(r.nodes[i]) << ',' << exact(r.coefficients[i]) << '\n';
    }
  }
  if (!r.converged) o.exit_code = kNotConverged;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stability of perturbed sinc bases in the Paley-Wiener space", "sincstab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  CommonOptions common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"human", "json", "csv"}));
  app.add_option("--out", common.out_path, "Write output to PATH instead of stdout");
  app.add_option("--seed", common.seed, "Seed of the norm estimator's start vector");
  app.add_flag("--timing", common.timing, "Record runtime_ms in JSON output");

  auto* oseen = app.add_subcommand("oseen", "Lamb-Oseen constant and the complex bound");

  BoundsOptions bounds_opts;
  GridOptions bounds_grid;
  auto* bounds = app.add_subcommand("bounds", "Closed-form stability bounds");
  bounds->add_flag("--complex", bounds_opts.complex, "Complex perturbation bound at --L");
  bounds->add_flag("--kadec", bounds_opts.kadec, "Kadec transfer bound at --L");
  bounds->add_flag("--lemma", bounds_opts.lemma, "Lemma sum bound over a grid");
  bounds->add_option("--L", bounds_opts.deviation, "Uniform deviation bound L");
  add_grid_flags(bounds, bounds_grid);

  TableOptions table_opts;
  auto* table = app.add_subcommand("table", "Tabulate lambda1, lambda2, lambda over (alpha, A)");
  table->add_option("--alpha", table_opts.alphas, "Exponents (comma separated)")->delimiter(',');
  table->add_option("--A", table_opts.amplitudes, "Amplitudes (comma separated)")->delimiter(',');
  table->add_option("--alpha-range", table_opts.alpha_range, "lo,hi,count")->delimiter(',');
  table->add_option("--A-range", table_opts.amplitude_range, "lo,hi,count")->delimiter(',');
  table->add_flag("--critical", table_opts.critical, "Append the critical A per alpha");
  table->add_flag("--reference", table_opts.reference, "Use the reference (alpha, A) parameter lists");

  GridOptions gram_grid;
  WindowOptions gram_window;
  std::string dump_path;
  auto* gram = app.add_subcommand("gram", "Perturbation norm and Gram eigenvalues of a grid");
  add_grid_flags(gram, gram_grid);
  add_window_flags(gram, gram_window);
  gram->add_option("--dump", dump_path, "Write the synthesis matrix as `k n re im` lines");

  GridOptions rec_grid;
  WindowOptions rec_window;
  ReconstructOptions rec_opts;
  auto* recon = app.add_subcommand("reconstruct", "Reconstruct a signal from nonuniform samples");
  add_grid_flags(recon, rec_grid);
  add_window_flags(recon, rec_window);
  recon->add_option("--signal", rec_opts.signal, "Atoms shift[:coeff],... of sum c sinc(t - s)");
  recon->add_option("--interval", rec_opts.interval, "Error interval lo,hi")->delimiter(',');
  recon->add_option("--points", rec_opts.points, "Quadrature points on the interval");
  recon->add_option("--csv", rec_opts.csv_path, "Write t,f_ref,f_hat,abs_err rows to PATH");
  recon->add_option("--coefficients", rec_opts.coefficients_path,
                    "Write index,lambda,coefficient rows to PATH");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  Output o;
  std::string command;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (oseen->parsed()) {
      command = "oseen";
      run_oseen(o);
    } else if (bounds->parsed()) {
      command = "bounds";
      run_bounds(o, bounds_opts, bounds_grid);
    } else if (table->parsed()) {
      command = "table";
      run_table(o, table_opts);
    } else if (gram->parsed()) {
      command = "gram";
      run_gram(o, gram_grid, gram_window, common.seed, dump_path);
    } else {
      command = "reconstruct";
      run_reconstruct(o, rec_grid, rec_window, rec_opts);
    }
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  const double runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  std::ostringstream body;
  if (common.format == "json") {
    const Json doc = {{"command", command},
                      {"params", o.params},
                      {"results", o.results},
                      {"meta",
                       {{"version", kVersion},
                        {"seed", common.seed},
                        {"runtime_ms", common.timing ? Json(runtime_ms) : Json(nullptr)}}}};
    body << doc.dump(2) << '\n';
  } else if (common.format == "csv") {
    body << o.csv.str();
  } else {
    body << o.human.str();
  }

  if (common.out_path.empty()) {
    out << body.str();
  } else {
    std::ofstream file(common.out_path);
    if (!file) {
      err << "error: cannot write " << common.out_path << '\n';
      return kUsageError;
    }
    file << body.str();
  }
  if (o.exit_code == kNotConverged) err << "error: a numerical kernel did not converge\n";
  return o.exit_code;
}

}  // namespace sincstab::cli

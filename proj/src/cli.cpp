#include "qeff/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qeff/analysis.hpp"
#include "qeff/bounds.hpp"
#include "qeff/efficiency.hpp"
#include "qeff/errors.hpp"
#include "qeff/output_table.hpp"
#include "qeff/registry.hpp"
#include "qeff/verification.hpp"

namespace qeff::cli {

namespace {

CodeParams parse_code_triple(const std::string& text, const std::string& flag) {
  int n = 0, k = 0, d = 0;
  char extra = 0;
  const int matched = std::sscanf(text.c_str(), "%d,%d,%d%c", &n, &k, &d, &extra);
  if (matched != 3)
    throw CLI::ValidationError(flag, "expected a code triple N,K,D, got '" + text + "'");
  return make_code_params(n, k, d);
}

std::vector<CodeStatus> parse_status_list(const std::string& text, const std::string& flag) {
  std::vector<CodeStatus> statuses;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto status = parse_code_status(item);
    if (!status)
      throw CLI::ValidationError(flag, "unknown status '" + item + "'");
    statuses.push_back(*status);
  }
  if (statuses.empty())
    throw CLI::ValidationError(flag, "expected at least one status");
  return statuses;
}

CodeRegistry registry_with_optional_file(const std::string& path) {
  if (path.empty()) return builtin_registry();
  std::ifstream file(path);
  if (!file) throw ValidationError("cannot read registry file '" + path + "'");
  std::ostringstream text;
  text << file.rdbuf();
  return builtin_registry().merged_with(load_registry(text.str()));
}

std::vector<double> build_grid(double p_min, double p_max, int points, bool log_spacing) {
  return log_spacing ? log_grid(p_min, p_max, points) : linear_grid(p_min, p_max, points);
}

int figure_grid_points(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("QEFF_FIGURE_POINTS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || value < 1)
      throw DomainError("QEFF_FIGURE_POINTS must be a positive integer");
    return static_cast<int>(value);
  }
  return kDefaultFigurePoints;
}

// log-space evaluation of r k / (n 3^(t+1)), the leading coefficient of the
// syndrome-reuse efficiency boost.
double boost_coefficient(const CodeParams& code, const SyndromeBudget& budget) {
  if (budget.leftover_r == 0) return 0.0;
  const int t = code.correction_depth();
  return std::exp(log_big(budget.leftover_r) - (t + 1) * std::log(3.0) +
                  std::log(static_cast<double>(code.k)) - std::log(static_cast<double>(code.n)));
}

const char* bool_text(bool value) { return value ? "true" : "false"; }

struct GridOptions {
  double p_min = 0.0;
  double p_max = 0.0;
  int points = 0;
  bool log_spacing = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--p-min", p_min, "Grid start probability")->required();
    cmd->add_option("--p-max", p_max, "Grid end probability")->required();
    cmd->add_option("--points", points, "Number of grid points")->required();
    cmd->add_flag("--log", log_spacing, "Log-spaced grid (requires --p-min > 0)");
  }
};

void run_bounds_check(const CodeParams& code, std::ostream& out) {
  const int n = code.n, k = code.k, d = code.d, t = code.correction_depth();
  OutputTable table({"bound", "satisfied", "equality"});

  const BigInt syndromes = pow2(n - k);
  table.add_row({"hamming", bool_text(hamming_satisfied(n, k, t)),
                 bool_text(hamming_is_perfect(n, k, t))});
  if (2 * t <= n) {
    table.add_row({"gilbert_varshamov", bool_text(gilbert_varshamov_satisfied(n, k, t)),
                   bool_text(syndromes == pauli_ball_size(n, 2 * t))});
  } else {
    table.add_row({"gilbert_varshamov", "n/a", "n/a"});  // defined only for 2t <= n
  }
  table.add_row({"singleton", bool_text(singleton_satisfied(n, k, t)),
                 bool_text(k == n - 4 * t)});
  table.add_row({"pure", bool_text(pure_bound_satisfied(n, k, d)),
                 bool_text(k == n - 2 * d + 2)});
  table.write_csv(out);
}

void run_bounds_max_k(int n, int t, std::ostream& out) {
  OutputTable table({"n", "t", "max_k"});
  const auto max_k = max_k_hamming(n, t);
  table.add_row({std::to_string(n), std::to_string(t),
                 max_k ? std::to_string(*max_k) : std::string("none")});
  table.write_csv(out);
}

void run_rate(double x, std::ostream& out) {
  OutputTable table({"x", "rate"});
  table.add_row({format_real(x), format_real(asymptotic_rate(x))});
  table.write_csv(out);
}

void run_registry_list(const CodeRegistry& registry, const RegistryQuery& query,
                       std::ostream& out) {
  OutputTable table({"n", "k", "d", "t", "status", "source"});
  for (const auto& record : registry.query(query)) {
    table.add_row({std::to_string(record.params.n), std::to_string(record.params.k),
                   std::to_string(record.params.d),
                   std::to_string(record.params.correction_depth()),
                   std::string(to_string(record.status)), record.source});
  }
  table.write_csv(out);
}

void run_curve(const CodeParams& code, const std::vector<double>& grid, bool boosted,
               std::ostream& out) {
  OutputTable table({"p", "P", "E"});
  for (const auto& sample : efficiency_series(code, grid, boosted).samples)
    table.add_row({format_real(sample.p), format_real(sample.success),
                   format_real(sample.efficiency)});
  table.write_csv(out);
}

void run_envelope(const CodeRegistry& registry, int depth,
                  const std::vector<CodeStatus>& statuses, const std::vector<double>& grid,
                  std::ostream& out) {
  const auto codes = registry.query_params({depth, statuses, std::nullopt});
  OutputTable table({"p", "best_n", "best_k", "best_d", "E"});
  for (const auto& point : envelope(codes, grid)) {
    table.add_row({format_real(point.p), std::to_string(point.best_code.n),
                   std::to_string(point.best_code.k), std::to_string(point.best_code.d),
                   format_real(point.efficiency)});
  }
  table.write_csv(out);
}

void run_crossover_exact(const CodeParams& a, const CodeParams& b, Bracket bracket,
                         double tol, std::ostream& out) {
  const CrossoverResult result = exact_crossover(a, b, bracket, tol);
  OutputTable table({"method", "p_c", "p_c_2sig", "bracket_lo", "bracket_hi"});
  table.add_row({"exact", format_real(result.p_c), format_real_2sig(result.p_c),
                 format_real(result.bracket.lo), format_real(result.bracket.hi)});
  table.write_csv(out);
}

void run_crossover_approx(int n, int k1, int k2, std::ostream& out) {
  const double p_c = approx_crossover(n, k1, k2);
  OutputTable table({"method", "p_c", "p_c_2sig"});
  table.add_row({"approximate", format_real(p_c), format_real_2sig(p_c)});
  table.write_csv(out);
}

void run_syndromes(const CodeParams& code, std::ostream& out) {
  const SyndromeBudget budget = syndrome_budget(code);
  OutputTable table({"n", "k", "d", "total", "used", "leftover_r", "next_order_q",
                     "correctable_ratio", "boost_coefficient"});
  table.add_row({std::to_string(code.n), std::to_string(code.k), std::to_string(code.d),
                 format_int(budget.total), format_int(budget.used),
                 format_int(budget.leftover_r), format_int(budget.next_order_q),
                 format_real(budget.correctable_ratio),
                 format_real(boost_coefficient(code, budget))});
  table.write_csv(out);
}

void run_figure(int id, int points, std::ostream& out) {
  const auto grid = linear_grid(0.0, 0.1, points);
  const FigureDataset dataset = figure_dataset(id, grid);
  OutputTable table({"series", "p", "value"});
  for (const auto& series : dataset.series)
    for (const auto& [p, value] : series.points)
      table.add_row({series.label, format_real(p), format_real(value)});
  table.write_csv(out);
}

void run_verify_brute(int n, int t, double p, std::ostream& out) {
  OutputTable table({"n", "t", "p", "value"});
  table.add_row({std::to_string(n), std::to_string(t), format_real(p),
                 format_real(brute_force_success(n, t, p))});
  table.write_csv(out);
}

void run_verify_mc(int n, int t, double p, std::uint64_t samples, std::uint64_t seed,
                   std::ostream& out) {
  const McReport report = mc_success(n, t, p, samples, seed);
  OutputTable table({"n", "t", "p", "samples", "successes", "estimate", "std_error",
                     "seed", "generator"});
  table.add_row({std::to_string(n), std::to_string(t), format_real(p),
                 std::to_string(report.samples), std::to_string(report.successes),
                 format_real(report.estimate), format_real(report.std_error),
                 std::to_string(report.seed), report.generator});
  table.write_csv(out);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Efficiency analysis of nondegenerate quantum error-correcting codes "
               "over depolarizing channels"};
  app.name("qeff");
  app.require_subcommand(1);

  // bounds check / bounds max-k
  auto* bounds_cmd = app.add_subcommand("bounds", "Code-parameter bounds");
  bounds_cmd->require_subcommand(1);

  auto* check_cmd = bounds_cmd->add_subcommand("check", "Evaluate all bounds for one triple");
  int check_n = 0, check_k = 0, check_d = 0;
  check_cmd->add_option("--n", check_n, "Physical qubits")->required();
  check_cmd->add_option("--k", check_k, "Logical qubits")->required();
  check_cmd->add_option("--d", check_d, "Distance (odd)")->required();
  check_cmd->callback(
      [&] { run_bounds_check(make_code_params(check_n, check_k, check_d), out); });

  auto* maxk_cmd = bounds_cmd->add_subcommand("max-k", "Largest k allowed by the Hamming bound");
  int maxk_n = 0, maxk_t = 0;
  maxk_cmd->add_option("--n", maxk_n, "Physical qubits")->required();
  maxk_cmd->add_option("--t", maxk_t, "Correction depth")->required();
  maxk_cmd->callback([&] { run_bounds_max_k(maxk_n, maxk_t, out); });

  // rate
  auto* rate_cmd = app.add_subcommand("rate", "Asymptotic achievable rate 1 - 2 H2(x)");
  double rate_x = 0.0;
  rate_cmd->add_option("--x", rate_x, "Fraction 2t/n in [0, 1]")->required();
  rate_cmd->callback([&] { run_rate(rate_x, out); });

  // registry list
  auto* registry_cmd = app.add_subcommand("registry", "Code registry");
  registry_cmd->require_subcommand(1);
  auto* list_cmd = registry_cmd->add_subcommand("list", "List records");
  int list_t = -1;
  std::string list_status, list_file;
  int list_max_n = 0;
  list_cmd->add_option("--t", list_t, "Filter by correction depth");
  list_cmd->add_option("--status", list_status, "Filter by status (comma list)");
  list_cmd->add_option("--max-n", list_max_n, "Filter by maximum n");
  list_cmd->add_option("--file", list_file, "Merge records from a registry file");
  list_cmd->callback([&] {
    RegistryQuery query;
    if (list_cmd->count("--t") > 0) query.correction_depth = list_t;
    if (list_cmd->count("--max-n") > 0) query.max_n = list_max_n;
    if (!list_status.empty()) query.statuses = parse_status_list(list_status, "--status");
    run_registry_list(registry_with_optional_file(list_file), query, out);
  });

  // curve
  auto* curve_cmd = app.add_subcommand("curve", "Success probability and efficiency curve");
  std::string curve_code;
  GridOptions curve_grid;
  bool curve_boosted = false;
  curve_cmd->add_option("--code", curve_code, "Code triple N,K,D")->required();
  curve_grid.attach(curve_cmd);
  curve_cmd->add_flag("--boosted", curve_boosted, "Add the leftover-syndrome boost");
  curve_cmd->callback([&] {
    run_curve(parse_code_triple(curve_code, "--code"),
              build_grid(curve_grid.p_min, curve_grid.p_max, curve_grid.points,
                         curve_grid.log_spacing),
              curve_boosted, out);
  });

  // envelope
  auto* envelope_cmd = app.add_subcommand("envelope", "Best efficiency over a code set");
  int envelope_t = 0;
  std::string envelope_status, envelope_file;
  GridOptions envelope_grid;
  envelope_cmd->add_option("--t", envelope_t, "Correction depth")->required();
  envelope_cmd->add_option("--status", envelope_status, "Statuses to include (comma list)")
      ->required();
  envelope_cmd->add_option("--file", envelope_file, "Merge records from a registry file");
  envelope_grid.attach(envelope_cmd);
  envelope_cmd->callback([&] {
    run_envelope(registry_with_optional_file(envelope_file), envelope_t,
                 parse_status_list(envelope_status, "--status"),
                 build_grid(envelope_grid.p_min, envelope_grid.p_max, envelope_grid.points,
                            envelope_grid.log_spacing),
                 out);
  });

  // crossover (exact) and crossover approx
  auto* crossover_cmd = app.add_subcommand("crossover", "Break-even error probability");
  std::string cross_a, cross_b;
  double cross_lo = 1e-4, cross_hi = 0.1, cross_tol = 1e-9;
  crossover_cmd->add_option("--code-a", cross_a, "First code triple N,K,D");
  crossover_cmd->add_option("--code-b", cross_b, "Second code triple N,K,D");
  crossover_cmd->add_option("--p-lo", cross_lo, "Bracket start (default 1e-4)");
  crossover_cmd->add_option("--p-hi", cross_hi, "Bracket end (default 0.1)");
  crossover_cmd->add_option("--tol", cross_tol, "Bisection tolerance (default 1e-9)");

  auto* approx_cmd =
      crossover_cmd->add_subcommand("approx", "Second-order estimate for same-length codes");
  int approx_n = 0, approx_k1 = 0, approx_k2 = 0;
  approx_cmd->add_option("--n", approx_n, "Shared code length")->required();
  approx_cmd->add_option("--k1", approx_k1, "Logical qubits of the distance-3 code")->required();
  approx_cmd->add_option("--k2", approx_k2, "Logical qubits of the distance-5 code")->required();
  approx_cmd->callback([&] { run_crossover_approx(approx_n, approx_k1, approx_k2, out); });

  crossover_cmd->callback([&] {
    if (approx_cmd->parsed()) return;
    if (cross_a.empty()) throw CLI::RequiredError("--code-a");
    if (cross_b.empty()) throw CLI::RequiredError("--code-b");
    run_crossover_exact(parse_code_triple(cross_a, "--code-a"),
                        parse_code_triple(cross_b, "--code-b"), {cross_lo, cross_hi},
                        cross_tol, out);
  });

  // syndromes
  auto* syndromes_cmd = app.add_subcommand("syndromes", "Exact syndrome budget for one code");
  std::string syndromes_code;
  syndromes_cmd->add_option("--code", syndromes_code, "Code triple N,K,D")->required();
  syndromes_cmd->callback(
      [&] { run_syndromes(parse_code_triple(syndromes_code, "--code"), out); });

  // figure
  auto* figure_cmd = app.add_subcommand("figure", "Figure dataset as long-format CSV");
  int figure_id = 0, figure_points = 0;
  figure_cmd->add_option("--id", figure_id, "Figure id, 1..5")->required();
  figure_cmd->add_option("--points", figure_points,
                         "Grid points (default QEFF_FIGURE_POINTS or 1001)");
  figure_cmd->callback([&] { run_figure(figure_id, figure_grid_points(figure_points), out); });

  // verify brute / verify mc
  auto* verify_cmd = app.add_subcommand("verify", "Independent oracles");
  verify_cmd->require_subcommand(1);

  auto* brute_cmd = verify_cmd->add_subcommand("brute", "Exhaustive Pauli-pattern enumeration");
  int brute_n = 0, brute_t = 0;
  double brute_p = 0.0;
  brute_cmd->add_option("--n", brute_n, "Physical qubits (<= 12)")->required();
  brute_cmd->add_option("--t", brute_t, "Correction depth")->required();
  brute_cmd->add_option("--p", brute_p, "Per-qubit error probability")->required();
  brute_cmd->callback([&] { run_verify_brute(brute_n, brute_t, brute_p, out); });

  auto* mc_cmd = verify_cmd->add_subcommand("mc", "Monte Carlo channel sampling");
  int mc_n = 0, mc_t = 0;
  double mc_p = 0.0;
  std::uint64_t mc_samples = 0, mc_seed = 0;
  mc_cmd->add_option("--n", mc_n, "Physical qubits")->required();
  mc_cmd->add_option("--t", mc_t, "Correction depth")->required();
  mc_cmd->add_option("--p", mc_p, "Per-qubit error probability")->required();
  mc_cmd->add_option("--samples", mc_samples, "Number of sampled blocks")->required();
  mc_cmd->add_option("--seed", mc_seed, "PRNG seed")->required();
  mc_cmd->callback([&] { run_verify_mc(mc_n, mc_t, mc_p, mc_samples, mc_seed, out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return 2;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}

}  // namespace qeff::cli

#include "qeff/analysis.hpp"

#include <cmath>
#include <cstdlib>

#include "qeff/errors.hpp"

namespace qeff {

namespace {

void check_bracket(const Bracket& bracket) {
  if (!(bracket.lo >= 0.0 && bracket.hi <= 1.0 && bracket.lo < bracket.hi))
    throw DomainError("crossover: bracket must satisfy 0 <= lo < hi <= 1");
}

// Smaller n wins a tie, then larger k.
bool tie_prefers(const CodeParams& challenger, const CodeParams& incumbent) {
  if (challenger.n != incumbent.n) return challenger.n < incumbent.n;
  return challenger.k > incumbent.k;
}

struct EnvelopeSample {
  CodeParams best;
  double value;
};

EnvelopeSample envelope_at(std::span<const CodeParams> codes, double p, bool boosted) {
  if (codes.empty()) throw DomainError("envelope: empty code set");
  EnvelopeSample sample{codes.front(),
                        boosted ? boosted_efficiency(codes.front(), p)
                                : efficiency(codes.front(), p)};
  for (const auto& code : codes.subspan(1)) {
    const double value = boosted ? boosted_efficiency(code, p) : efficiency(code, p);
    if (value > sample.value ||
        (value == sample.value && tie_prefers(code, sample.best))) {
      sample = {code, value};
    }
  }
  return sample;
}

std::vector<std::pair<double, double>> series_points(const EfficiencySeries& series,
                                                     bool success_axis) {
  std::vector<std::pair<double, double>> points;
  points.reserve(series.samples.size());
  for (const auto& sample : series.samples)
    points.emplace_back(sample.p, success_axis ? sample.success : sample.efficiency);
  return points;
}

std::vector<std::pair<double, double>> envelope_points(
    const std::vector<EnvelopePoint>& envelope_list) {
  std::vector<std::pair<double, double>> points;
  points.reserve(envelope_list.size());
  for (const auto& point : envelope_list) points.emplace_back(point.p, point.efficiency);
  return points;
}

std::string code_label(char axis, const CodeParams& code) {
  return std::string(1, axis) + "_" + std::to_string(code.n) + "_" +
         std::to_string(code.k) + "_" + std::to_string(code.d);
}

const std::vector<CodeStatus> kExistingStatuses = {CodeStatus::existing,
                                                   CodeStatus::perfect};
const std::vector<CodeStatus> kHypotheticalStatuses = {CodeStatus::hypothetical,
                                                       CodeStatus::extrapolated};

}  // namespace

std::vector<double> linear_grid(double lo, double hi, int points) {
  if (points < 1) throw DomainError("grid: points must be >= 1");
  if (points == 1) {
    if (lo != hi) throw DomainError("grid: a single point requires lo == hi");
    return {lo};
  }
  if (!(lo < hi)) throw DomainError("grid: requires lo < hi");
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i)
    grid[i] = lo + (hi - lo) * static_cast<double>(i) / (points - 1);
  grid.back() = hi;
  return grid;
}

std::vector<double> log_grid(double lo, double hi, int points) {
  if (!(lo > 0.0)) throw DomainError("grid: log spacing requires lo > 0");
  if (points < 1) throw DomainError("grid: points must be >= 1");
  if (points == 1) {
    if (lo != hi) throw DomainError("grid: a single point requires lo == hi");
    return {lo};
  }
  if (!(lo < hi)) throw DomainError("grid: requires lo < hi");
  const double log_lo = std::log(lo), log_hi = std::log(hi);
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i)
    grid[i] = std::exp(log_lo + (log_hi - log_lo) * static_cast<double>(i) / (points - 1));
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

std::vector<EnvelopePoint> envelope(std::span<const CodeParams> codes,
                                    std::span<const double> grid, bool boosted) {
  if (codes.empty()) throw DomainError("envelope: empty code set");
  std::vector<EnvelopePoint> result;
  result.reserve(grid.size());
  for (const double p : grid) {
    const EnvelopeSample sample = envelope_at(codes, p, boosted);
    result.push_back({p, sample.best, sample.value});
  }
  return result;
}

double envelope_efficiency(std::span<const CodeParams> codes, double p, bool boosted) {
  return envelope_at(codes, p, boosted).value;
}

double approx_crossover(int n, int k1, int k2) {
  if (n < 2) throw DomainError("approx_crossover: n must be >= 2");
  if (k2 < 0 || k1 < k2)
    throw DomainError("approx_crossover: requires k1 >= k2 >= 0");
  if (k1 == 0) throw DomainError("approx_crossover: k1 must be positive");
  return std::sqrt(2.0 * (k1 - k2) /
                   (static_cast<double>(k1) * n * (n - 1)));
}

CrossoverResult exact_crossover(const EfficiencyCurve& a, const EfficiencyCurve& b,
                                Bracket bracket, double tol) {
  check_bracket(bracket);
  if (!(tol > 0.0)) throw DomainError("exact_crossover: tol must be positive");

  const auto difference = [&](double p) { return a(p) - b(p); };
  double lo = bracket.lo, hi = bracket.hi;
  double f_lo = difference(lo), f_hi = difference(hi);

  if (f_lo == 0.0 && f_hi == 0.0)
    throw NumericError("exact_crossover: no sign change over the bracket");
  if (f_lo == 0.0) return {lo, CrossoverMethod::exact, {lo, lo}};
  if (f_hi == 0.0) return {hi, CrossoverMethod::exact, {hi, hi}};
  if (std::signbit(f_lo) == std::signbit(f_hi))
    throw NumericError("exact_crossover: no sign change over the bracket");

  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket at floating resolution
    const double f_mid = difference(mid);
    if (f_mid == 0.0) return {mid, CrossoverMethod::exact, {mid, mid}};
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return {0.5 * (lo + hi), CrossoverMethod::exact, {lo, hi}};
}

CrossoverResult exact_crossover(const CodeParams& a, const CodeParams& b, Bracket bracket,
                                double tol) {
  return exact_crossover([&a](double p) { return efficiency(a, p); },
                         [&b](double p) { return efficiency(b, p); }, bracket, tol);
}

FigureDataset figure_dataset(int figure_id, std::span<const double> grid,
                             const CodeRegistry& registry) {
  FigureDataset dataset;
  dataset.id = figure_id;

  const auto code_series = [&](const CodeParams& code, bool boosted = false) {
    return efficiency_series(code, grid, boosted);
  };
  const auto envelope_series = [&](int depth, const std::vector<CodeStatus>& statuses,
                                   bool boosted = false) {
    const auto codes = registry.query_params({depth, statuses, std::nullopt});
    return envelope(codes, grid, boosted);
  };

  switch (figure_id) {
    case 1: {
      const CodeParams codes[] = {{64, 56, 3}, {64, 48, 5}, {64, 43, 7}};
      for (const auto& code : codes)
        dataset.series.push_back({code_label('P', code), series_points(code_series(code), true)});
      for (const auto& code : codes)
        dataset.series.push_back({code_label('E', code), series_points(code_series(code), false)});
      break;
    }
    case 2: {
      const CodeParams codes[] = {{5, 1, 3}, {8, 3, 3}, {17, 11, 3}, {40, 33, 3}, {85, 77, 3}};
      for (const auto& code : codes)
        dataset.series.push_back({code_label('E', code), series_points(code_series(code), false)});
      break;
    }
    case 3: {
      for (int depth : {1, 2, 3})
        dataset.series.push_back({"env_hypothetical_t" + std::to_string(depth),
                                  envelope_points(envelope_series(depth, kHypotheticalStatuses))});
      dataset.series.push_back(
          {"env_existing_t1", envelope_points(envelope_series(1, kExistingStatuses))});
      break;
    }
    case 4: {
      for (int depth : {1, 2, 3})
        dataset.series.push_back({"env_existing_t" + std::to_string(depth),
                                  envelope_points(envelope_series(depth, kExistingStatuses))});
      break;
    }
    case 5: {
      dataset.series.push_back(
          {"env_existing_t2", envelope_points(envelope_series(2, kExistingStatuses))});
      dataset.series.push_back(
          {"env_existing_t2_boosted",
           envelope_points(envelope_series(2, kExistingStatuses, true))});
      const CodeParams inset{128, 110, 5};
      dataset.series.push_back(
          {code_label('E', inset), series_points(code_series(inset), false)});
      dataset.series.push_back({code_label('E', inset) + "_boosted",
                                series_points(code_series(inset, true), false)});
      break;
    }
    default:
      throw DomainError("figure_dataset: figure id must be 1..5");
  }
  return dataset;
}

}  // namespace qeff

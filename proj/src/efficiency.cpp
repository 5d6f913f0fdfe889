#include "qeff/efficiency.hpp"

#include <algorithm>
#include <cmath>

#include "qeff/bounds.hpp"
#include "qeff/errors.hpp"

namespace qeff {

namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("p must lie in [0, 1]");
}

void check_code(const CodeParams& code) {
  make_code_params(code.n, code.k, code.d);
}

// C(n,i) (1-p)^(n-i) p^i with the binomial taken exactly. The power product
// underflows long before the weight-i mass is actually negligible, so each
// term is assembled in log space and exponentiated once.
double weight_term(int n, int i, double p) {
  if (p == 0.0) return i == 0 ? 1.0 : 0.0;
  if (p == 1.0) return i == n ? 1.0 : 0.0;
  const double log_term =
      log_big(binomial(n, i)) + i * std::log(p) + (n - i) * std::log1p(-p);
  return std::exp(log_term);
}

// Neumaier-compensated sum of terms sorted by increasing magnitude.
double compensated_sum(std::vector<double>& terms) {
  std::sort(terms.begin(), terms.end());
  double sum = 0.0, compensation = 0.0;
  for (const double term : terms) {
    const double next = sum + term;
    if (std::abs(sum) >= std::abs(term))
      compensation += (sum - next) + term;
    else
      compensation += (term - next) + sum;
    sum = next;
  }
  return sum + compensation;
}

double weight_range_probability(int n, int lo, int hi, double p) {
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (int i = lo; i <= hi; ++i) terms.push_back(weight_term(n, i, p));
  const double sum = compensated_sum(terms);
  return std::clamp(sum, 0.0, 1.0);
}

}  // namespace

BigInt error_count(int n, int i) {
  if (n < 0 || i < 0 || i > n) throw DomainError("error_count: requires 0 <= i <= n");
  return pauli_pattern_count(n, i);
}

double success_probability(int n, int t, double p) {
  if (n < 0 || t < 0 || t > n)
    throw DomainError("success_probability: requires 0 <= t <= n");
  check_probability(p);
  return weight_range_probability(n, 0, t, p);
}

double block_failure_probability(int n, int t, double p) {
  if (n < 0 || t < 0 || t > n)
    throw DomainError("block_failure_probability: requires 0 <= t <= n");
  check_probability(p);
  if (t == n) return 0.0;
  return weight_range_probability(n, t + 1, n, p);
}

double efficiency(const CodeParams& code, double p) {
  check_code(code);
  const double success = success_probability(code.n, code.correction_depth(), p);
  return success * code.k / code.n;
}

double fidelity_estimate(double success, int k) {
  if (!(success >= 0.0 && success <= 1.0))
    throw DomainError("fidelity_estimate: success must lie in [0, 1]");
  if (k < 0) throw DomainError("fidelity_estimate: k must be non-negative");
  return success + std::ldexp(1.0 - success, -k);
}

SyndromeBudget syndrome_budget(const CodeParams& code) {
  check_code(code);
  const int t = code.correction_depth();
  SyndromeBudget budget;
  budget.total = pow2(code.n - code.k);
  budget.used = pauli_ball_size(code.n, t);
  if (budget.used > budget.total)
    throw DomainError(to_string(code) + ": syndrome budget requires the Hamming bound");
  budget.leftover_r = budget.total - budget.used;
  budget.next_order_q = t < code.n ? pauli_pattern_count(code.n, t + 1) : BigInt(0);
  budget.correctable_ratio = budget.next_order_q == 0
                                 ? 1.0
                                 : clamped_ratio(budget.leftover_r, budget.next_order_q);
  return budget;
}

double boost_term(const CodeParams& code, double p) {
  check_probability(p);
  const SyndromeBudget budget = syndrome_budget(code);
  const int t = code.correction_depth();
  if (t >= code.n) return 0.0;  // no next-order errors to correct
  return budget.correctable_ratio * weight_term(code.n, t + 1, p);
}

double boosted_efficiency(const CodeParams& code, double p) {
  return efficiency(code, p) +
         static_cast<double>(code.k) / code.n * boost_term(code, p);
}

EfficiencySeries efficiency_series(const CodeParams& code, std::span<const double> grid,
                                   bool boosted) {
  check_code(code);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    check_probability(grid[i]);
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw DomainError("efficiency_series: grid must be strictly increasing");
  }
  const int t = code.correction_depth();
  const double rate = static_cast<double>(code.k) / code.n;
  EfficiencySeries series{code, {}};
  series.samples.reserve(grid.size());
  for (const double p : grid) {
    double success = success_probability(code.n, t, p);
    if (boosted) success += boost_term(code, p);
    series.samples.push_back({p, success, success * rate});
  }
  return series;
}

}  // namespace qeff

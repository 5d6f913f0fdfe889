#pragma once

#include <span>
#include <vector>

#include "qeff/combinatorics.hpp"
#include "qeff/types.hpp"

namespace qeff {

// Exact-integer accounting of one code's syndrome space.
struct SyndromeBudget {
  BigInt total;         // 2^(n-k) available syndromes
  BigInt used;          // consumed by patterns of weight <= t
  BigInt leftover_r;    // total - used
  BigInt next_order_q;  // distinct weight-(t+1) patterns
  double correctable_ratio = 0.0;  // min(1, r/q)
};

struct SeriesSample {
  double p;
  double success;
  double efficiency;
};

// A sampled (p, P, E) curve for one code over a strictly increasing p-grid.
struct EfficiencySeries {
  CodeParams code;
  std::vector<SeriesSample> samples;
};

// 3^i C(n, i): distinct weight-i Pauli error patterns on n qubits.
BigInt error_count(int n, int i);

// Probability that at most t of n qubits err when each errs independently
// with probability p: sum_{i=0..t} C(n,i) (1-p)^(n-i) p^i.
// Relative accuracy ~1e-13 for n <= 512 over the whole p range.
double success_probability(int n, int t, double p);

// The complementary upper tail, summed directly so it stays accurate when
// success_probability is within an ulp of 1.
double block_failure_probability(int n, int t, double p);

// Logical qubits delivered per physical qubit: success_probability * k / n.
double efficiency(const CodeParams& code, double p);

// Average post-correction fidelity estimate: P + (1 - P) / 2^k.
double fidelity_estimate(double success, int k);

// Requires a Hamming-satisfying code; throws DomainError otherwise.
SyndromeBudget syndrome_budget(const CodeParams& code);

// Additional success probability if the leftover syndromes were spent on
// weight-(t+1) errors: min(1, r/q) C(n,t+1) (1-p)^(n-t-1) p^(t+1).
double boost_term(const CodeParams& code, double p);

// efficiency(code, p) + (k/n) * boost_term(code, p).
double boosted_efficiency(const CodeParams& code, double p);

// Samples success and efficiency (boosted if requested) over the grid.
// The grid must be strictly increasing within [0, 1].
EfficiencySeries efficiency_series(const CodeParams& code, std::span<const double> grid,
                                   bool boosted = false);

}  // namespace qeff

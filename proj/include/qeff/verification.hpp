#pragma once

#include <cstdint>
#include <string>

namespace qeff {

struct McReport {
  std::uint64_t samples = 0;
  std::uint64_t successes = 0;
  double estimate = 0.0;   // successes / samples
  double std_error = 0.0;  // sqrt(estimate (1 - estimate) / samples)
  std::uint64_t seed = 0;
  std::string generator;   // PRNG identity, for provenance
};

// Enumerates all 4^n per-qubit error patterns (identity with weight 1-p, each
// of the three Pauli errors with p/3) and sums the probability of patterns
// with weight <= t. Exact up to floating accumulation. Requires n <= 12.
double brute_force_success(int n, int t, double p);

// Same enumeration with an arbitrary split of the error mass among the three
// Pauli errors. The result depends only on px + py + pz.
double brute_force_success_split(int n, int t, double px, double py, double pz);

// Draws i.i.d. per-qubit errors (no error 1-p, each Pauli p/3) for `samples`
// blocks and counts those with weight <= t. Deterministic given the seed.
McReport mc_success(int n, int t, double p, std::uint64_t samples, std::uint64_t seed);

}  // namespace qeff

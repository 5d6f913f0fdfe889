#include "qeff/verification.hpp"

#include <cmath>
#include <random>

#include "qeff/errors.hpp"

namespace qeff {

namespace {

constexpr int kBruteForceMaxQubits = 12;  // 4^12 = 16.7M patterns

// Uniform double in [0, 1) from the top 53 bits, so the sequence is
// independent of the standard library's distribution implementation.
double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

double brute_force_success_split(int n, int t, double px, double py, double pz) {
  if (n < 1 || n > kBruteForceMaxQubits)
    throw DomainError("brute_force_success: n must lie in [1, 12]");
  if (t < 0 || t > n) throw DomainError("brute_force_success: requires 0 <= t <= n");
  if (px < 0 || py < 0 || pz < 0 || px + py + pz > 1.0)
    throw DomainError("brute_force_success: error probabilities must be a sub-distribution");

  const double prob_of[4] = {1.0 - px - py - pz, px, py, pz};
  const std::uint64_t patterns = std::uint64_t(1) << (2 * n);

  double sum = 0.0, compensation = 0.0;  // Kahan over 4^n pattern probabilities
  for (std::uint64_t pattern = 0; pattern < patterns; ++pattern) {
    int weight = 0;
    double prob = 1.0;
    for (int qubit = 0; qubit < n; ++qubit) {
      const unsigned error = (pattern >> (2 * qubit)) & 3u;
      weight += error != 0;
      prob *= prob_of[error];
    }
    if (weight > t) continue;
    const double adjusted = prob - compensation;
    const double next = sum + adjusted;
    compensation = (next - sum) - adjusted;
    sum = next;
  }
  return sum;
}

double brute_force_success(int n, int t, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("brute_force_success: p must lie in [0, 1]");
  return brute_force_success_split(n, t, p / 3.0, p / 3.0, p / 3.0);
}

McReport mc_success(int n, int t, double p, std::uint64_t samples, std::uint64_t seed) {
  if (n < 1) throw DomainError("mc_success: n must be positive");
  if (t < 0 || t > n) throw DomainError("mc_success: requires 0 <= t <= n");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("mc_success: p must lie in [0, 1]");
  if (samples < 1) throw DomainError("mc_success: samples must be >= 1");

  std::mt19937_64 rng(seed);
  std::uint64_t successes = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    int weight = 0;
    for (int qubit = 0; qubit < n; ++qubit) {
      // One draw per qubit: X on [0, p/3), Y on [p/3, 2p/3), Z on [2p/3, p),
      // no error otherwise. Only the weight matters for success.
      weight += uniform_unit(rng) < p ? 1 : 0;
    }
    successes += weight <= t ? 1 : 0;
  }

  McReport report;
  report.samples = samples;
  report.successes = successes;
  report.estimate = static_cast<double>(successes) / static_cast<double>(samples);
  report.std_error =
      std::sqrt(report.estimate * (1.0 - report.estimate) / static_cast<double>(samples));
  report.seed = seed;
  report.generator = "mt19937_64";
  return report;
}

}  // namespace qeff

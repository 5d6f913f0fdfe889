#include "qeff/bounds.hpp"

#include <cmath>

#include "qeff/combinatorics.hpp"
#include "qeff/errors.hpp"

namespace qeff {

namespace {

void check_nkt(int n, int k, int t) {
  if (k < 0 || k > n) throw DomainError("bounds: k must satisfy 0 <= k <= n");
  if (t < 0 || t > n) throw DomainError("bounds: t must satisfy 0 <= t <= n");
}

double binary_entropy(double p) {
  if (p == 0.0 || p == 1.0) return 0.0;  // continuity: 0 log 0 := 0
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

}  // namespace

bool hamming_satisfied(int n, int k, int t) {
  check_nkt(n, k, t);
  return pow2(n - k) >= pauli_ball_size(n, t);
}

bool hamming_is_perfect(int n, int k, int t) {
  check_nkt(n, k, t);
  return pow2(n - k) == pauli_ball_size(n, t);
}

bool gilbert_varshamov_satisfied(int n, int k, int t) {
  if (k < 0 || k > n) throw DomainError("bounds: k must satisfy 0 <= k <= n");
  if (t < 0 || 2 * t > n) throw DomainError("bounds: t must satisfy 0 <= 2t <= n");
  return pow2(n - k) <= pauli_ball_size(n, 2 * t);
}

bool singleton_satisfied(int n, int k, int t) {
  if (k < 0 || k > n) throw DomainError("bounds: k must satisfy 0 <= k <= n");
  if (t < 0) throw DomainError("bounds: t must be non-negative");
  return k <= n - 4 * t;
}

bool pure_bound_satisfied(int n, int k, int d) {
  if (k < 0 || k > n) throw DomainError("bounds: k must satisfy 0 <= k <= n");
  if (d < 1) throw DomainError("bounds: d must be positive");
  return k <= n - 2 * d + 2;
}

double asymptotic_rate(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("asymptotic_rate: x must lie in [0, 1]");
  return 1.0 - 2.0 * binary_entropy(x);
}

std::optional<int> max_k_hamming(int n, int t) {
  if (n < 1) throw DomainError("max_k_hamming: n must be positive");
  if (t < 0 || t > n) throw DomainError("max_k_hamming: t must satisfy 0 <= t <= n");
  const BigInt ball = pauli_ball_size(n, t);
  // The bound relaxes as k decreases, so the first satisfying k is maximal.
  for (int k = n; k >= 0; --k) {
    if (pow2(n - k) >= ball) return k;
  }
  return std::nullopt;
}

int extrapolate_k(std::span<const std::pair<int, int>> points, int target_n) {
  if (points.size() < 2) throw DomainError("extrapolate_k: at least two points required");
  double n_mean = 0.0, k_mean = 0.0;
  for (const auto& [n, k] : points) {
    n_mean += n;
    k_mean += k;
  }
  n_mean /= static_cast<double>(points.size());
  k_mean /= static_cast<double>(points.size());

  double covariance = 0.0, variance = 0.0;
  for (const auto& [n, k] : points) {
    covariance += (n - n_mean) * (k - k_mean);
    variance += (n - n_mean) * (n - n_mean);
  }
  if (variance == 0.0) throw DomainError("extrapolate_k: degenerate fit, all n equal");

  const double slope = covariance / variance;
  const double intercept = k_mean - slope * n_mean;
  return static_cast<int>(std::llround(slope * target_n + intercept));
}

}  // namespace qeff

#pragma once

#include <optional>
#include <span>
#include <utility>

namespace qeff {

enum class BoundKind { hamming, gilbert_varshamov, singleton, pure };

// Necessary condition for a nondegenerate code correcting up to t errors:
// 2^(n-k) >= sum_{i=0..t} 3^i C(n,i), evaluated in exact integers.
bool hamming_satisfied(int n, int k, int t);

// Equality case of the Hamming bound (every syndrome consumed).
bool hamming_is_perfect(int n, int k, int t);

// Sufficient condition for code existence: 2^(n-k) <= sum_{i=0..2t} 3^i C(n,i).
bool gilbert_varshamov_satisfied(int n, int k, int t);

// k <= n - 4t.
bool singleton_satisfied(int n, int k, int t);

// k <= n - 2d + 2, the pure-code form of the Singleton bound.
bool pure_bound_satisfied(int n, int k, int d);

// Asymptotically achievable rate k/n for x = 2t/n: 1 - 2 H2(x), where H2 is
// the binary entropy with H2(0) = H2(1) = 0. May be negative.
double asymptotic_rate(double x);

// Largest k in [0, n] satisfying the Hamming bound at depth t, if any.
std::optional<int> max_k_hamming(int n, int t);

// Least-squares linear fit of k against n over the given points, evaluated at
// target_n and rounded to the nearest integer (ties away from zero).
// Requires at least two points with distinct n.
int extrapolate_k(std::span<const std::pair<int, int>> points, int target_n);

}  // namespace qeff

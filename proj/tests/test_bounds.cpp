#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "qeff/bounds.hpp"
#include "qeff/combinatorics.hpp"
#include "qeff/errors.hpp"

using namespace qeff;

TEST_SUITE("bounds") {

TEST_CASE("hamming bound on reference triples") {
  CHECK(hamming_satisfied(5, 1, 1));
  CHECK(pow2(4) == pauli_ball_size(5, 1));  // 16 = 16, saturated
  CHECK_FALSE(hamming_satisfied(3, 1, 1));  // 4 < 10
  CHECK(pauli_ball_size(3, 1) == 10);
  for (int n : {1, 2, 7, 64, 511}) CHECK(hamming_satisfied(n, n, 0));
}

TEST_CASE("hamming equality identifies perfect triples") {
  CHECK(hamming_is_perfect(5, 1, 1));
  CHECK(hamming_is_perfect(21, 15, 1));
  CHECK(pauli_ball_size(21, 1) == 64);
  CHECK(hamming_is_perfect(85, 77, 1));
  CHECK_FALSE(hamming_is_perfect(8, 3, 1));  // 32 > 25
  CHECK(pauli_ball_size(8, 1) == 25);
}

TEST_CASE("gilbert-varshamov bound") {
  CHECK(gilbert_varshamov_satisfied(5, 1, 1));
  CHECK(pauli_ball_size(5, 2) == 106);
  for (int n : {1, 3, 17, 256}) CHECK(gilbert_varshamov_satisfied(n, n, 0));
  CHECK_FALSE(gilbert_varshamov_satisfied(64, 1, 1));  // 2^63 > 18337
  CHECK(pauli_ball_size(64, 2) == 18337);
}

TEST_CASE("singleton and pure bounds") {
  CHECK(singleton_satisfied(5, 1, 1));   // equality: 1 = 5 - 4
  CHECK_FALSE(singleton_satisfied(7, 1, 2));
  CHECK(pure_bound_satisfied(5, 1, 3));  // equality: 1 = 5 - 6 + 2
  CHECK_FALSE(pure_bound_satisfied(8, 5, 3));
  for (int n : {1, 2, 9, 100}) {
    CHECK(singleton_satisfied(n, n, 0));
    CHECK(pure_bound_satisfied(n, n, 1));
  }
}

TEST_CASE("bound preconditions are domain errors") {
  CHECK_THROWS_AS(hamming_satisfied(5, 6, 1), DomainError);
  CHECK_THROWS_AS(hamming_satisfied(5, -1, 1), DomainError);
  CHECK_THROWS_AS(hamming_satisfied(5, 1, 6), DomainError);
  CHECK_THROWS_AS(gilbert_varshamov_satisfied(5, 1, 3), DomainError);  // 2t > n
  CHECK_THROWS_AS(singleton_satisfied(5, 1, -1), DomainError);
  CHECK_THROWS_AS(pure_bound_satisfied(5, 1, 0), DomainError);
}

TEST_CASE("ball size agrees between product and recurrence routes") {
  // Two independent exact-integer evaluations of the same sum.
  for (int n : {0, 1, 2, 3, 5, 8, 21, 64, 128, 256, 512}) {
    for (int radius : {0, 1, 2, 3, 5, n / 2, n}) {
      if (radius > n) continue;
      CHECK(pauli_ball_size(n, radius) == test::ball_by_recurrence(n, radius));
    }
  }
}

TEST_CASE("hamming implies singleton on a sampled grid") {
  for (int n = 1; n <= 64; ++n)
    for (int t = 0; t <= 5 && t <= n; ++t)
      for (int k = 0; k <= n; ++k)
        if (hamming_satisfied(n, k, t)) CHECK(singleton_satisfied(n, k, t));
}

TEST_CASE("singleton and pure bounds coincide for d = 2t + 1") {
  for (int n = 1; n <= 64; ++n)
    for (int t = 0; t <= 5; ++t)
      for (int k = 0; k <= n; ++k)
        CHECK(singleton_satisfied(n, k, t) == pure_bound_satisfied(n, k, 2 * t + 1));
}

TEST_CASE("asymptotic rate endpoints and symmetry") {
  CHECK(asymptotic_rate(0.0) == 1.0);
  CHECK(asymptotic_rate(1.0) == 1.0);
  CHECK(asymptotic_rate(0.5) == -1.0);
  const double direct = 1.0 - 2.0 * (-0.1 * std::log2(0.1) - 0.9 * std::log2(0.9));
  CHECK(asymptotic_rate(0.1) == doctest::Approx(direct).epsilon(1e-15));
  CHECK(asymptotic_rate(0.1) == doctest::Approx(0.0620088128214).epsilon(1e-10));
  for (double x : {0.01, 0.2, 0.35, 0.49})
    CHECK(asymptotic_rate(x) == doctest::Approx(asymptotic_rate(1.0 - x)).epsilon(1e-12));
  CHECK_THROWS_AS(asymptotic_rate(-0.1), DomainError);
  CHECK_THROWS_AS(asymptotic_rate(1.1), DomainError);
}

TEST_CASE("max k under the hamming bound") {
  CHECK(max_k_hamming(64, 2) == 49);
  CHECK(max_k_hamming(256, 2) == 237);
  CHECK(max_k_hamming(170, 2) == 153);
  CHECK(max_k_hamming(256, 3) == 229);
  CHECK(max_k_hamming(170, 1) == 161);
  CHECK(max_k_hamming(5, 1) == 1);
  CHECK_FALSE(max_k_hamming(1, 1).has_value());  // 2 < 4 even at k = 0
  CHECK_FALSE(max_k_hamming(2, 2).has_value());
}

TEST_CASE("max k is monotone in n and t") {
  const auto value_or_sentinel = [](int n, int t) {
    const auto k = max_k_hamming(n, t);
    return k ? *k : -1;
  };
  for (int n = 1; n <= 64; ++n)
    for (int t = 0; t < 5 && t + 1 <= n; ++t)
      CHECK(value_or_sentinel(n, t + 1) <= value_or_sentinel(n, t));
  for (int t = 0; t <= 3; ++t)
    for (int n = std::max(1, t); n < 64; ++n)
      CHECK(value_or_sentinel(n + 1, t) >= value_or_sentinel(n, t));
}

TEST_CASE("linear extrapolation of code parameters") {
  const std::vector<std::pair<int, int>> exact = {{1, 1}, {2, 2}};
  CHECK(extrapolate_k(exact, 10) == 10);

  const std::vector<std::pair<int, int>> depth2 = {{14, 3},  {16, 5},  {17, 6},  {27, 15},
                                                   {39, 26}, {83, 68}, {118, 102}};
  CHECK(extrapolate_k(depth2, 170) == 151);
  CHECK(extrapolate_k(depth2, 256) == 233);

  const std::vector<std::pair<int, int>> depth3 = {{20, 3},  {22, 5},  {28, 11}, {36, 18},
                                                   {59, 39}, {94, 72}, {121, 98}};
  // The fit lands at 223.95; the conservative published value is 223.
  CHECK(extrapolate_k(depth3, 256) == 224);

  CHECK(extrapolate_k(depth2, 170) ==
        static_cast<int>(std::llround(test::least_squares_at(depth2, 170))));
  CHECK(extrapolate_k(depth2, 256) ==
        static_cast<int>(std::llround(test::least_squares_at(depth2, 256))));
  CHECK(extrapolate_k(depth3, 256) ==
        static_cast<int>(std::llround(test::least_squares_at(depth3, 256))));
}

TEST_CASE("extrapolation rounds ties away from zero") {
  const std::vector<std::pair<int, int>> up = {{0, 0}, {2, 1}};  // fit(1) = 0.5
  CHECK(extrapolate_k(up, 1) == 1);
  const std::vector<std::pair<int, int>> down = {{0, 0}, {2, -1}};  // fit(1) = -0.5
  CHECK(extrapolate_k(down, 1) == -1);
}

TEST_CASE("degenerate extrapolation inputs") {
  const std::vector<std::pair<int, int>> same_n = {{3, 1}, {3, 5}};
  CHECK_THROWS_AS(extrapolate_k(same_n, 10), DomainError);
  const std::vector<std::pair<int, int>> single = {{3, 1}};
  CHECK_THROWS_AS(extrapolate_k(single, 10), DomainError);
}

}  // TEST_SUITE

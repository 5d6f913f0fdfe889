#include "qeff/combinatorics.hpp"

#include <cmath>
#include <numbers>

#include "qeff/errors.hpp"

namespace qeff {

BigInt binomial(int n, int i) {
  if (i < 0 || i > n || n < 0) return 0;
  if (i > n - i) i = n - i;
  BigInt result = 1;
  // Running product of prefix binomials; every division is exact.
  for (int j = 1; j <= i; ++j) {
    result *= n - i + j;
    result /= j;
  }
  return result;
}

BigInt pow2(int exponent) {
  if (exponent < 0) throw DomainError("pow2: negative exponent");
  return BigInt(1) << exponent;
}

BigInt pow3(int exponent) {
  if (exponent < 0) throw DomainError("pow3: negative exponent");
  BigInt result = 1;
  BigInt base = 3;
  for (int e = exponent; e > 0; e >>= 1) {
    if (e & 1) result *= base;
    base *= base;
  }
  return result;
}

BigInt pauli_pattern_count(int n, int i) { return pow3(i) * binomial(n, i); }

BigInt pauli_ball_size(int n, int radius) {
  BigInt sum = 0;
  for (int i = 0; i <= radius; ++i) sum += pauli_pattern_count(n, i);
  return sum;
}

double log_big(const BigInt& value) {
  if (value <= 0) throw DomainError("log_big: non-positive argument");
  const auto bits = boost::multiprecision::msb(value);
  if (bits < 900) return std::log(value.convert_to<double>());
  // Too wide for a double: scale down and add the shift back in log space.
  const int shift = static_cast<int>(bits) - 64;
  const double top = BigInt(value >> shift).convert_to<double>();
  return std::log(top) + shift * std::numbers::ln2;
}

double clamped_ratio(const BigInt& num, const BigInt& den) {
  if (num < 0 || den < 0) throw DomainError("clamped_ratio: negative argument");
  if (num >= den) return 1.0;  // also covers den == 0
  constexpr int kScaleBits = 64;
  const BigInt scaled = (num << kScaleBits) / den;
  return std::ldexp(scaled.convert_to<double>(), -kScaleBits);
}

}  // namespace qeff

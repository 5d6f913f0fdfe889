#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qeff {

using BigInt = boost::multiprecision::cpp_int;

// C(n, i) as an exact integer; zero outside 0 <= i <= n.
BigInt binomial(int n, int i);

// 2^e and 3^e for e >= 0.
BigInt pow2(int exponent);
BigInt pow3(int exponent);

// Number of distinct weight-i Pauli patterns on n qubits: 3^i C(n, i).
BigInt pauli_pattern_count(int n, int i);

// Patterns of weight <= radius: sum of pauli_pattern_count(n, i) for i <= radius.
BigInt pauli_ball_size(int n, int radius);

// Natural log of a positive integer of any size.
double log_big(const BigInt& value);

// min(1, num/den) for non-negative integers, exact to ~2^-64. den == 0 gives 1.
double clamped_ratio(const BigInt& num, const BigInt& den);

}  // namespace qeff

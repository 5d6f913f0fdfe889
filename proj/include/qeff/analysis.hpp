#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qeff/efficiency.hpp"
#include "qeff/registry.hpp"

namespace qeff {

struct EnvelopePoint {
  double p;
  CodeParams best_code;
  double efficiency;
};

enum class CrossoverMethod { approximate, exact };

struct Bracket {
  double lo;
  double hi;
};

struct CrossoverResult {
  double p_c;
  CrossoverMethod method;
  Bracket bracket;  // final bisection bracket (exact method only)
};

// Inclusive grids with `points` samples; points == 1 requires lo == hi.
std::vector<double> linear_grid(double lo, double hi, int points);
std::vector<double> log_grid(double lo, double hi, int points);  // lo > 0

// Pointwise maximum of the codes' efficiency curves over the grid. Ties at a
// grid point go to the smaller n, then the larger k. Throws on an empty set.
std::vector<EnvelopePoint> envelope(std::span<const CodeParams> codes,
                                    std::span<const double> grid, bool boosted = false);

// Envelope value at a single probability.
double envelope_efficiency(std::span<const CodeParams> codes, double p, bool boosted = false);

// Break-even error probability between a distance-3 code with k1 logical
// qubits and a distance-5 code with k2 < k1 of the same length n, from the
// second-order expansion: sqrt(2 (k1 - k2) / (k1 n (n - 1))).
double approx_crossover(int n, int k1, int k2);

using EfficiencyCurve = std::function<double(double)>;

// Bisection root of a(p) - b(p) over the bracket, to absolute tolerance tol.
// Throws NumericError when the bracket does not straddle a sign change.
CrossoverResult exact_crossover(const EfficiencyCurve& a, const EfficiencyCurve& b,
                                Bracket bracket, double tol = 1e-9);
CrossoverResult exact_crossover(const CodeParams& a, const CodeParams& b, Bracket bracket,
                                double tol = 1e-9);

struct FigureSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;  // (p, value)
};

struct FigureDataset {
  int id = 0;
  std::vector<FigureSeries> series;
};

// Data series behind the five summary figures:
//   1  P and E curves for [[64,56,3]], [[64,48,5]], [[64,43,7]]
//   2  E curves for five short distance-3 codes
//   3  hypothetical-code envelopes for t = 1, 2, 3 plus the existing t=1 envelope
//   4  existing-code envelopes for t = 1, 2, 3
//   5  existing t=2 envelope and [[128,110,5]], plain vs syndrome-boosted
FigureDataset figure_dataset(int figure_id, std::span<const double> grid,
                             const CodeRegistry& registry = builtin_registry());

inline constexpr int kDefaultFigurePoints = 1001;

}  // namespace qeff

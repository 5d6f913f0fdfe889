#include "qeff/types.hpp"

#include <string>

#include "qeff/errors.hpp"

namespace qeff {

CodeParams make_code_params(int n, int k, int d) {
  if (n < 1) throw DomainError("code params: n must be positive");
  if (k < 0 || k > n) throw DomainError("code params: k must satisfy 0 <= k <= n");
  if (d < 1 || d % 2 == 0)
    throw DomainError("code params: d must be a positive odd integer");
  if ((d - 1) / 2 > n)
    throw DomainError("code params: correction depth (d-1)/2 exceeds n");
  return CodeParams{n, k, d};
}

std::string to_string(const CodeParams& params) {
  return "[[" + std::to_string(params.n) + "," + std::to_string(params.k) + "," +
         std::to_string(params.d) + "]]";
}

std::string_view to_string(CodeStatus status) {
  switch (status) {
    case CodeStatus::existing: return "existing";
    case CodeStatus::perfect: return "perfect";
    case CodeStatus::hypothetical: return "hypothetical";
    case CodeStatus::extrapolated: return "extrapolated";
  }
  return "unknown";
}

std::optional<CodeStatus> parse_code_status(std::string_view text) {
  if (text == "existing") return CodeStatus::existing;
  if (text == "perfect") return CodeStatus::perfect;
  if (text == "hypothetical") return CodeStatus::hypothetical;
  if (text == "extrapolated") return CodeStatus::extrapolated;
  return std::nullopt;
}

}  // namespace qeff

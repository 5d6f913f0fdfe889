#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace qeff {

// Block code parameters [[n, k, d]]: k logical qubits mapped onto n physical
// qubits with codeword distance d. Nondegenerate correction of up to t
// single-qubit errors requires d = 2t + 1, so d is kept odd.
struct CodeParams {
  int n = 1;  // physical qubits
  int k = 0;  // logical qubits
  int d = 1;  // codeword distance, odd

  int correction_depth() const { return (d - 1) / 2; }

  friend auto operator<=>(const CodeParams&, const CodeParams&) = default;
};

// Checked constructor: 0 <= k <= n, d odd, 1 <= d <= 2n + 1. Throws DomainError.
CodeParams make_code_params(int n, int k, int d);

// "[[n,k,d]]"
std::string to_string(const CodeParams& params);

enum class CodeStatus { existing, perfect, hypothetical, extrapolated };

std::string_view to_string(CodeStatus status);
std::optional<CodeStatus> parse_code_status(std::string_view text);

struct CodeRecord {
  CodeParams params;
  CodeStatus status = CodeStatus::existing;
  std::string source;  // free-text provenance; no commas (CSV-safe)

  friend bool operator==(const CodeRecord&, const CodeRecord&) = default;
};

}  // namespace qeff

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qeff/types.hpp"

namespace qeff {

struct RegistryQuery {
  std::optional<int> correction_depth;
  std::vector<CodeStatus> statuses;  // empty matches any status
  std::optional<int> max_n;
};

// Immutable, validated collection of code records, unique by (n, k, d).
// Every record satisfies the Hamming bound; records flagged perfect satisfy
// it with exact equality. Safe for unrestricted concurrent reads.
class CodeRegistry {
 public:
  // Validates all records; throws ValidationError naming the offending triple.
  static CodeRegistry from_records(std::vector<CodeRecord> records);

  const std::vector<CodeRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }

  std::vector<CodeRecord> query(const RegistryQuery& query) const;
  std::vector<CodeParams> query_params(const RegistryQuery& query) const;

  // Union of two registries; duplicate (n, k, d) triples are an error.
  CodeRegistry merged_with(const CodeRegistry& other) const;

  // One record per line: "n k d status source". load_registry round-trips.
  std::string serialize() const;

  friend bool operator==(const CodeRegistry&, const CodeRegistry&) = default;

 private:
  CodeRegistry() = default;
  std::vector<CodeRecord> records_;
};

// The code tables named in the source survey: the most efficient existing
// codes with t = 1, 2, 3 and n <= 256, the hypothetical codes that would beat
// them, the linearly extrapolated entries, and the three n = 64 comparison
// codes. Built and validated once.
const CodeRegistry& builtin_registry();

// Parses the registry file format: one record per line, whitespace-separated
// "n k d status source...", '#' comment lines and blank lines ignored.
// Throws ParseError (malformed rows) or ValidationError (invariant violations).
CodeRegistry load_registry(std::string_view table_text);

}  // namespace qeff

#include "qeff/registry.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <tuple>

#include "qeff/bounds.hpp"
#include "qeff/errors.hpp"

namespace qeff {

namespace {

void validate_record(const CodeRecord& record) {
  const auto& c = record.params;
  make_code_params(c.n, c.k, c.d);  // rejects malformed triples
  const int t = c.correction_depth();
  if (!hamming_satisfied(c.n, c.k, t))
    throw ValidationError(to_string(c) + ": violates the Hamming bound");
  if (record.status == CodeStatus::perfect && !hamming_is_perfect(c.n, c.k, t))
    throw ValidationError(to_string(c) +
                          ": flagged perfect but the Hamming bound is not an equality");
  if (record.source.find(',') != std::string::npos)
    throw ValidationError(to_string(c) + ": source must not contain commas");
}

struct BuiltinRow {
  int n, k, d;
  CodeStatus status;
  const char* source;
};

constexpr CodeStatus kExisting = CodeStatus::existing;
constexpr CodeStatus kPerfect = CodeStatus::perfect;
constexpr CodeStatus kHypothetical = CodeStatus::hypothetical;
constexpr CodeStatus kExtrapolated = CodeStatus::extrapolated;

const BuiltinRow kBuiltinRows[] = {
    // most efficient existing t=1 codes, n <= 256
    {5, 1, 3, kPerfect, "existing t=1 list"},
    {8, 3, 3, kExisting, "existing t=1 list"},
    {15, 9, 3, kExisting, "existing t=1 list"},
    {16, 10, 3, kExisting, "existing t=1 list"},
    {17, 11, 3, kExisting, "existing t=1 list"},
    {21, 15, 3, kPerfect, "existing t=1 list"},
    {40, 33, 3, kExisting, "existing t=1 list"},
    {74, 66, 3, kExisting, "existing t=1 list"},
    {85, 77, 3, kPerfect, "existing t=1 list"},
    {128, 119, 3, kExisting, "existing t=1 list"},
    {256, 246, 3, kExisting, "existing t=1 list"},
    // the only hypothetical t=1 code that could beat them
    {170, 161, 3, kHypothetical, "hypothetical t=1 list"},
    // most efficient existing t=2 codes
    {11, 1, 5, kExisting, "existing t=2 list"},
    {16, 4, 5, kExisting, "existing t=2 list"},
    {18, 6, 5, kExisting, "existing t=2 list"},
    {27, 13, 5, kExisting, "existing t=2 list"},
    {30, 16, 5, kExisting, "existing t=2 list"},
    {35, 20, 5, kExisting, "existing t=2 list"},
    {58, 42, 5, kExisting, "existing t=2 list"},
    {70, 54, 5, kExisting, "existing t=2 list"},
    {128, 110, 5, kExisting, "existing t=2 list"},
    {256, 231, 5, kExisting, "existing t=2 list"},
    // hypothetical t=2 codes; the last two come from a linear fit of the set
    {14, 3, 5, kHypothetical, "hypothetical t=2 list"},
    {16, 5, 5, kHypothetical, "hypothetical t=2 list"},
    {17, 6, 5, kHypothetical, "hypothetical t=2 list"},
    {27, 15, 5, kHypothetical, "hypothetical t=2 list"},
    {39, 26, 5, kHypothetical, "hypothetical t=2 list"},
    {83, 68, 5, kHypothetical, "hypothetical t=2 list"},
    {118, 102, 5, kHypothetical, "hypothetical t=2 list"},
    {170, 151, 5, kExtrapolated, "linear fit of hypothetical t=2 set"},
    {256, 233, 5, kExtrapolated, "linear fit of hypothetical t=2 set"},
    // most efficient existing t=3 codes
    {17, 1, 7, kExisting, "existing t=3 list"},
    {25, 5, 7, kExisting, "existing t=3 list"},
    {35, 13, 7, kExisting, "existing t=3 list"},
    {42, 20, 7, kExisting, "existing t=3 list"},
    {64, 38, 7, kExisting, "existing t=3 list"},
    {113, 85, 7, kExisting, "existing t=3 list"},
    {128, 98, 7, kExisting, "existing t=3 list"},
    {255, 215, 7, kExisting, "existing t=3 list"},
    // hypothetical t=3 codes
    {20, 3, 7, kHypothetical, "hypothetical t=3 list"},
    {22, 5, 7, kHypothetical, "hypothetical t=3 list"},
    {28, 11, 7, kHypothetical, "hypothetical t=3 list"},
    {36, 18, 7, kHypothetical, "hypothetical t=3 list"},
    {59, 39, 7, kHypothetical, "hypothetical t=3 list"},
    {94, 72, 7, kHypothetical, "hypothetical t=3 list"},
    {121, 98, 7, kHypothetical, "hypothetical t=3 list"},
    {256, 223, 7, kExtrapolated, "linear fit of hypothetical t=3 set"},
    // fixed-length comparison examples at n = 64
    {64, 56, 3, kExisting, "n=64 comparison"},
    {64, 48, 5, kExisting, "n=64 comparison"},
    {64, 43, 7, kHypothetical, "n=64 comparison"},
};

bool is_comment_or_blank(std::string_view line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string_view::npos || line[first] == '#';
}

int parse_int_field(std::string_view token, std::size_t line_no, const char* field) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(line_no, std::string(field) + ": expected an integer, got '" +
                                  std::string(token) + "'");
  return value;
}

}  // namespace

CodeRegistry CodeRegistry::from_records(std::vector<CodeRecord> records) {
  std::set<std::tuple<int, int, int>> seen;
  for (const auto& record : records) {
    validate_record(record);
    const auto key = std::make_tuple(record.params.n, record.params.k, record.params.d);
    if (!seen.insert(key).second)
      throw ValidationError(to_string(record.params) + ": duplicate (n, k, d) triple");
  }
  CodeRegistry registry;
  registry.records_ = std::move(records);
  return registry;
}

std::vector<CodeRecord> CodeRegistry::query(const RegistryQuery& query) const {
  std::vector<CodeRecord> result;
  for (const auto& record : records_) {
    if (query.correction_depth &&
        record.params.correction_depth() != *query.correction_depth)
      continue;
    if (query.max_n && record.params.n > *query.max_n) continue;
    if (!query.statuses.empty() &&
        std::find(query.statuses.begin(), query.statuses.end(), record.status) ==
            query.statuses.end())
      continue;
    result.push_back(record);
  }
  return result;
}

std::vector<CodeParams> CodeRegistry::query_params(const RegistryQuery& query) const {
  std::vector<CodeParams> result;
  for (const auto& record : this->query(query)) result.push_back(record.params);
  return result;
}

CodeRegistry CodeRegistry::merged_with(const CodeRegistry& other) const {
  std::vector<CodeRecord> combined = records_;
  combined.insert(combined.end(), other.records_.begin(), other.records_.end());
  return from_records(std::move(combined));  // re-validation catches conflicts
}

std::string CodeRegistry::serialize() const {
  std::ostringstream out;
  for (const auto& record : records_) {
    out << record.params.n << ' ' << record.params.k << ' ' << record.params.d << ' '
        << to_string(record.status);
    if (!record.source.empty()) out << ' ' << record.source;
    out << '\n';
  }
  return out.str();
}

const CodeRegistry& builtin_registry() {
  static const CodeRegistry registry = [] {
    std::vector<CodeRecord> records;
    records.reserve(std::size(kBuiltinRows));
    for (const auto& row : kBuiltinRows)
      records.push_back({CodeParams{row.n, row.k, row.d}, row.status, row.source});
    return CodeRegistry::from_records(std::move(records));
  }();
  return registry;
}

CodeRegistry load_registry(std::string_view table_text) {
  std::vector<CodeRecord> records;
  std::size_t line_no = 0;
  std::istringstream lines{std::string(table_text)};
  std::string line;
  while (std::getline(lines, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;

    std::istringstream fields(line);
    std::string n_tok, k_tok, d_tok, status_tok;
    if (!(fields >> n_tok >> k_tok >> d_tok >> status_tok))
      throw ParseError(line_no, "expected at least 'n k d status'");

    CodeRecord record;
    const int n = parse_int_field(n_tok, line_no, "n");
    const int k = parse_int_field(k_tok, line_no, "k");
    const int d = parse_int_field(d_tok, line_no, "d");
    const auto status = parse_code_status(status_tok);
    if (!status)
      throw ParseError(line_no, "unknown status '" + status_tok + "'");

    try {
      record.params = make_code_params(n, k, d);
    } catch (const DomainError& e) {
      throw ParseError(line_no, "[[" + std::to_string(n) + "," + std::to_string(k) + "," +
                                    std::to_string(d) + "]]: " + e.what());
    }
    record.status = *status;

    std::string rest;
    std::getline(fields, rest);
    const auto start = rest.find_first_not_of(" \t");
    const auto end = rest.find_last_not_of(" \t\r");
    if (start != std::string::npos) record.source = rest.substr(start, end - start + 1);
    records.push_back(std::move(record));
  }
  return CodeRegistry::from_records(std::move(records));
}

}  // namespace qeff

#include "qeff/output_table.hpp"

#include <cstdio>
#include <stdexcept>

namespace qeff {

OutputTable::OutputTable(std::vector<std::string> header) : header_(std::move(header)) {
  if (header_.empty()) throw std::logic_error("OutputTable: empty header");
}

void OutputTable::add_row(std::vector<std::string> row) {
  if (row.size() != header_.size())
    throw std::logic_error("OutputTable: row arity does not match header");
  rows_.push_back(std::move(row));
}

void OutputTable::write_csv(std::ostream& out) const {
  for (std::size_t i = 0; i < header_.size(); ++i)
    out << header_[i] << (i + 1 < header_.size() ? "," : "\n");
  for (const auto& row : rows_)
    for (std::size_t i = 0; i < row.size(); ++i)
      out << row[i] << (i + 1 < row.size() ? "," : "\n");
}

std::string format_real(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

std::string format_real_2sig(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.2g", value);
  return buffer;
}

std::string format_int(const BigInt& value) { return value.str(); }

}  // namespace qeff

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qeff/combinatorics.hpp"

namespace qeff {

// Header plus rows of equal arity, written as comma-separated text with a
// header line and '\n' terminators. Values must not contain commas.
class OutputTable {
 public:
  explicit OutputTable(std::vector<std::string> header);

  void add_row(std::vector<std::string> row);
  void write_csv(std::ostream& out) const;

  std::size_t rows() const { return rows_.size(); }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

// 12 significant digits, '.' decimal point.
std::string format_real(double value);

// 2 significant digits, for human-oriented summary columns.
std::string format_real_2sig(double value);

std::string format_int(const BigInt& value);

}  // namespace qeff

#ifndef CXM_CSV_HPP
#define CXM_CSV_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "cxm/errors.hpp"

namespace cxm {

/// Split a comma-separated stream into trimmed string cells. Supports double
/// quotes around cells ("" escapes a quote); blank lines are skipped.
std::vector<std::vector<std::string>> read_csv(std::istream& in);

/// Numeric cell with positional diagnostics (1-based row/col).
double parse_number(const std::string& cell, std::size_t row, std::size_t col);

/// Shortest round-trip formatting so repeated runs emit identical bytes.
std::string format_number(double value);

void write_csv_row(std::ostream& out, const std::vector<std::string>& cells);

} // namespace cxm

#endif

#ifndef CXM_ERRORS_HPP
#define CXM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cxm {

// Error taxonomy shared by the library and the CLI exit-code mapping.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad structural parameters: alphabet size, rule numbers, counts, rates.
struct parameter_error : error {
    using error::error;
};

// Empty series/matrix where data is required.
struct empty_input_error : error {
    using error::error;
};

// Mismatched lengths / non-rectangular data.
struct dimension_error : error {
    using error::error;
};

// Value outside its documented range, e.g. classify() outside [0,1].
struct range_error : error {
    using error::error;
};

// An analytic expression left its domain (negative radicand, zero divisor).
struct domain_error : error {
    domain_error(const std::string& what, std::string subexpr = {})
        : error(what), subexpression(std::move(subexpr)) {}
    std::string subexpression;
};

// Tabular input problems, with position when known (1-based, 0 = unknown).
struct parse_error : error {
    parse_error(const std::string& what, std::size_t row = 0, std::size_t col = 0)
        : error(what), row(row), col(col) {}
    std::size_t row;
    std::size_t col;
};

// Not enough rows/samples for the requested statistic.
struct insufficient_data_error : error {
    using error::error;
};

} // namespace cxm

#endif

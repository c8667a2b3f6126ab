#ifndef CXM_SERIES_HPP
#define CXM_SERIES_HPP

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "cxm/errors.hpp"

namespace cxm {

/// A finite sequence of symbols over the alphabet {0, ..., beta-1}.
struct SymbolSeries {
    std::vector<std::uint32_t> symbols;
    std::uint32_t beta = 2;

    SymbolSeries() = default;
    SymbolSeries(std::vector<std::uint32_t> syms, std::uint32_t alphabet)
        : symbols(std::move(syms)), beta(alphabet) {
        validate();
    }
    SymbolSeries(std::initializer_list<std::uint32_t> syms, std::uint32_t alphabet)
        : symbols(syms), beta(alphabet) {
        validate();
    }

    std::size_t size() const { return symbols.size(); }
    bool empty() const { return symbols.empty(); }

    void validate() const {
        if (beta < 1) throw parameter_error("alphabet size must be positive");
        for (auto s : symbols)
            if (s >= beta) throw range_error("symbol out of alphabet range");
    }
};

/// Parse a digit string like "0001000100010001" into a binary (or wider) series.
SymbolSeries series_from_digits(const std::string& digits, std::uint32_t beta);

/// Rows are time steps, columns are variables. E/S/C read columns; H reads rows.
class StateMatrix {
  public:
    StateMatrix() = default;
    StateMatrix(std::size_t rows, std::size_t cols, std::uint32_t beta)
        : rows_(rows), cols_(cols), beta_(beta), data_(rows * cols, 0) {
        if (beta < 1) throw parameter_error("alphabet size must be positive");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t beta() const { return beta_; }

    std::uint32_t operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    void set(std::size_t r, std::size_t c, std::uint32_t v) {
        if (v >= beta_) throw range_error("symbol out of alphabet range");
        data_[r * cols_ + c] = v;
    }

    /// Time series of one variable (one column), top to bottom.
    SymbolSeries column(std::size_t c) const {
        SymbolSeries s;
        s.beta = beta_;
        s.symbols.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) s.symbols.push_back((*this)(r, c));
        return s;
    }

    /// One system state (one row), left to right.
    SymbolSeries row(std::size_t r) const {
        SymbolSeries s;
        s.beta = beta_;
        s.symbols.reserve(cols_);
        for (std::size_t c = 0; c < cols_; ++c) s.symbols.push_back((*this)(r, c));
        return s;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::uint32_t beta_ = 2;
    std::vector<std::uint32_t> data_;
};

} // namespace cxm

#endif

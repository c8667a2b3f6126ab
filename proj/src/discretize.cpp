#include "cxm/discretize.hpp"

#include <cmath>
#include <string>

namespace cxm {

SymbolSeries series_from_digits(const std::string& digits, std::uint32_t beta) {
    SymbolSeries s;
    s.beta = beta;
    s.symbols.reserve(digits.size());
    for (char ch : digits) {
        if (ch < '0' || ch > '9')
            throw parse_error(std::string("non-digit character '") + ch + "' in series");
        s.symbols.push_back(static_cast<std::uint32_t>(ch - '0'));
    }
    s.validate();
    return s;
}

void ProbDist::validate() const {
    if (beta < 2) throw parameter_error("alphabet size must be at least 2");
    if (probs.size() != beta)
        throw dimension_error("probability vector length must equal alphabet size");
    double sum = 0.0;
    for (double p : probs) {
        if (p < 0.0 || p > 1.0) throw range_error("probability outside [0,1]");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw range_error("probabilities must sum to 1");
}

SymbolSeries normalize_to_classes(const std::vector<double>& values,
                                  std::uint32_t beta, double min, double max) {
    if (beta < 2) throw parameter_error("alphabet size must be at least 2");
    if (!(max > min)) throw parameter_error("degenerate range: max must exceed min");
    SymbolSeries out;
    out.beta = beta;
    out.symbols.reserve(values.size());
    const double span = max - min;
    for (double x : values) {
        if (std::isnan(x)) throw range_error("NaN value cannot be discretized");
        double t = (x - min) / span;
        if (t < 0.0) t = 0.0;
        if (t > 1.0) t = 1.0;
        auto cls = static_cast<std::uint32_t>(std::floor(beta * t));
        if (cls >= beta) cls = beta - 1;  // x == max
        out.symbols.push_back(cls);
    }
    return out;
}

SymbolSeries regroup_bits(const SymbolSeries& bits, std::uint32_t b) {
    if (bits.beta != 2) throw parameter_error("regroup_bits expects a binary series");
    if (b < 1) throw parameter_error("bit width must be at least 1");
    if (b > 31) throw parameter_error("bit width too large");
    SymbolSeries out;
    out.beta = 1u << b;
    const std::size_t n = bits.size() / b;
    out.symbols.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t word = 0;
        for (std::uint32_t j = 0; j < b; ++j)
            word = (word << 1) | bits.symbols[i * b + j];
        out.symbols.push_back(word);
    }
    return out;
}

SymbolSeries expand_bits(const SymbolSeries& grouped, std::uint32_t b) {
    if (b < 1 || b > 31) throw parameter_error("bit width out of range");
    if (grouped.beta != (1u << b))
        throw parameter_error("alphabet does not match bit width");
    SymbolSeries out;
    out.beta = 2;
    out.symbols.reserve(grouped.size() * b);
    for (auto word : grouped.symbols)
        for (std::uint32_t j = 0; j < b; ++j)
            out.symbols.push_back((word >> (b - 1 - j)) & 1u);
    return out;
}

StateMatrix regroup_matrix(const StateMatrix& m, std::uint32_t b) {
    if (m.beta() != 2) throw parameter_error("regroup_matrix expects a binary matrix");
    if (b < 1 || b > 31) throw parameter_error("bit width out of range");
    const std::size_t rows = m.rows() / b;
    StateMatrix out(rows, m.cols(), 1u << b);
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < rows; ++r) {
            std::uint32_t word = 0;
            for (std::uint32_t j = 0; j < b; ++j)
                word = (word << 1) | m(r * b + j, c);
            out.set(r, c, word);
        }
    return out;
}

ProbDist estimate_probs(const SymbolSeries& series) {
    if (series.empty()) throw empty_input_error("cannot estimate probabilities of an empty series");
    ProbDist d;
    d.beta = series.beta;
    d.probs.assign(series.beta, 0.0);
    for (auto s : series.symbols) d.probs[s] += 1.0;
    const double n = static_cast<double>(series.size());
    for (double& p : d.probs) p /= n;
    return d;
}

} // namespace cxm

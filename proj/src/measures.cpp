#include "cxm/measures.hpp"

#include <cmath>

namespace cxm {

int category_rank(CategoryLabel label) { return static_cast<int>(label); }

std::string category_label_name(CategoryLabel label) {
    switch (label) {
        case CategoryLabel::VeryLow: return "VeryLow";
        case CategoryLabel::Low: return "Low";
        case CategoryLabel::Medium: return "Medium";
        case CategoryLabel::High: return "High";
        case CategoryLabel::VeryHigh: return "VeryHigh";
    }
    return "?";
}

std::string category_color_name(CategoryColor color) {
    switch (color) {
        case CategoryColor::Red: return "Red";
        case CategoryColor::Orange: return "Orange";
        case CategoryColor::Yellow: return "Yellow";
        case CategoryColor::Green: return "Green";
        case CategoryColor::Blue: return "Blue";
    }
    return "?";
}

double shannon_information(const ProbDist& dist) {
    dist.validate();
    const double k = 1.0 / std::log2(static_cast<double>(dist.beta));
    double sum = 0.0;
    for (double p : dist.probs)
        if (p > 0.0) sum += p * std::log2(p);  // 0 log 0 = 0
    double info = -k * sum;
    if (info < 0.0) info = 0.0;
    if (info > 1.0) info = 1.0;
    return info;
}

double emergence(const SymbolSeries& series) {
    if (series.empty()) throw empty_input_error("emergence of an empty series");
    if (series.beta < 2) throw parameter_error("alphabet size must be at least 2");
    return shannon_information(estimate_probs(series));
}

double self_organization(const SymbolSeries& series) {
    return 1.0 - emergence(series);
}

double complexity(const SymbolSeries& series) {
    const double e = emergence(series);
    return 4.0 * e * (1.0 - e);
}

double hamming_distance(const SymbolSeries& a, const SymbolSeries& b) {
    if (a.size() != b.size())
        throw dimension_error("hamming_distance requires equal lengths");
    if (a.beta != b.beta)
        throw dimension_error("hamming_distance requires matching alphabets");
    if (a.empty()) throw empty_input_error("hamming_distance of empty rows");
    std::size_t diff = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.symbols[i] != b.symbols[i]) ++diff;
    return static_cast<double>(diff) / static_cast<double>(a.size());
}

std::vector<double> homeostasis_series(const StateMatrix& matrix) {
    if (matrix.rows() < 2)
        throw insufficient_data_error("homeostasis needs at least 2 rows");
    std::vector<double> h;
    h.reserve(matrix.rows() - 1);
    for (std::size_t r = 0; r + 1 < matrix.rows(); ++r)
        h.push_back(1.0 - hamming_distance(matrix.row(r), matrix.row(r + 1)));
    return h;
}

double homeostasis(const StateMatrix& matrix) {
    auto h = homeostasis_series(matrix);
    double sum = 0.0;
    for (double x : h) sum += x;
    return sum / static_cast<double>(h.size());
}

VariableHomeostasis variable_homeostasis(const SymbolSeries& series,
                                         EvennessCases cases) {
    if (series.empty()) throw empty_input_error("variable_homeostasis of an empty series");
    ProbDist d = estimate_probs(series);

    double mean = 1.0 / static_cast<double>(d.beta);
    double var = 0.0;
    for (double p : d.probs) var += (p - mean) * (p - mean);
    var /= static_cast<double>(d.beta);  // population variance
    const double sigma_p = std::sqrt(var);

    double info_nat = 0.0;
    for (double p : d.probs)
        if (p > 0.0) info_nat -= p * std::log(p);

    const double n_cases = cases == EvennessCases::ClassCount
                               ? static_cast<double>(d.beta)
                               : static_cast<double>(series.size());
    const double evenness = std::exp(info_nat) / n_cases;

    VariableHomeostasis out;
    out.hmv = sigma_p / evenness;
    out.hmv_n = 1.0 - 1.0 / (out.hmv + 1.0);
    return out;
}

Autopoiesis autopoiesis(double c_system, double c_environment) {
    if (c_system < 0.0 || c_system > 1.0 || c_environment < 0.0 || c_environment > 1.0)
        throw range_error("complexities must lie in [0,1]");
    if (c_environment == 0.0) {
        if (c_system == 0.0) return {Autopoiesis::Kind::Undefined, 0.0};
        return {Autopoiesis::Kind::Infinite, 0.0};
    }
    return {Autopoiesis::Kind::Value, c_system / c_environment};
}

Category classify(double value) {
    if (value < 0.0 || value > 1.0 || std::isnan(value))
        throw range_error("classify expects a value in [0,1]");
    if (value < 0.2) return {CategoryLabel::VeryLow, CategoryColor::Red};
    if (value < 0.4) return {CategoryLabel::Low, CategoryColor::Orange};
    if (value < 0.6) return {CategoryLabel::Medium, CategoryColor::Yellow};
    if (value < 0.8) return {CategoryLabel::High, CategoryColor::Green};
    return {CategoryLabel::VeryHigh, CategoryColor::Blue};
}

AveragedMeasures measure_matrix(const StateMatrix& m) {
    if (m.cols() == 0 || m.rows() == 0)
        throw empty_input_error("measure_matrix of an empty matrix");
    AveragedMeasures out;
    double se = 0.0, sc = 0.0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        double e = emergence(m.column(c));
        se += e;
        sc += 4.0 * e * (1.0 - e);
    }
    out.e = se / static_cast<double>(m.cols());
    out.s = 1.0 - out.e;
    out.c = sc / static_cast<double>(m.cols());
    if (m.rows() >= 2) out.h = homeostasis(m);
    return out;
}

std::vector<ScaleMeasures> multiscale_profile(const SymbolSeries& binary,
                                              const std::vector<std::uint32_t>& bases) {
    std::vector<ScaleMeasures> out;
    out.reserve(bases.size());
    for (auto b : bases) {
        SymbolSeries grouped = regroup_bits(binary, b);
        ScaleMeasures sm;
        sm.bits = b;
        sm.beta = 1u << b;
        sm.measures = MeasureSet(emergence(grouped));
        out.push_back(sm);
    }
    return out;
}

std::vector<ScaleAveraged> multiscale_profile(const StateMatrix& binary,
                                              const std::vector<std::uint32_t>& bases) {
    std::vector<ScaleAveraged> out;
    out.reserve(bases.size());
    for (auto b : bases) {
        StateMatrix grouped = regroup_matrix(binary, b);
        out.push_back({b, 1u << b, measure_matrix(grouped)});
    }
    return out;
}

} // namespace cxm

#ifndef CXM_MEASURES_HPP
#define CXM_MEASURES_HPP

#include <optional>
#include <string>
#include <vector>

#include "cxm/discretize.hpp"
#include "cxm/series.hpp"

namespace cxm {

enum class CategoryLabel { VeryLow, Low, Medium, High, VeryHigh };
enum class CategoryColor { Red, Orange, Yellow, Green, Blue };

struct Category {
    CategoryLabel label;
    CategoryColor color;
};

int category_rank(CategoryLabel label);
std::string category_label_name(CategoryLabel label);
std::string category_color_name(CategoryColor color);

/// E/S/C for one series (or one averaged component). Only E is stored; S and C
/// are derived so the identities S = 1-E and C = 4*E*S cannot drift.
class MeasureSet {
  public:
    MeasureSet() = default;
    explicit MeasureSet(double emergence) : e_(emergence) {}

    double E() const { return e_; }
    double S() const { return 1.0 - e_; }
    double C() const { return 4.0 * e_ * (1.0 - e_); }

    std::optional<double> H;
    std::optional<Category> category;

  private:
    double e_ = 0.0;
};

/// Normalized Shannon information: -K * sum p log2 p with K = 1/log2(beta).
/// Terms with p = 0 contribute 0.
double shannon_information(const ProbDist& dist);

/// E of a series: Shannon information of its empirical symbol frequencies.
double emergence(const SymbolSeries& series);

/// S = 1 - E.
double self_organization(const SymbolSeries& series);

/// C = 4 * E * (1 - E); maximal exactly when E = 0.5.
double complexity(const SymbolSeries& series);

/// Fraction of positions where two equal-length state rows differ.
double hamming_distance(const SymbolSeries& a, const SymbolSeries& b);

/// H of a state matrix: mean over consecutive rows of 1 - hamming_distance.
double homeostasis(const StateMatrix& matrix);

/// Per-transition similarity series h(t) = 1 - d(row_t, row_t+1).
std::vector<double> homeostasis_series(const StateMatrix& matrix);

/// Which "Cs" divides the evenness term: the alphabet size (class count,
/// the default) or the sample count (the literal reading).
enum class EvennessCases { ClassCount, SampleCount };

struct VariableHomeostasis {
    double hmv;         // sigmaP / (e^I_nat / cases)
    double hmv_n;       // 1 - 1/(hmv + 1)
};

/// Dispersion-over-evenness homeostasis of a single variable. sigmaP is the
/// population standard deviation of the class-probability vector; the evenness
/// term uses natural-log entropy.
VariableHomeostasis variable_homeostasis(const SymbolSeries& series,
                                         EvennessCases cases = EvennessCases::ClassCount);

struct Autopoiesis {
    enum class Kind { Value, Infinite, Undefined } kind;
    double value = 0.0;  // meaningful only when kind == Value

    bool defined() const { return kind == Kind::Value; }
};

/// A = C(system) / C(environment), with the 0-complexity corner cases flagged.
Autopoiesis autopoiesis(double c_system, double c_environment);

/// Five bins over [0,1], lower-inclusive, top bin closed.
Category classify(double value);

/// Means of per-variable measures. Unlike MeasureSet, c is the mean of the
/// member C values, which is not 4*e*(1-e) in general.
struct AveragedMeasures {
    double e = 0.0;
    double s = 1.0;
    double c = 0.0;
    std::optional<double> h;
};

/// Per-column E/S/C averaged over columns; H from the rows.
AveragedMeasures measure_matrix(const StateMatrix& m);

struct ScaleMeasures {
    std::uint32_t bits;   // b
    std::uint32_t beta;   // 2^b
    MeasureSet measures;
};

/// E/S/C of a binary series regrouped at each requested bit width.
std::vector<ScaleMeasures> multiscale_profile(const SymbolSeries& binary,
                                              const std::vector<std::uint32_t>& bases);

struct ScaleAveraged {
    std::uint32_t bits;
    std::uint32_t beta;
    AveragedMeasures measures;
};

/// Same, over a binary state matrix: columns regrouped temporally, H from the
/// regrouped rows, at each scale.
std::vector<ScaleAveraged> multiscale_profile(const StateMatrix& binary,
                                              const std::vector<std::uint32_t>& bases);

} // namespace cxm

#endif

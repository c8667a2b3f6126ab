#ifndef CXM_ECOLOGY_HPP
#define CXM_ECOLOGY_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cxm/measures.hpp"

namespace cxm {

// Measurement pipeline for multivariate ecological time series: ingest a
// table, discretize to 10 classes, report E/S/C/H per variable and per
// component, compare components through A, and run the species-occupancy
// simulation.

enum class Component { PC, LN, Bio };

std::string to_string(Component component);
Component component_from_string(const std::string& name);

struct EcoVariable {
    std::string name;
    std::string unit;  // carried as metadata only
    std::optional<Component> component;
    std::vector<double> values;
    double min = 0.0;
    double max = 0.0;
};

struct Dataset {
    std::vector<EcoVariable> variables;

    std::size_t length() const {
        return variables.empty() ? 0 : variables.front().values.size();
    }
    const EcoVariable& find(const std::string& name) const;
    void tag(const std::string& name, Component component);
    std::vector<std::string> names_of(Component component) const;
};

/// Parse a CSV table: header row of unique variable names, numeric body.
Dataset ingest_table(std::istream& in);

/// How each variable is mapped onto classes: its own observed range, or one
/// caller-supplied range shared by every variable (for cross-lake comparison).
struct Normalization {
    enum class Kind { PerVariable, Global };
    Kind kind = Kind::PerVariable;
    double min = 0.0;
    double max = 0.0;

    static Normalization per_variable() { return {}; }
    static Normalization global(double min, double max) {
        return {Kind::Global, min, max};
    }
};

struct VariableReport {
    std::string name;
    bool degenerate = false;  // constant under the chosen normalization
    MeasureSet measures;
    VariableHomeostasis hmv{};
    SymbolSeries symbols;
};

struct ComponentReport {
    std::vector<VariableReport> variables;
    double mean_e = 0.0, sd_e = 0.0;
    double mean_s = 1.0, sd_s = 0.0;
    double mean_c = 0.0, sd_c = 0.0;
    std::vector<double> daily_h;  // similarity of consecutive discretized days
    double mean_h = 1.0;
};

ComponentReport component_report(const Dataset& ds,
                                 const std::vector<std::string>& names,
                                 std::uint32_t beta = 10,
                                 const Normalization& norm = {});
ComponentReport component_report(const Dataset& ds, Component component,
                                 std::uint32_t beta = 10,
                                 const Normalization& norm = {});

struct AutopoiesisReport {
    Autopoiesis a;
    double mean_c_system = 0.0;
    double mean_c_environment = 0.0;
    CategoryColor color = CategoryColor::Yellow;  // blue A>1, red A<1
};

AutopoiesisReport component_autopoiesis(const Dataset& ds,
                                        const std::vector<std::string>& system_vars,
                                        const std::vector<std::string>& environment_vars,
                                        std::uint32_t beta = 10);

struct OccupancyConfig {
    std::size_t sites = 10;
    std::size_t species = 10;
    std::size_t iterations = 1000;
    std::size_t visits = 1;
    double psi_min = 0.1, psi_max = 0.9;  // occurrence probability range
    double p_min = 0.1, p_max = 0.9;      // detection probability range
    // Detection count drawn over sampling visits (default) or, literally,
    // over the number of sites.
    enum class SizeParam { Visits, Sites } size_param = SizeParam::Visits;

    void validate() const;
};

struct OccupancyResult {
    std::vector<std::vector<std::size_t>> counts;  // [iteration][site] species seen
    std::vector<MeasureSet> site_measures;         // per site, beta=10 classes
};

OccupancyResult occupancy_sim(const OccupancyConfig& config, std::uint64_t seed);

/// Closed-form emergence estimate for one component from (S, A, H).
/// Requires S, H in (0,1] and A >= 0; formula singularities raise
/// domain_error naming the offending sub-expression.
double analytic_emergence(Component component, double s, double a, double h);

/// Small labeled synthetic datasets (seasonal square wave + noise vs a
/// low-variance sinusoid) used to exercise the pipeline; no field data ships
/// with this project.
enum class SyntheticKind { ArcticLike, TropicLike };

Dataset synthetic_lake(SyntheticKind kind, std::size_t days,
                       std::size_t vars_per_component, std::uint64_t seed);

} // namespace cxm

#endif

#include "cxm/ecology.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numbers>
#include <set>

#include "cxm/csv.hpp"
#include "cxm/parallel.hpp"
#include "cxm/rng.hpp"

namespace cxm {

std::string to_string(Component component) {
    switch (component) {
        case Component::PC: return "PC";
        case Component::LN: return "LN";
        case Component::Bio: return "Bio";
    }
    return "?";
}

Component component_from_string(const std::string& name) {
    if (name == "PC" || name == "pc") return Component::PC;
    if (name == "LN" || name == "ln") return Component::LN;
    if (name == "Bio" || name == "bio") return Component::Bio;
    throw parameter_error("unknown component: " + name);
}

const EcoVariable& Dataset::find(const std::string& name) const {
    for (const auto& v : variables)
        if (v.name == name) return v;
    throw parameter_error("unknown variable: " + name);
}

void Dataset::tag(const std::string& name, Component component) {
    for (auto& v : variables)
        if (v.name == name) {
            v.component = component;
            return;
        }
    throw parameter_error("unknown variable: " + name);
}

std::vector<std::string> Dataset::names_of(Component component) const {
    std::vector<std::string> out;
    for (const auto& v : variables)
        if (v.component == component) out.push_back(v.name);
    return out;
}

Dataset ingest_table(std::istream& in) {
    const auto rows = read_csv(in);
    if (rows.empty()) throw parse_error("empty table", 0, 0);
    const auto& header = rows.front();
    std::set<std::string> seen;
    Dataset ds;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (header[c].empty()) throw parse_error("empty variable name", 1, c + 1);
        if (!seen.insert(header[c]).second)
            throw parse_error("duplicate variable name: " + header[c], 1, c + 1);
        EcoVariable v;
        v.name = header[c];
        ds.variables.push_back(std::move(v));
    }
    if (rows.size() < 2) throw parse_error("table has no data rows", 1, 0);
    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].size() != header.size())
            throw parse_error("ragged row: expected " +
                                  std::to_string(header.size()) + " cells, got " +
                                  std::to_string(rows[r].size()),
                              r + 1, rows[r].size());
        for (std::size_t c = 0; c < header.size(); ++c)
            ds.variables[c].values.push_back(
                parse_number(rows[r][c], r + 1, c + 1));
    }
    for (auto& v : ds.variables) {
        auto [lo, hi] = std::minmax_element(v.values.begin(), v.values.end());
        v.min = *lo;
        v.max = *hi;
    }
    return ds;
}

namespace {

VariableReport measure_variable(const EcoVariable& var, std::uint32_t beta,
                                const Normalization& norm) {
    VariableReport rep;
    rep.name = var.name;
    double lo, hi;
    if (norm.kind == Normalization::Kind::Global) {
        if (!(norm.max > norm.min))
            throw parameter_error("global normalization needs max > min");
        lo = norm.min;
        hi = norm.max;
        rep.degenerate = var.min == var.max;
    } else {
        lo = var.min;
        hi = var.max;
        rep.degenerate = lo == hi;
    }
    if (lo == hi) {
        // Constant variable: one class, fully regular by convention.
        rep.symbols = SymbolSeries(std::vector<std::uint32_t>(var.values.size(), 0),
                                   beta);
        rep.measures = MeasureSet(0.0);
    } else {
        rep.symbols = normalize_to_classes(var.values, beta, lo, hi);
        rep.measures = MeasureSet(shannon_information(estimate_probs(rep.symbols)));
    }
    rep.measures.category = classify(rep.measures.E());
    rep.hmv = variable_homeostasis(rep.symbols);
    return rep;
}

struct MeanSd {
    double mean = 0.0;
    double sd = 0.0;
};

template <typename Get>
MeanSd mean_sd(const std::vector<VariableReport>& reps, Get get) {
    MeanSd out;
    const double n = static_cast<double>(reps.size());
    for (const auto& r : reps) out.mean += get(r);
    out.mean /= n;
    for (const auto& r : reps) {
        const double d = get(r) - out.mean;
        out.sd += d * d;
    }
    out.sd = std::sqrt(out.sd / n);
    return out;
}

} // namespace

ComponentReport component_report(const Dataset& ds,
                                 const std::vector<std::string>& names,
                                 std::uint32_t beta, const Normalization& norm) {
    if (names.empty()) throw empty_input_error("component has no variables");
    ComponentReport rep;
    for (const auto& name : names)
        rep.variables.push_back(measure_variable(ds.find(name), beta, norm));

    const auto e = mean_sd(rep.variables, [](const auto& r) { return r.measures.E(); });
    const auto s = mean_sd(rep.variables, [](const auto& r) { return r.measures.S(); });
    const auto c = mean_sd(rep.variables, [](const auto& r) { return r.measures.C(); });
    rep.mean_e = e.mean;
    rep.sd_e = e.sd;
    rep.mean_s = s.mean;
    rep.sd_s = s.sd;
    rep.mean_c = c.mean;
    rep.sd_c = c.sd;

    const std::size_t days = ds.length();
    StateMatrix m(days, names.size(), beta);
    for (std::size_t c2 = 0; c2 < rep.variables.size(); ++c2)
        for (std::size_t r = 0; r < days; ++r)
            m.set(r, c2, rep.variables[c2].symbols.symbols[r]);
    if (days >= 2) {
        rep.daily_h = homeostasis_series(m);
        rep.mean_h = homeostasis(m);
    }
    return rep;
}

ComponentReport component_report(const Dataset& ds, Component component,
                                 std::uint32_t beta, const Normalization& norm) {
    return component_report(ds, ds.names_of(component), beta, norm);
}

AutopoiesisReport component_autopoiesis(const Dataset& ds,
                                        const std::vector<std::string>& system_vars,
                                        const std::vector<std::string>& environment_vars,
                                        std::uint32_t beta) {
    if (system_vars.empty() || environment_vars.empty())
        throw empty_input_error("autopoiesis needs both variable groups");
    auto mean_c = [&](const std::vector<std::string>& names) {
        double sum = 0.0;
        for (const auto& name : names)
            sum += measure_variable(ds.find(name), beta, {}).measures.C();
        return sum / static_cast<double>(names.size());
    };
    AutopoiesisReport rep;
    rep.mean_c_system = mean_c(system_vars);
    rep.mean_c_environment = mean_c(environment_vars);
    rep.a = autopoiesis(rep.mean_c_system, rep.mean_c_environment);
    if (rep.a.kind == Autopoiesis::Kind::Infinite ||
        (rep.a.defined() && rep.a.value > 1.0))
        rep.color = CategoryColor::Blue;
    else if (rep.a.defined() && rep.a.value < 1.0)
        rep.color = CategoryColor::Red;
    return rep;
}

void OccupancyConfig::validate() const {
    if (sites < 1 || species < 1 || iterations < 1 || visits < 1)
        throw parameter_error("occupancy config counts must be positive");
    auto probe = [](double lo, double hi) {
        return lo >= 0.0 && hi <= 1.0 && lo <= hi;
    };
    if (!probe(psi_min, psi_max) || !probe(p_min, p_max))
        throw parameter_error("psi and p ranges must lie inside [0,1]");
}

OccupancyResult occupancy_sim(const OccupancyConfig& config, std::uint64_t seed) {
    config.validate();
    OccupancyResult out;
    out.counts.assign(config.iterations,
                      std::vector<std::size_t>(config.sites, 0));
    const std::size_t trials = config.size_param == OccupancyConfig::SizeParam::Visits
                                   ? config.visits
                                   : config.sites;
    for (std::size_t it = 0; it < config.iterations; ++it) {
        Rng rng = derived_rng(seed, it);
        const double psi = rng.uniform(config.psi_min, config.psi_max);
        const double p = rng.uniform(config.p_min, config.p_max);
        for (std::size_t site = 0; site < config.sites; ++site) {
            std::size_t detected_species = 0;
            for (std::size_t sp = 0; sp < config.species; ++sp) {
                // Thresholds are drawn unconditionally so runs sharing a seed
                // are coupled: raising psi or p can only add detections.
                const bool occurs = rng.uniform() < psi;
                bool detected = false;
                for (std::size_t v = 0; v < trials; ++v) {
                    const bool hit = rng.uniform() < p;
                    detected = detected || (occurs && hit);
                }
                detected_species += detected ? 1 : 0;
            }
            out.counts[it][site] = detected_species;
        }
    }

    for (std::size_t site = 0; site < config.sites; ++site) {
        std::vector<double> values;
        values.reserve(config.iterations);
        for (std::size_t it = 0; it < config.iterations; ++it)
            values.push_back(static_cast<double>(out.counts[it][site]));
        auto [lo, hi] = std::minmax_element(values.begin(), values.end());
        MeasureSet ms(0.0);
        if (*lo != *hi) {
            SymbolSeries classes = normalize_to_classes(values, 10, *lo, *hi);
            ms = MeasureSet(shannon_information(estimate_probs(classes)));
        }
        ms.category = classify(ms.E());
        out.site_measures.push_back(ms);
    }
    return out;
}

double analytic_emergence(Component component, double s, double a, double h) {
    if (!(s > 0.0 && s <= 1.0)) throw parameter_error("S must be in (0,1]");
    if (!(h > 0.0 && h <= 1.0)) throw parameter_error("H must be in (0,1]");
    if (!(a >= 0.0)) throw parameter_error("A must be nonnegative");

    switch (component) {
        case Component::Bio: {
            const double radicand = 1.0 - (h * h * a * (h - s)) / s - (a * a * a * a) * s * h -
                                    std::sqrt(s * (s + h));
            if (radicand < 0.0)
                throw domain_error("negative radicand",
                                   "1 - H^2*A*(H-S)/S - A^4*S*H - sqrt(S*(S+H))");
            return std::sqrt(radicand);
        }
        case Component::LN: {
            if (s == 1.0) throw domain_error("division by zero", "1 - S");
            const double numerator = (s * h + a / s) - (s * (a + s) - 1.0);
            const double radicand = numerator / (1.0 - s);
            if (radicand < 0.0)
                throw domain_error("negative radicand",
                                   "((S*H + A/S) - (S*(A+S) - 1)) / (1 - S)");
            return std::sqrt(radicand);
        }
        case Component::PC: {
            if (a == 0.0) throw domain_error("division by zero", "sqrt(A/H)");
            const double q = a / h;
            const double radicand =
                (a - h - s - q) - s * s * std::sqrt(q + a + 2.0 * h) / std::sqrt(q);
            if (radicand < 0.0)
                throw domain_error(
                    "negative radicand",
                    "(A - H - S - A/H) - S^2*sqrt(A/H + A + 2H)/sqrt(A/H)");
            return std::sqrt(radicand);
        }
    }
    throw parameter_error("unknown component");
}

Dataset synthetic_lake(SyntheticKind kind, std::size_t days,
                       std::size_t vars_per_component, std::uint64_t seed) {
    if (days < 2) throw parameter_error("need at least two days");
    if (vars_per_component < 1) throw parameter_error("need at least one variable");
    const Component comps[] = {Component::PC, Component::LN, Component::Bio};
    const char* prefixes[] = {"pc", "ln", "bio"};

    Dataset ds;
    for (std::size_t ci = 0; ci < 3; ++ci) {
        for (std::size_t j = 0; j < vars_per_component; ++j) {
            Rng rng = derived_rng(seed, ci * 1000 + j);
            EcoVariable var;
            var.name = prefixes[ci] + std::to_string(j + 1);
            var.unit = "synthetic";
            var.component = comps[ci];
            const double base = 10.0 + 5.0 * static_cast<double>(j);
            const double amp = 4.0 + static_cast<double>(j);
            const double phase = rng.uniform(0.0, 365.0);
            var.values.reserve(days);
            for (std::size_t t = 0; t < days; ++t) {
                const double year =
                    std::fmod(static_cast<double>(t) + phase, 365.0);
                double v;
                if (kind == SyntheticKind::ArcticLike) {
                    // hard seasonal switch plus strong noise
                    const double wave = year < 182.5 ? 1.0 : -1.0;
                    v = base + amp * wave + rng.uniform(-0.6, 0.6) * amp;
                } else {
                    // gentle annual cycle, weak noise
                    const double wave =
                        std::sin(2.0 * std::numbers::pi * year / 365.0);
                    v = base + 0.1 * amp * wave + rng.uniform(-0.05, 0.05) * amp;
                }
                var.values.push_back(v);
            }
            auto [lo, hi] = std::minmax_element(var.values.begin(), var.values.end());
            var.min = *lo;
            var.max = *hi;
            ds.variables.push_back(std::move(var));
        }
    }
    return ds;
}

} // namespace cxm

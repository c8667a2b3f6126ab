#include "cxm/homeostat.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cxm {

double tolerance(double x, const ViabilityProfile& profile, bool normalized) {
    profile.validate();
    const double z = (x - profile.mu) / profile.sigma;
    const double shape = std::exp(-0.5 * z * z);
    if (normalized) return shape;
    return shape / (profile.sigma * std::sqrt(2.0 * std::numbers::pi));
}

double resilience(double x, double mu, double return_time) {
    if (return_time <= 0.0) throw parameter_error("return time must be positive");
    return std::abs(x - mu) / return_time;
}

std::size_t persistence(const std::vector<double>& trajectory, double zone_lo,
                        double zone_hi, PersistenceMode mode) {
    if (trajectory.empty()) throw empty_input_error("persistence of an empty trajectory");
    std::size_t best = 0, run = 0, total = 0;
    for (double x : trajectory) {
        if (x >= zone_lo && x <= zone_hi) {
            ++run;
            ++total;
            best = std::max(best, run);
        } else {
            run = 0;
        }
    }
    return mode == PersistenceMode::LongestResidence ? best : total;
}

std::optional<double> max_resistance(const ViabilityProfile& profile) {
    if (profile.x_max < profile.x_min)
        throw parameter_error("x_max must be >= x_min");
    if (profile.mu == 0.0) return std::nullopt;
    return std::abs(profile.range()) / std::abs(profile.mu);
}

double vulnerability(double range) {
    if (range < 0.0) throw parameter_error("viability range cannot be negative");
    return 1.0 / (1.0 + range);
}

namespace {

double minmax(double v, double lo, double hi) {
    if (hi <= lo) return 0.5;  // constant indicator carries no ordering
    return (v - lo) / (hi - lo);
}

} // namespace

std::vector<double> aggregate_capacity(const std::vector<CapacityIndicators>& batch,
                                       const CapacityWeights& weights) {
    if (batch.empty())
        throw insufficient_data_error("aggregate_capacity needs a nonempty batch");
    auto span = [&](auto member) {
        double lo = batch.front().*member, hi = lo;
        for (const auto& b : batch) {
            lo = std::min(lo, b.*member);
            hi = std::max(hi, b.*member);
        }
        return std::pair{lo, hi};
    };
    auto [tlo, thi] = span(&CapacityIndicators::tolerance);
    auto [rlo, rhi] = span(&CapacityIndicators::resilience);
    auto [plo, phi] = span(&CapacityIndicators::persistence);
    auto [elo, ehi] = span(&CapacityIndicators::resistance);
    auto [vlo, vhi] = span(&CapacityIndicators::vulnerability);

    const double wsum = weights.tolerance + weights.resilience + weights.persistence +
                        weights.resistance + weights.vulnerability;
    if (wsum <= 0.0) throw parameter_error("weights must sum to a positive value");

    std::vector<double> out;
    out.reserve(batch.size());
    for (const auto& b : batch) {
        double score =
            weights.tolerance * minmax(b.tolerance, tlo, thi) +
            weights.resilience * minmax(b.resilience, rlo, rhi) +
            weights.persistence * minmax(b.persistence, plo, phi) +
            weights.resistance * minmax(b.resistance, elo, ehi) +
            weights.vulnerability * (1.0 - minmax(b.vulnerability, vlo, vhi));
        out.push_back(score / wsum);
    }
    return out;
}

namespace {

RepairTrend trend_of(double rp) {
    if (rp > 0.0) return RepairTrend::Growth;
    if (rp < 0.0) return RepairTrend::Degradation;
    return RepairTrend::Stable;
}

} // namespace

Repairability repairability(const RepairRates& rates) {
    if (rates.gamma < 0.0 || rates.lambda < 0.0 || rates.gamma_edge < 0.0 ||
        rates.lambda_edge < 0.0)
        throw parameter_error("repair rates cannot be negative");
    if (rates.order != 1.0)
        throw parameter_error("closed-form repairability requires degradation order 1");
    Repairability out;
    out.rp = rates.gamma - rates.lambda;
    out.rp_edge = rates.gamma_edge - rates.lambda_edge;
    out.r = 0.5 * (out.rp + out.rp_edge);
    out.node_trend = trend_of(out.rp);
    out.edge_trend = trend_of(out.rp_edge);
    return out;
}

double repair_euler_step(double n, const RepairRates& rates, double dt) {
    if (rates.gamma < 0.0 || rates.lambda < 0.0)
        throw parameter_error("repair rates cannot be negative");
    if (dt <= 0.0) throw parameter_error("time step must be positive");
    return n + dt * (rates.gamma * n - rates.lambda * std::pow(n, rates.order));
}

std::optional<CompensationAction> choose_compensation(
    const ViabilityProfile& violated, const std::vector<CompensationAction>& actions) {
    violated.validate();
    const CompensationAction* best = nullptr;
    for (const auto& a : actions) {
        if (!best) {
            best = &a;
            continue;
        }
        auto key = [](const CompensationAction& x) {
            return std::tuple(!x.restores_to_viability, x.side_effect, x.id);
        };
        if (key(a) < key(*best)) best = &a;
    }
    if (!best || !best->restores_to_viability) {
        // Nothing restores viability: report no compensation rather than a
        // harmful action.
        return std::nullopt;
    }
    return *best;
}

} // namespace cxm

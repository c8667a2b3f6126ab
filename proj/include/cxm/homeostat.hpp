#ifndef CXM_HOMEOSTAT_HPP
#define CXM_HOMEOSTAT_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cxm/errors.hpp"

namespace cxm {

/// Viability profile of one environmental factor.
struct ViabilityProfile {
    double mu;
    double sigma;
    double x_min;
    double x_max;

    double range() const { return x_max - x_min; }

    /// ZFO = [mu - sigma, mu + sigma] should sit inside [x_min, x_max].
    bool zfo_inside_viability() const {
        return mu - sigma >= x_min && mu + sigma <= x_max;
    }

    void validate() const {
        if (sigma <= 0.0) throw parameter_error("sigma must be positive");
        if (x_max < x_min) throw parameter_error("x_max must be >= x_min");
    }
};

/// Gaussian tolerance response. Unnormalized is the pdf (unit integral);
/// normalized divides by the peak so T(mu) = 1.
double tolerance(double x, const ViabilityProfile& profile, bool normalized = false);

/// Rs = |x - mu| / t: return rate towards the viability midpoint.
double resilience(double x, double mu, double return_time);

enum class PersistenceMode { LongestResidence, TotalResidence };

/// Residence time of a trajectory inside [zone_lo, zone_hi], in samples.
std::size_t persistence(const std::vector<double>& trajectory, double zone_lo,
                        double zone_hi,
                        PersistenceMode mode = PersistenceMode::LongestResidence);

/// Re = |RX| / |mu|. Undefined (nullopt) when mu = 0.
std::optional<double> max_resistance(const ViabilityProfile& profile);

/// Vu = 1 / (1 + RX).
double vulnerability(double range);

struct CapacityIndicators {
    double tolerance;
    double resilience;
    double persistence;
    double resistance;
    double vulnerability;
};

struct CapacityWeights {
    double tolerance = 1.0;
    double resilience = 1.0;
    double persistence = 1.0;
    double resistance = 1.0;
    double vulnerability = 1.0;
};

/// Aggregate homeostatic capacity over a batch: each indicator min-max
/// normalized across the batch, vulnerability inverted, then a weighted mean.
std::vector<double> aggregate_capacity(const std::vector<CapacityIndicators>& batch,
                                       const CapacityWeights& weights = {});

struct RepairRates {
    double gamma;        // node synthesis
    double lambda;       // node degradation
    double gamma_edge;
    double lambda_edge;
    double order = 1.0;  // degradation order d
};

enum class RepairTrend { Degradation, Stable, Growth };

struct Repairability {
    double rp;       // gamma - lambda
    double rp_edge;  // gamma' - lambda'
    double r;        // (rp + rp') / 2
    RepairTrend node_trend;
    RepairTrend edge_trend;
};

/// Closed-form first-order repairability; requires d = 1.
Repairability repairability(const RepairRates& rates);

/// One explicit Euler step of dN/dt = gamma*N - lambda*N^d for general d.
double repair_euler_step(double n, const RepairRates& rates, double dt);

/// Candidate compensation action for a violated profile.
struct CompensationAction {
    std::string id;
    bool restores_to_viability;
    double side_effect;  // aggregate disturbance on the other profiles
};

using CompensationChooser =
    std::function<std::optional<CompensationAction>(const ViabilityProfile&,
                                                    const std::vector<CompensationAction>&)>;

/// Default chooser: lexicographic best by (restores, lower side effect, id).
std::optional<CompensationAction> choose_compensation(
    const ViabilityProfile& violated, const std::vector<CompensationAction>& actions);

} // namespace cxm

#endif

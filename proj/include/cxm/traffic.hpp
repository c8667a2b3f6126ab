#ifndef CXM_TRAFFIC_HPP
#define CXM_TRAFFIC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cxm/errors.hpp"
#include "cxm/measures.hpp"
#include "cxm/rng.hpp"

namespace cxm {

// City-grid traffic model: every street is an elementary CA ring running rule
// 184, streets cross at shared intersection cells, and the cells around a red
// light switch to rules 252 (hold) / 136 (clear the box).

enum class StreetDir : std::size_t { Horizontal = 0, Vertical = 1 };

enum class LightPhase { HorizontalGreen, VerticalGreen, BothRed };

std::string to_string(LightPhase phase);

/// How a vehicle leaving the end of a street re-enters the grid.
enum class BoundaryMode {
    NonOrientable,  // exiting street k re-enters street count-1-k
    Cyclic,         // each street closes onto itself
};

struct GreenWaveParams {
    std::size_t period = 0;       // 0 -> 2 * block_len
    std::size_t offset_step = 0;  // 0 -> block_len (one block of travel time)
};

struct SelfOrgParams {
    std::size_t d = 0;   // demand-count distance; 0 -> block_len / 2
    std::size_t n = 0;   // counter threshold; 0 -> 2 * d
    std::size_t u = 22;  // minimum green time
    std::size_t m = 4;   // "few vehicles" cutoff for keeping the platoon intact
    std::size_t r = 4;   // short distance for the platoon rule
    std::size_t e = 5;   // blocked-exit lookahead past the light
};

struct ControllerConfig {
    enum class Kind { GreenWave, SelfOrg, FixedGreen };

    Kind kind = Kind::SelfOrg;
    GreenWaveParams green_wave;
    SelfOrgParams self_org;
};

struct TrafficConfig {
    std::size_t n_h = 10;
    std::size_t n_v = 10;
    std::size_t block_len = 40;  // cells between consecutive intersections
    double density = 0.2;
    BoundaryMode boundary = BoundaryMode::NonOrientable;
    ControllerConfig controller;

    void validate() const;  // throws parameter_error
};

/// Controller parameters with the block_len-derived defaults filled in.
GreenWaveParams green_wave_resolved(const TrafficConfig& config);
SelfOrgParams self_org_resolved(const TrafficConfig& config);

class TrafficGrid {
  public:
    TrafficGrid(const TrafficConfig& config, std::uint64_t seed);

    const TrafficConfig& config() const { return config_; }
    std::uint64_t seed() const { return seed_; }
    std::size_t tick() const { return tick_; }

    std::size_t street_count(StreetDir dir) const;
    std::size_t street_length(StreetDir dir) const;
    std::size_t cell_count() const { return cell_count_; }
    std::size_t vehicle_count() const { return vehicles_; }
    double density() const;  // achieved vehicles / cells

    std::uint8_t cell(StreetDir dir, std::size_t street, std::size_t index) const;
    LightPhase phase(std::size_t h, std::size_t v) const;

    /// Place or remove a vehicle (intersection cells stay mirrored); used to
    /// build exact scenarios.
    void set_cell(StreetDir dir, std::size_t street, std::size_t index,
                  bool occupied);

    /// Cell index of the crossing with the given perpendicular street.
    std::size_t intersection_pos(std::size_t cross) const;

    /// One synchronous update (cells, then lights). Returns the number of
    /// vehicles that moved. Throws if conservation is ever violated.
    std::size_t step();

  private:
    struct Light {
        LightPhase phase = LightPhase::HorizontalGreen;
        StreetDir last_green = StreetDir::Horizontal;
        StreetDir box_dir = StreetDir::Horizontal;  // direction of the car on the box
        std::size_t green_time = 0;
        std::size_t counter[2] = {0, 0};
    };

    std::size_t paired_street(StreetDir dir, std::size_t street) const;
    std::uint8_t left_of(StreetDir dir, std::size_t street, std::size_t index) const;
    std::uint8_t right_of(StreetDir dir, std::size_t street, std::size_t index) const;
    std::size_t count_segment(StreetDir dir, std::size_t street, std::size_t lo,
                              std::size_t hi) const;
    std::size_t count_upstream(StreetDir dir, std::size_t street, std::size_t pos,
                               std::size_t dist) const;
    bool exit_blocked(StreetDir dir, std::size_t street, std::size_t pos) const;
    void set_green(Light& light, StreetDir dir);
    LightPhase green_wave_phase(std::size_t h, std::size_t v, std::size_t tick) const;
    void update_lights();

    TrafficConfig config_;
    std::uint64_t seed_ = 0;
    std::size_t half_ = 0;
    std::size_t tick_ = 0;
    std::size_t cell_count_ = 0;
    std::size_t vehicles_ = 0;
    GreenWaveParams gw_;
    SelfOrgParams so_;
    std::vector<std::vector<std::uint8_t>> streets_[2];
    std::vector<std::vector<std::uint8_t>> scratch_[2];
    std::vector<Light> lights_;  // row-major h * n_v + v
};

struct TrafficStats {
    double v = 0.0;  // mean moved fraction, 1 by convention when empty
    double j = 0.0;  // v * rho
    std::vector<std::size_t> light_intervals;
    std::vector<std::size_t> intersection_intervals;
    std::vector<std::size_t> street_intervals;
    std::string phase_label;
};

/// Run warmup + horizon ticks, collecting velocity and the three interval
/// series (light switches at intersection (0,0), crossings of its shared
/// cell, and passages at one randomly chosen street cell).
TrafficStats simulate(TrafficGrid& grid, std::size_t warmup, std::size_t horizon);

/// E/S/C of an interval series after discretization to beta classes.
/// Degenerate (constant) series measure E = 0; fewer than two intervals is
/// reported as "no measure".
std::optional<MeasureSet> interval_measures(const std::vector<std::size_t>& intervals,
                                            std::uint32_t beta = 10);

struct SweepRow {
    double rho = 0.0;  // achieved density
    double v = 0.0;
    double j = 0.0;
    std::optional<MeasureSet> lights;
    std::optional<MeasureSet> intersections;
    std::optional<MeasureSet> streets;
};

std::vector<SweepRow> density_sweep(const TrafficConfig& base,
                                    const std::vector<double>& densities,
                                    std::size_t warmup, std::size_t horizon,
                                    std::uint64_t seed, unsigned jobs = 0);

} // namespace cxm

#endif

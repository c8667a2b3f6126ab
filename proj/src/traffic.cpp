#include "cxm/traffic.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "cxm/parallel.hpp"

namespace cxm {

namespace {

constexpr auto kHorizontal = StreetDir::Horizontal;
constexpr auto kVertical = StreetDir::Vertical;

StreetDir other(StreetDir dir) {
    return dir == kHorizontal ? kVertical : kHorizontal;
}

LightPhase green_phase_of(StreetDir dir) {
    return dir == kHorizontal ? LightPhase::HorizontalGreen
                              : LightPhase::VerticalGreen;
}

} // namespace

std::string to_string(LightPhase phase) {
    switch (phase) {
        case LightPhase::HorizontalGreen: return "horizontal-green";
        case LightPhase::VerticalGreen: return "vertical-green";
        case LightPhase::BothRed: return "both-red";
    }
    return "?";
}

GreenWaveParams green_wave_resolved(const TrafficConfig& config) {
    GreenWaveParams gw = config.controller.green_wave;
    if (gw.period == 0) gw.period = 2 * config.block_len;
    if (gw.offset_step == 0) gw.offset_step = config.block_len;
    return gw;
}

SelfOrgParams self_org_resolved(const TrafficConfig& config) {
    SelfOrgParams so = config.controller.self_org;
    if (so.d == 0) so.d = config.block_len / 2;
    if (so.n == 0) so.n = 2 * so.d;
    return so;
}

void TrafficConfig::validate() const {
    if (n_h < 1 || n_v < 1)
        throw parameter_error("need at least one street per direction");
    if (block_len < 6 || block_len % 2 != 0)
        throw parameter_error("block_len must be even and at least 6");
    if (!(density >= 0.0 && density <= 1.0))
        throw parameter_error("density must be in [0,1]");
    const std::size_t half = block_len / 2;
    if (controller.kind == ControllerConfig::Kind::GreenWave) {
        GreenWaveParams gw = green_wave_resolved(*this);
        if (gw.period < 2 || gw.period % 2 != 0)
            throw parameter_error("green-wave period must be positive and even");
    }
    if (controller.kind == ControllerConfig::Kind::SelfOrg) {
        SelfOrgParams so = self_org_resolved(*this);
        if (so.d < 1 || so.d >= block_len)
            throw parameter_error("self-org distance d must be in [1, block_len)");
        if (so.r < 1 || so.r > so.d)
            throw parameter_error("self-org short distance r must be in [1, d]");
        if (so.e < 1 || so.e + 1 >= half)
            throw parameter_error("self-org lookahead e must be in [1, block_len/2 - 1)");
        if (so.n < 1) throw parameter_error("self-org threshold n must be positive");
        if (so.u < 1) throw parameter_error("self-org minimum green u must be positive");
    }
}

TrafficGrid::TrafficGrid(const TrafficConfig& config, std::uint64_t seed)
    : config_(config), seed_(seed) {
    config_.validate();
    half_ = config_.block_len / 2;
    gw_ = green_wave_resolved(config_);
    so_ = self_org_resolved(config_);

    const std::size_t lh = config_.n_v * config_.block_len;
    const std::size_t lv = config_.n_h * config_.block_len;
    streets_[0].assign(config_.n_h, std::vector<std::uint8_t>(lh, 0));
    streets_[1].assign(config_.n_v, std::vector<std::uint8_t>(lv, 0));
    scratch_[0] = streets_[0];
    scratch_[1] = streets_[1];
    // Intersection cells exist once; the vertical arrays hold mirrored copies.
    cell_count_ = config_.n_h * lh + config_.n_v * lv - config_.n_h * config_.n_v;

    lights_.resize(config_.n_h * config_.n_v);
    for (std::size_t h = 0; h < config_.n_h; ++h)
        for (std::size_t v = 0; v < config_.n_v; ++v) {
            Light& li = lights_[h * config_.n_v + v];
            if (config_.controller.kind == ControllerConfig::Kind::GreenWave) {
                li.phase = green_wave_phase(h, v, 0);
            } else if (config_.controller.kind == ControllerConfig::Kind::FixedGreen) {
                li.phase = LightPhase::HorizontalGreen;
            } else {
                li.phase = (h + v) % 2 == 0 ? LightPhase::HorizontalGreen
                                            : LightPhase::VerticalGreen;
            }
            li.last_green = li.phase == LightPhase::VerticalGreen ? kVertical
                                                                  : kHorizontal;
        }

    // Place vehicles uniformly on non-intersection cells, spilling onto
    // intersection cells only when the density demands it.
    struct CellId { std::size_t dir, street, index; };
    std::vector<CellId> open, boxes;
    for (std::size_t h = 0; h < config_.n_h; ++h)
        for (std::size_t i = 0; i < lh; ++i)
            (i % config_.block_len == half_ ? boxes : open).push_back({0, h, i});
    for (std::size_t v = 0; v < config_.n_v; ++v)
        for (std::size_t i = 0; i < lv; ++i)
            if (i % config_.block_len != half_) open.push_back({1, v, i});

    vehicles_ = static_cast<std::size_t>(
        std::llround(config_.density * static_cast<double>(cell_count_)));
    if (vehicles_ > cell_count_)
        throw parameter_error("more vehicles than cells");

    Rng rng(mix_seed(seed, 0x72af), mix_seed(seed, 0x7eaf));
    auto place = [&](std::vector<CellId>& pool, std::size_t count) {
        for (std::size_t t = 0; t < count; ++t) {
            const std::size_t pick =
                t + rng.bounded(static_cast<std::uint32_t>(pool.size() - t));
            std::swap(pool[t], pool[pick]);
            const CellId& c = pool[t];
            streets_[c.dir][c.street][c.index] = 1;
            if (c.index % config_.block_len == half_) {
                // mirror the shared cell into the crossing street's copy
                const std::size_t cross = c.index / config_.block_len;
                streets_[1 - c.dir][cross][intersection_pos(c.street)] = 1;
            }
        }
    };
    const std::size_t on_open = std::min(vehicles_, open.size());
    place(open, on_open);
    place(boxes, vehicles_ - on_open);
}

std::size_t TrafficGrid::street_count(StreetDir dir) const {
    return dir == kHorizontal ? config_.n_h : config_.n_v;
}

std::size_t TrafficGrid::street_length(StreetDir dir) const {
    return streets_[static_cast<std::size_t>(dir)].front().size();
}

double TrafficGrid::density() const {
    return static_cast<double>(vehicles_) / static_cast<double>(cell_count_);
}

std::uint8_t TrafficGrid::cell(StreetDir dir, std::size_t street,
                               std::size_t index) const {
    const auto& group = streets_[static_cast<std::size_t>(dir)];
    if (street >= group.size() || index >= group[street].size())
        throw range_error("cell index out of range");
    return group[street][index];
}

void TrafficGrid::set_cell(StreetDir dir, std::size_t street, std::size_t index,
                           bool occupied) {
    auto& group = streets_[static_cast<std::size_t>(dir)];
    if (street >= group.size() || index >= group[street].size())
        throw range_error("cell index out of range");
    group[street][index] = occupied ? 1 : 0;
    if (index % config_.block_len == half_) {
        const std::size_t cross = index / config_.block_len;
        streets_[1 - static_cast<std::size_t>(dir)][cross]
                [intersection_pos(street)] = occupied ? 1 : 0;
    }
    std::size_t total = 0;
    for (const auto& cells : streets_[0])
        for (auto c : cells) total += c;
    for (std::size_t v = 0; v < streets_[1].size(); ++v)
        for (std::size_t i = 0; i < streets_[1][v].size(); ++i)
            if (i % config_.block_len != half_) total += streets_[1][v][i];
    vehicles_ = total;
}

LightPhase TrafficGrid::phase(std::size_t h, std::size_t v) const {
    if (h >= config_.n_h || v >= config_.n_v)
        throw range_error("unknown intersection");
    return lights_[h * config_.n_v + v].phase;
}

std::size_t TrafficGrid::intersection_pos(std::size_t cross) const {
    return cross * config_.block_len + half_;
}

std::size_t TrafficGrid::paired_street(StreetDir dir, std::size_t street) const {
    if (config_.boundary == BoundaryMode::Cyclic) return street;
    return street_count(dir) - 1 - street;
}

std::uint8_t TrafficGrid::left_of(StreetDir dir, std::size_t street,
                                  std::size_t index) const {
    const auto& group = streets_[static_cast<std::size_t>(dir)];
    if (index > 0) return group[street][index - 1];
    return group[paired_street(dir, street)].back();
}

std::uint8_t TrafficGrid::right_of(StreetDir dir, std::size_t street,
                                   std::size_t index) const {
    const auto& group = streets_[static_cast<std::size_t>(dir)];
    if (index + 1 < group[street].size()) return group[street][index + 1];
    return group[paired_street(dir, street)].front();
}

std::size_t TrafficGrid::count_segment(StreetDir dir, std::size_t street,
                                       std::size_t lo, std::size_t hi) const {
    const auto& cells = streets_[static_cast<std::size_t>(dir)][street];
    std::size_t n = 0;
    for (std::size_t i = lo; i <= hi; ++i) n += cells[i];
    return n;
}

std::size_t TrafficGrid::count_upstream(StreetDir dir, std::size_t street,
                                        std::size_t pos, std::size_t dist) const {
    // Cars in the `dist` cells before `pos`, following the boundary pairing
    // onto the feeding street when the zone extends past index 0.
    const auto& cells = streets_[static_cast<std::size_t>(dir)][street];
    const auto& feeder =
        streets_[static_cast<std::size_t>(dir)][paired_street(dir, street)];
    std::size_t n = 0;
    for (std::size_t i = 1; i <= dist; ++i) {
        if (pos >= i)
            n += cells[pos - i];
        else
            n += feeder[feeder.size() - (i - pos)];
    }
    return n;
}

bool TrafficGrid::exit_blocked(StreetDir dir, std::size_t street,
                               std::size_t pos) const {
    // A stopped vehicle (one that cannot advance) within e cells past the
    // light means anything sent across would pile up on the crossing.
    const auto& cells = streets_[static_cast<std::size_t>(dir)][street];
    for (std::size_t i = 1; i <= so_.e; ++i)
        if (cells[pos + i] && cells[pos + i + 1]) return true;
    return false;
}

std::size_t TrafficGrid::step() {
    // Pass 1: rule 184 everywhere (a vehicle advances iff the cell ahead is
    // free): new = c ? r : l.
    for (std::size_t dir = 0; dir < 2; ++dir) {
        const auto d = static_cast<StreetDir>(dir);
        for (std::size_t s = 0; s < streets_[dir].size(); ++s) {
            const auto& cells = streets_[dir][s];
            auto& next = scratch_[dir][s];
            const std::size_t len = cells.size();
            for (std::size_t i = 0; i < len; ++i) {
                const std::uint8_t c = cells[i];
                next[i] = c ? right_of(d, s, i) : left_of(d, s, i);
            }
        }
    }

    // Pass 2: intersection behavior. The cell feeding a red light holds its
    // vehicle (rule 252). The shared crossing cell remembers the direction of
    // the car occupying it: the car advances along its own street when its
    // downstream cell is free -- even after the light has changed -- and
    // blocks the cross street until then. An empty box admits the next car
    // from the green street only (rule 136 on the red side: no refill).
    for (std::size_t h = 0; h < config_.n_h; ++h) {
        for (std::size_t v = 0; v < config_.n_v; ++v) {
            Light& li = lights_[h * config_.n_v + v];
            const std::size_t ph = intersection_pos(v);
            const std::size_t pv = intersection_pos(h);
            const auto& hs = streets_[0][h];
            const auto& vs = streets_[1][v];
            auto& hn = scratch_[0][h];
            auto& vn = scratch_[1][v];
            if (li.phase != LightPhase::HorizontalGreen)
                hn[ph - 1] = hs[ph - 2] | hs[ph - 1];
            if (li.phase != LightPhase::VerticalGreen)
                vn[pv - 1] = vs[pv - 2] | vs[pv - 1];

            std::uint8_t box, in_h = 0, in_v = 0;
            if (hs[ph]) {
                const bool horiz = li.box_dir == kHorizontal;
                const std::uint8_t down = horiz ? hs[ph + 1] : vs[pv + 1];
                box = down;  // stays while its own exit is blocked
                if (!down) (horiz ? in_h : in_v) = 1;
            } else if (li.phase == LightPhase::HorizontalGreen) {
                box = hs[ph - 1];
                if (box) li.box_dir = kHorizontal;
            } else if (li.phase == LightPhase::VerticalGreen) {
                box = vs[pv - 1];
                if (box) li.box_dir = kVertical;
            } else {
                box = 0;
            }
            hn[ph + 1] = hs[ph + 1] ? hs[ph + 2] : in_h;
            vn[pv + 1] = vs[pv + 1] ? vs[pv + 2] : in_v;
            hn[ph] = box;
            vn[pv] = box;
        }
    }

    // Count movement and re-check conservation over unique cells (vertical
    // copies of the crossing cells are skipped).
    std::size_t moved = 0, occupied = 0;
    for (std::size_t h = 0; h < streets_[0].size(); ++h) {
        const auto& old_cells = streets_[0][h];
        const auto& new_cells = scratch_[0][h];
        for (std::size_t i = 0; i < old_cells.size(); ++i) {
            moved += static_cast<std::size_t>(!old_cells[i] && new_cells[i]);
            occupied += new_cells[i];
        }
    }
    for (std::size_t v = 0; v < streets_[1].size(); ++v) {
        const auto& old_cells = streets_[1][v];
        const auto& new_cells = scratch_[1][v];
        for (std::size_t i = 0; i < old_cells.size(); ++i) {
            if (i % config_.block_len == half_) continue;
            moved += static_cast<std::size_t>(!old_cells[i] && new_cells[i]);
            occupied += new_cells[i];
        }
    }
    if (occupied != vehicles_)
        throw error("vehicle conservation violated: " + std::to_string(occupied) +
                    " != " + std::to_string(vehicles_));

    streets_[0].swap(scratch_[0]);
    streets_[1].swap(scratch_[1]);
    ++tick_;
    update_lights();
    return moved;
}

void TrafficGrid::set_green(Light& light, StreetDir dir) {
    light.phase = green_phase_of(dir);
    light.last_green = dir;
    light.counter[static_cast<std::size_t>(dir)] = 0;
    light.green_time = 0;
}

LightPhase TrafficGrid::green_wave_phase(std::size_t h, std::size_t v,
                                         std::size_t tick) const {
    // Consecutive lights along a horizontal street are offset by one block of
    // travel time: the wave favors the horizontal flow, cross traffic catches
    // whatever phase it meets.
    const std::size_t offset = v * gw_.offset_step;
    const std::size_t t = (tick + offset) % gw_.period;
    return t < gw_.period / 2 ? LightPhase::HorizontalGreen
                              : LightPhase::VerticalGreen;
}

void TrafficGrid::update_lights() {
    const auto kind = config_.controller.kind;
    if (kind == ControllerConfig::Kind::FixedGreen) return;
    if (kind == ControllerConfig::Kind::GreenWave) {
        for (std::size_t h = 0; h < config_.n_h; ++h)
            for (std::size_t v = 0; v < config_.n_v; ++v)
                lights_[h * config_.n_v + v].phase = green_wave_phase(h, v, tick_);
        return;
    }

    for (std::size_t h = 0; h < config_.n_h; ++h) {
        for (std::size_t v = 0; v < config_.n_v; ++v) {
            Light& li = lights_[h * config_.n_v + v];
            const std::size_t ph = intersection_pos(v);
            const std::size_t pv = intersection_pos(h);
            auto within = [&](StreetDir dir, std::size_t dist) {
                return dir == kHorizontal
                           ? count_upstream(kHorizontal, h, ph, dist)
                           : count_upstream(kVertical, v, pv, dist);
            };
            auto blocked = [&](StreetDir dir) {
                return dir == kHorizontal ? exit_blocked(kHorizontal, h, ph)
                                          : exit_blocked(kVertical, v, pv);
            };

            if (li.phase == LightPhase::BothRed) {
                li.counter[0] += within(kHorizontal, so_.d);
                li.counter[1] += within(kVertical, so_.d);
                const bool bh = blocked(kHorizontal);
                const bool bv = blocked(kVertical);
                if (bh && bv) continue;  // still gridlocked (rule vi)
                if (!bh && !bv)
                    set_green(li, li.last_green);
                else
                    set_green(li, bh ? kVertical : kHorizontal);
                continue;
            }

            const StreetDir g =
                li.phase == LightPhase::HorizontalGreen ? kHorizontal : kVertical;
            const StreetDir q = other(g);
            li.counter[static_cast<std::size_t>(q)] += within(q, so_.d);  // rule i
            ++li.green_time;

            const bool bg = blocked(g);
            const bool bq = blocked(q);
            if (bg && bq) {  // rule vi: both exits jammed
                li.phase = LightPhase::BothRed;
                li.green_time = 0;
                continue;
            }
            if (bg) {  // rule v: green street cannot clear the box
                set_green(li, q);
                continue;
            }
            bool want = li.counter[static_cast<std::size_t>(q)] > so_.n;  // rule i
            if (li.green_time < so_.u) want = false;                      // rule ii
            const std::size_t close = within(g, so_.r);
            if (close > 0 && close <= so_.m) want = false;                // rule iii
            if (within(g, so_.d) == 0 && within(q, so_.d) > 0) want = true;  // rule iv
            if (want) set_green(li, q);
        }
    }
}

TrafficStats simulate(TrafficGrid& grid, std::size_t warmup, std::size_t horizon) {
    if (horizon < 1) throw parameter_error("horizon must be at least 1");
    for (std::size_t t = 0; t < warmup; ++t) grid.step();

    // Probe one randomly chosen non-intersection street cell per simulation.
    const std::size_t block = grid.config().block_len;
    const std::size_t half = block / 2;
    Rng probe_rng(mix_seed(grid.seed(), 0xACED), mix_seed(grid.seed(), 0xFACE));
    const auto probe_dir = static_cast<StreetDir>(probe_rng.bounded(2));
    const std::size_t probe_street = probe_rng.bounded(
        static_cast<std::uint32_t>(grid.street_count(probe_dir)));
    const auto probe_len =
        static_cast<std::uint32_t>(grid.street_length(probe_dir));
    std::size_t probe_index = probe_rng.bounded(probe_len);
    while (probe_index % block == half) probe_index = probe_rng.bounded(probe_len);

    TrafficStats stats;
    const std::size_t box0 = grid.intersection_pos(0);
    LightPhase prev_phase = grid.phase(0, 0);
    std::uint8_t prev_box = grid.cell(StreetDir::Horizontal, 0, box0);
    std::uint8_t prev_probe = grid.cell(probe_dir, probe_street, probe_index);
    std::optional<std::size_t> last_switch, last_cross, last_pass;

    const double vehicles = static_cast<double>(grid.vehicle_count());
    double vsum = 0.0;
    for (std::size_t t = 0; t < horizon; ++t) {
        const std::size_t moved = grid.step();
        vsum += vehicles > 0 ? static_cast<double>(moved) / vehicles : 1.0;

        const std::size_t now = grid.tick();
        const LightPhase cur_phase = grid.phase(0, 0);
        if (cur_phase != prev_phase) {
            if (last_switch) stats.light_intervals.push_back(now - *last_switch);
            last_switch = now;
            prev_phase = cur_phase;
        }
        const std::uint8_t cur_box = grid.cell(StreetDir::Horizontal, 0, box0);
        if (cur_box && !prev_box) {
            if (last_cross) stats.intersection_intervals.push_back(now - *last_cross);
            last_cross = now;
        }
        prev_box = cur_box;
        const std::uint8_t cur_probe = grid.cell(probe_dir, probe_street, probe_index);
        if (cur_probe && !prev_probe) {
            if (last_pass) stats.street_intervals.push_back(now - *last_pass);
            last_pass = now;
        }
        prev_probe = cur_probe;
    }

    stats.v = vsum / static_cast<double>(horizon);
    stats.j = stats.v * grid.density();

    const double rho = grid.density();
    if (grid.vehicle_count() == 0 || stats.v >= 0.999)
        stats.phase_label = "free-flow";
    else if (stats.v >= 0.95)
        stats.phase_label = "quasi-free";
    else if (stats.v == 0.0)
        stats.phase_label = "jam";
    else if (stats.v <= 0.05)
        stats.phase_label = "quasi-jam";
    else if (stats.j >= 0.24)
        stats.phase_label = "full-capacity";
    else if (rho < 0.4)
        stats.phase_label = "underutilized";
    else
        stats.phase_label = "overutilized";
    return stats;
}

std::optional<MeasureSet> interval_measures(const std::vector<std::size_t>& intervals,
                                            std::uint32_t beta) {
    if (intervals.size() < 2) return std::nullopt;
    std::vector<double> values(intervals.begin(), intervals.end());
    auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    if (*lo == *hi) {
        MeasureSet constant(0.0);  // one class only: fully regular
        constant.category = classify(constant.E());
        return constant;
    }
    SymbolSeries classes = normalize_to_classes(values, beta, *lo, *hi);
    MeasureSet ms(shannon_information(estimate_probs(classes)));
    ms.category = classify(ms.E());
    return ms;
}

std::vector<SweepRow> density_sweep(const TrafficConfig& base,
                                    const std::vector<double>& densities,
                                    std::size_t warmup, std::size_t horizon,
                                    std::uint64_t seed, unsigned jobs) {
    std::vector<SweepRow> rows(densities.size());
    parallel_for(densities.size(), jobs, [&](std::size_t i) {
        TrafficConfig cfg = base;
        cfg.density = densities[i];
        TrafficGrid grid(cfg, mix_seed(seed, i));
        TrafficStats stats = simulate(grid, warmup, horizon);
        rows[i] = {grid.density(),
                   stats.v,
                   stats.j,
                   interval_measures(stats.light_intervals),
                   interval_measures(stats.intersection_intervals),
                   interval_measures(stats.street_intervals)};
    });
    return rows;
}

} // namespace cxm

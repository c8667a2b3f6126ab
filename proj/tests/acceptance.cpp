// End-to-end acceptance harness: one pass/fail line per criterion, nonzero
// exit if any fails. Tolerances are pinned here on purpose; do not loosen.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "cxm/discretize.hpp"
#include "cxm/eca.hpp"
#include "cxm/ecology.hpp"
#include "cxm/homeostat.hpp"
#include "cxm/measures.hpp"
#include "cxm/rbn.hpp"
#include "cxm/rng.hpp"
#include "cxm/series.hpp"
#include "cxm/traffic.hpp"

using namespace cxm;

namespace {

int g_failures = 0;

struct Criterion {
    const char* name;
    std::function<bool(std::string&)> run;
};

void run_criterion(int index, const Criterion& crit) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = crit.run(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::printf("[%s] %d. %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", index,
                crit.name, secs, detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

bool fail(std::string& detail, const std::string& msg) {
    if (detail.empty()) detail = msg;
    return false;
}

// ---- 1. measure identities on random series ------------------------------

bool check_identities(std::string& detail) {
    Rng rng(101, 1);
    const std::uint32_t betas[] = {2, 4, 8, 10};
    for (int trial = 0; trial < 10000; ++trial) {
        const std::uint32_t beta = betas[trial % 4];
        const std::size_t len = 5 + rng.bounded(96);
        std::vector<std::uint32_t> syms(len);
        for (auto& s : syms) s = rng.bounded(beta);
        const SymbolSeries series(std::move(syms), beta);
        const double e = emergence(series);
        const double s = self_organization(series);
        const double c = complexity(series);
        if (!(e >= 0.0 && e <= 1.0 && s >= 0.0 && s <= 1.0 && c >= 0.0 &&
              c <= 1.0))
            return fail(detail, "measure out of [0,1]");
        if (s != 1.0 - e) return fail(detail, "S != 1-E");
        if (std::abs(c - 4.0 * e * (1.0 - e)) > 1e-12)
            return fail(detail, "C != 4E(1-E)");
    }
    return true;
}

// ---- 2. worked reference values ------------------------------------------

bool check_reference_values(std::string& detail) {
    std::string rep2, rep4;
    for (int i = 0; i < 8; ++i) {
        rep2 += "0001";
        rep4 += "0133";
    }
    const double i2 = emergence(series_from_digits(rep2, 2));
    if (std::abs(i2 - 0.811) > 1e-3) return fail(detail, "I(0001...) off");
    const double i4 = emergence(series_from_digits(rep4, 4));
    if (std::abs(i4 - 0.75) > 1e-9) return fail(detail, "I(0133...) off");

    StateMatrix m(8, 1, 2);
    for (std::size_t r = 0; r < 8; ++r) m.set(r, 0, r % 2);
    if (homeostasis(m) != 0.0) return fail(detail, "period-2 H(base 2) != 0");
    if (homeostasis(regroup_matrix(m, 2)) != 1.0)
        return fail(detail, "period-2 H(base 4) != 1");
    return true;
}

// ---- 3. RBN connectivity trends ------------------------------------------

bool check_rbn_trends(std::string& detail) {
    std::vector<double> med_e, med_s, med_c, med_h;
    for (std::size_t k = 1; k <= 5; ++k) {
        const auto stats = measure_ensemble(50, k, 100, 500, 500, {1}, 7001, 0);
        med_e.push_back(stats[0].e.median);
        med_s.push_back(stats[0].s.median);
        med_c.push_back(stats[0].c.median);
        med_h.push_back(stats[0].h.median);
    }
    for (std::size_t i = 1; i < 5; ++i) {
        if (!(med_e[i] > med_e[i - 1]))
            return fail(detail, "median E not strictly increasing in K");
        if (!(med_s[i] < med_s[i - 1]))
            return fail(detail, "median S not strictly decreasing in K");
    }
    std::size_t argmax = 0;
    for (std::size_t i = 1; i < 5; ++i)
        if (med_c[i] > med_c[argmax]) argmax = i;
    const std::size_t k_star = argmax + 1;
    if (k_star != 2 && k_star != 3)
        return fail(detail, "argmax_K median C = " + std::to_string(k_star));
    if (!(med_h[0] >= 0.95)) return fail(detail, "median H at K=1 below 0.95");
    if (!(med_h[4] >= 0.4 && med_h[4] <= 0.6))
        return fail(detail, "median H at K=5 outside [0.4,0.6]");
    return true;
}

// ---- 4. coupled-network autonomy pattern ---------------------------------

bool check_coupled_autonomy(std::string& detail) {
    // reference sign(A-1) pattern, rows K_i = 1..5, cols K_e = 1..5
    const int expected[5][5] = {
        {-1, -1, -1, +1, +1},
        {+1, -1, +1, +1, +1},
        {+1, -1, -1, +1, +1},
        {+1, -1, -1, -1, +1},
        {+1, -1, -1, -1, -1},
    };
    const auto cells =
        coupled_autopoiesis(32, 96, {1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}, 20, 500,
                            500, 4242, 0);
    int matches = 0;
    std::map<std::pair<std::size_t, std::size_t>, double> a;
    for (const auto& cell : cells) {
        a[{cell.k_internal, cell.k_external}] = cell.a;
        const int sign = cell.a > 1.0 ? +1 : -1;
        if (sign == expected[cell.k_internal - 1][cell.k_external - 1])
            ++matches;
    }
    if (matches < 20)
        return fail(detail,
                    "sign pattern matches only " + std::to_string(matches) +
                        "/25 cells");
    if (!(a[{1, 5}] > 2.0)) return fail(detail, "A(Ki=1,Ke=5) <= 2");
    if (!(a[{5, 2}] < 0.7)) return fail(detail, "A(Ki=5,Ke=2) >= 0.7");
    detail = std::to_string(matches) + "/25 cells";
    return true;
}

// ---- 5. ECA class signatures ---------------------------------------------

bool check_eca_signatures(std::string& detail) {
    const std::vector<std::uint32_t> bases = {1, 2, 4, 8};  // 2,4,16,256
    for (std::uint32_t rule : {0u, 8u, 32u, 40u, 128u}) {
        const auto res = measure_rule(rule, 128, 1024, 1024, bases, 10, 501, 0);
        for (const auto& r : res) {
            if (r.measures.e != 0.0 || r.measures.s != 1.0 ||
                r.measures.c != 0.0 || r.measures.h.value_or(0.0) != 1.0)
                return fail(detail,
                            "rule " + std::to_string(rule) +
                                " not exactly frozen at b=" +
                                std::to_string(r.bits));
        }
    }
    const auto r30 = measure_rule(30, 128, 1024, 1024, {1}, 10, 502, 0);
    if (!(r30[0].measures.e > 0.9)) return fail(detail, "rule 30 E <= 0.9");
    if (!(r30[0].measures.c < 0.35)) return fail(detail, "rule 30 C >= 0.35");
    const auto r110 = measure_rule(110, 128, 1024, 1024, {4}, 10, 503, 0);
    if (!(r110[0].h_deviation > 0.05))
        return fail(detail, "rule 110 |H - 2^-4| <= 0.05 at b=4");
    return true;
}

// ---- 6. traffic ----------------------------------------------------------

bool check_traffic(std::string& detail) {
    // conservation over mixed scenarios, > 1e6 tick-cells; step() throws on
    // any violation
    std::size_t tick_cells = 0;
    for (auto kind : {ControllerConfig::Kind::GreenWave,
                      ControllerConfig::Kind::SelfOrg,
                      ControllerConfig::Kind::FixedGreen})
        for (double rho : {0.15, 0.5, 0.85}) {
            TrafficConfig cfg;
            cfg.n_h = 3;
            cfg.n_v = 2;
            cfg.block_len = 12;
            cfg.density = rho;
            cfg.controller.kind = kind;
            cfg.controller.self_org = {4, 8, 3, 2, 3, 2};
            cfg.boundary = rho < 0.5 ? BoundaryMode::NonOrientable
                                     : BoundaryMode::Cyclic;
            TrafficGrid grid(cfg, 97 + static_cast<int>(10 * rho));
            for (int t = 0; t < 400; ++t) grid.step();
            tick_cells += 400 * grid.cell_count();
        }
    {
        TrafficConfig cfg;  // defaults: 10x10, block 40
        TrafficGrid grid(cfg, 13);
        for (int t = 0; t < 120; ++t) grid.step();
        tick_cells += 120 * grid.cell_count();
    }
    if (tick_cells < 1000000)
        return fail(detail, "only " + std::to_string(tick_cells) + " tick-cells");

    // isolated-street rule-184 oracle on a fixed-green grid
    {
        TrafficConfig cfg;
        cfg.n_h = 2;
        cfg.n_v = 2;
        cfg.block_len = 12;
        cfg.density = 0.3;
        cfg.controller.kind = ControllerConfig::Kind::FixedGreen;
        TrafficGrid grid(cfg, 8);
        std::vector<std::uint8_t> ring;
        const std::size_t len = grid.street_length(StreetDir::Horizontal);
        for (std::size_t s = 0; s < 2; ++s)
            for (std::size_t i = 0; i < len; ++i)
                ring.push_back(grid.cell(StreetDir::Horizontal, s, i));
        Eca oracle(rule_table(184), ring);
        for (int t = 0; t < 300; ++t) {
            grid.step();
            oracle.step();
            std::size_t pos = 0;
            for (std::size_t s = 0; s < 2; ++s)
                for (std::size_t i = 0; i < len; ++i, ++pos)
                    if (grid.cell(StreetDir::Horizontal, s, i) !=
                        oracle.cells()[pos])
                        return fail(detail, "rule-184 oracle mismatch");
        }
    }

    // controller comparison on the default 10x10 grid
    const std::vector<double> densities = {0.1,  0.2, 0.3, 0.4, 0.5, 0.6,
                                           0.65, 0.7, 0.75, 0.8, 0.85, 0.9};
    TrafficConfig gw;
    gw.controller.kind = ControllerConfig::Kind::GreenWave;
    TrafficConfig so;
    so.controller.kind = ControllerConfig::Kind::SelfOrg;
    const auto gw_rows = density_sweep(gw, densities, 2000, 2000, 71, 0);
    const auto so_rows = density_sweep(so, densities, 2000, 2000, 71, 0);

    for (std::size_t i = 0; i < densities.size(); ++i) {
        if (std::abs(gw_rows[i].j - gw_rows[i].v * gw_rows[i].rho) > 1e-12 ||
            std::abs(so_rows[i].j - so_rows[i].v * so_rows[i].rho) > 1e-12)
            return fail(detail, "J != v*rho");
        if (densities[i] <= 0.6 && !(so_rows[i].v >= gw_rows[i].v))
            return fail(detail, "self-org v < green-wave v at rho=" +
                                    std::to_string(densities[i]));
    }
    double gw_zero = 2.0, so_zero = 2.0;
    for (std::size_t i = 0; i < densities.size(); ++i) {
        if (gw_rows[i].v == 0.0 && densities[i] < gw_zero)
            gw_zero = densities[i];
        if (so_rows[i].v == 0.0 && densities[i] < so_zero)
            so_zero = densities[i];
    }
    if (!(gw_zero < so_zero))
        return fail(detail, "green-wave does not gridlock first (gw=" +
                                std::to_string(gw_zero) + ", so=" +
                                std::to_string(so_zero) + ")");
    return true;
}

// ---- 7. homeostat monotonicity suite -------------------------------------

bool check_homeostat(std::string& detail) {
    double prev_vu = 2.0, prev_re = -1.0;
    for (double rx = 0.0; rx <= 12.0; rx += 0.25) {
        const double vu = vulnerability(rx);
        if (!(vu < prev_vu)) return fail(detail, "vulnerability not decreasing");
        prev_vu = vu;
        const auto re = max_resistance({3.0, 1.0, 0.0, rx});
        if (!re || !(*re > prev_re))
            return fail(detail, "max_resistance not increasing");
        prev_re = *re;
    }

    const ViabilityProfile prof{5.0, 1.5, 0.0, 10.0};
    for (double d = 0.1; d < 6.0; d += 0.1)
        if (std::abs(tolerance(5.0 + d, prof) - tolerance(5.0 - d, prof)) >
            1e-12)
            return fail(detail, "tolerance asymmetric");
    const int n = 400000;
    const double lo = 5.0 - 15.0, hi = 5.0 + 15.0, dx = (hi - lo) / n;
    double integral = 0.0;
    for (int i = 0; i <= n; ++i)
        integral += (i == 0 || i == n ? 0.5 : 1.0) * tolerance(lo + i * dx, prof) * dx;
    if (std::abs(integral - 1.0) > 1e-6)
        return fail(detail, "tolerance quadrature off unit");

    if (repairability({0.4, 0.1, 0.0, 0.0, 1.0}).node_trend !=
            RepairTrend::Growth ||
        repairability({0.1, 0.4, 0.0, 0.0, 1.0}).node_trend !=
            RepairTrend::Degradation ||
        repairability({0.2, 0.2, 0.0, 0.0, 1.0}).node_trend !=
            RepairTrend::Stable)
        return fail(detail, "repairability sign classification wrong");
    return true;
}

// ---- 8. ecology ----------------------------------------------------------

std::variant<long double, std::string> emergence_oracle(Component comp,
                                                        long double s,
                                                        long double a,
                                                        long double h) {
    switch (comp) {
        case Component::Bio: {
            const long double r = 1.0L - (h * h * a * (h - s)) / s -
                                  a * a * a * a * s * h - std::sqrt(s * (s + h));
            if (r < 0.0L) return std::string("negative radicand");
            return std::sqrt(r);
        }
        case Component::LN: {
            if (s == 1.0L) return std::string("division by zero");
            const long double r =
                ((s * h + a / s) - (s * (a + s) - 1.0L)) / (1.0L - s);
            if (r < 0.0L) return std::string("negative radicand");
            return std::sqrt(r);
        }
        case Component::PC: {
            if (a == 0.0L) return std::string("division by zero");
            const long double q = a / h;
            const long double r =
                (a - h - s - q) -
                s * s * std::sqrt(q + a + 2.0L * h) / std::sqrt(q);
            if (r < 0.0L) return std::string("negative radicand");
            return std::sqrt(r);
        }
    }
    return std::string("unreachable");
}

bool check_ecology(std::string& detail) {
    // discretization vs a brute-force class scan, boundaries included
    for (std::uint32_t beta = 2; beta <= 10; ++beta) {
        // integer grid against exactly-representable class edges 1,2,...,beta
        std::vector<double> xs;
        for (int k = -2; k <= static_cast<int>(beta) + 2; ++k)
            xs.push_back(static_cast<double>(k));
        const auto classes = normalize_to_classes(xs, beta, 0.0, beta);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            std::uint32_t want;
            if (xs[i] <= 0.0)
                want = 0;
            else if (xs[i] >= beta)
                want = beta - 1;
            else {
                want = 0;
                while (want + 1 < beta && !(xs[i] < want + 1)) ++want;
            }
            if (classes.symbols[i] != want)
                return fail(detail, "discretization boundary mismatch");
        }
        // random interior points away from edges
        Rng rng(55, beta);
        for (int t = 0; t < 500; ++t) {
            double x = rng.uniform(0.0, static_cast<double>(beta));
            if (std::abs(x - std::round(x)) < 1e-9) continue;
            const auto got = normalize_to_classes({x}, beta, 0.0, beta);
            std::uint32_t want = 0;
            while (want + 1 < beta && !(x < want + 1)) ++want;
            if (got.symbols[0] != want)
                return fail(detail, "discretization interior mismatch");
        }
    }

    // coupled stochastic monotonicity of the occupancy model
    OccupancyConfig base;
    base.sites = 5;
    base.species = 8;
    base.iterations = 100;
    base.visits = 3;
    base.psi_min = base.psi_max = 0.3;
    base.p_min = base.p_max = 0.4;
    auto hi_psi = base;
    hi_psi.psi_min = hi_psi.psi_max = 0.7;
    auto hi_p = base;
    hi_p.p_min = hi_p.p_max = 0.9;
    const auto r0 = occupancy_sim(base, 909);
    const auto r1 = occupancy_sim(hi_psi, 909);
    const auto r2 = occupancy_sim(hi_p, 909);
    for (std::size_t it = 0; it < base.iterations; ++it)
        for (std::size_t s = 0; s < base.sites; ++s)
            if (r0.counts[it][s] > r1.counts[it][s] ||
                r0.counts[it][s] > r2.counts[it][s])
                return fail(detail, "occupancy monotonicity violated");

    // closed forms vs the independent long-double oracle
    Rng rng(77, 3);
    for (Component comp : {Component::Bio, Component::LN, Component::PC}) {
        for (int t = 0; t < 1000; ++t) {
            const double s = rng.uniform(0.05, 0.95);
            const double a = rng.uniform(0.0, 2.0);
            const double h = rng.uniform(0.05, 1.0);
            const auto want = emergence_oracle(comp, s, a, h);
            if (std::holds_alternative<long double>(want)) {
                const double got = analytic_emergence(comp, s, a, h);
                if (std::abs(got - static_cast<double>(
                                       std::get<long double>(want))) > 1e-12)
                    return fail(detail, "analytic emergence value mismatch");
            } else {
                try {
                    analytic_emergence(comp, s, a, h);
                    return fail(detail, "missing domain error");
                } catch (const domain_error& e) {
                    if (std::string(e.what()).find(
                            std::get<std::string>(want)) != 0)
                        return fail(detail, "wrong domain error kind");
                }
            }
        }
    }
    return true;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"measure identities on 10^4 random series", check_identities},
        {"worked reference values", check_reference_values},
        {"RBN connectivity trends (100 nets, N=50)", check_rbn_trends},
        {"coupled-network autonomy sign pattern", check_coupled_autonomy},
        {"ECA class signatures", check_eca_signatures},
        {"traffic conservation, oracle and controller ordering", check_traffic},
        {"homeostat monotonicity suite", check_homeostat},
        {"ecology oracles and stochastic monotonicity", check_ecology},
    };
    for (std::size_t i = 0; i < criteria.size(); ++i)
        run_criterion(static_cast<int>(i) + 1, criteria[i]);
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}

#include "cxm/eca.hpp"

#include <cmath>

#include "cxm/parallel.hpp"

namespace cxm {

EcaRule rule_table(std::uint32_t number) {
    if (number > 255) throw parameter_error("ECA rule number must be in [0,255]");
    EcaRule rule;
    rule.number = number;
    for (std::uint32_t i = 0; i < 8; ++i)
        rule.table[i] = static_cast<std::uint8_t>((number >> i) & 1u);
    return rule;
}

Eca::Eca(EcaRule rule, std::vector<std::uint8_t> cells)
    : rule_(rule), cells_(std::move(cells)) {
    if (cells_.size() < 3) throw parameter_error("ECA width must be at least 3");
    for (auto c : cells_)
        if (c > 1) throw range_error("ECA cells must be binary");
    scratch_.resize(cells_.size());
}

Eca::Eca(std::uint32_t rule, std::size_t width, Rng& rng)
    : rule_(rule_table(rule)) {
    if (width < 3) throw parameter_error("ECA width must be at least 3");
    cells_.resize(width);
    for (auto& c : cells_) c = rng.coin() ? 1 : 0;
    scratch_.resize(width);
}

Eca Eca::single_seed(std::uint32_t rule, std::size_t width) {
    if (width < 3) throw parameter_error("ECA width must be at least 3");
    std::vector<std::uint8_t> cells(width, 0);
    cells[width / 2] = 1;
    return Eca(rule_table(rule), std::move(cells));
}

void Eca::step() {
    const std::size_t n = cells_.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::uint8_t l = cells_[(i + n - 1) % n];
        std::uint8_t c = cells_[i];
        std::uint8_t r = cells_[(i + 1) % n];
        scratch_[i] = rule_.table[(l << 2) | (c << 1) | r];
    }
    cells_.swap(scratch_);
}

StateMatrix Eca::evolve(std::size_t steps) {
    StateMatrix m(steps + 1, cells_.size(), 2);
    for (std::size_t r = 0; r <= steps; ++r) {
        for (std::size_t c = 0; c < cells_.size(); ++c) m.set(r, c, cells_[c]);
        if (r < steps) step();
    }
    return m;
}

StateMatrix Eca::run(std::size_t transient, std::size_t record) {
    for (std::size_t t = 0; t < transient; ++t) step();
    StateMatrix m(record, cells_.size(), 2);
    for (std::size_t r = 0; r < record; ++r) {
        for (std::size_t c = 0; c < cells_.size(); ++c) m.set(r, c, cells_[c]);
        step();
    }
    return m;
}

std::vector<EcaScaleResult> measure_rule(std::uint32_t rule, std::size_t width,
                                         std::size_t transient, std::size_t record,
                                         const std::vector<std::uint32_t>& bases,
                                         std::size_t replicates, std::uint64_t seed,
                                         unsigned jobs) {
    if (replicates < 1) throw parameter_error("replicates must be positive");
    if (record < 2) throw parameter_error("record must be at least 2");
    rule_table(rule);  // range check up front

    struct Sample { double e, s, c, h; };
    std::vector<std::vector<Sample>> samples(bases.size(),
                                             std::vector<Sample>(replicates));

    parallel_for(replicates, jobs, [&](std::size_t rep) {
        Rng rng = derived_rng(seed, rep);
        Eca ca(rule, width, rng);
        StateMatrix m = ca.run(transient, record);
        for (std::size_t bi = 0; bi < bases.size(); ++bi) {
            StateMatrix grouped = regroup_matrix(m, bases[bi]);
            AveragedMeasures am = measure_matrix(grouped);
            samples[bi][rep] = {am.e, am.s, am.c, am.h.value_or(1.0)};
        }
    });

    std::vector<EcaScaleResult> out;
    out.reserve(bases.size());
    for (std::size_t bi = 0; bi < bases.size(); ++bi) {
        AveragedMeasures mean;
        double se = 0, ss = 0, sc = 0, sh = 0;
        for (const auto& smp : samples[bi]) {
            se += smp.e;
            ss += smp.s;
            sc += smp.c;
            sh += smp.h;
        }
        const double n = static_cast<double>(replicates);
        mean.e = se / n;
        mean.s = ss / n;
        mean.c = sc / n;
        mean.h = sh / n;
        const double baseline = 1.0 / static_cast<double>(1u << bases[bi]);
        out.push_back({bases[bi], 1u << bases[bi], mean,
                       std::abs(*mean.h - baseline)});
    }
    return out;
}

} // namespace cxm

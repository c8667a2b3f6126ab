#include "cxm/rbn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cxm/parallel.hpp"

namespace cxm {

Rbn Rbn::generate(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (n < 1) throw parameter_error("node count must be at least 1");
    if (k > n) throw parameter_error("in-degree cannot exceed node count");
    if (k > 20) throw parameter_error("in-degree too large for truth tables");

    Rng rng(mix_seed(seed, 0), mix_seed(seed, 1));
    Rbn net;
    net.n_ = n;
    net.k_ = k;
    net.inputs_.resize(n * k);
    const std::size_t table_len = std::size_t{1} << k;
    net.tables_.resize(n * table_len);
    net.state_.resize(n);
    net.scratch_.resize(n);

    // Sampling without replacement per node; self-inputs permitted.
    std::vector<std::size_t> pool(n);
    for (std::size_t node = 0; node < n; ++node) {
        for (std::size_t i = 0; i < n; ++i) pool[i] = i;
        for (std::size_t j = 0; j < k; ++j) {
            std::size_t pick = j + rng.bounded(static_cast<std::uint32_t>(n - j));
            std::swap(pool[j], pool[pick]);
            net.inputs_[node * k + j] = pool[j];
        }
    }
    for (auto& bit : net.tables_) bit = rng.coin() ? 1 : 0;
    for (auto& bit : net.state_) bit = rng.coin() ? 1 : 0;
    return net;
}

void Rbn::set_state(std::vector<std::uint8_t> s) {
    if (s.size() != n_) throw dimension_error("state length must equal node count");
    state_ = std::move(s);
}

std::uint8_t Rbn::eval_node(std::size_t i, const std::vector<std::uint8_t>& s) const {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < k_; ++j)
        idx = (idx << 1) | s[inputs_[i * k_ + j]];
    return tables_[i * (std::size_t{1} << k_) + idx];
}

void Rbn::step() {
    for (std::size_t i = 0; i < n_; ++i) scratch_[i] = eval_node(i, state_);
    state_.swap(scratch_);
}

StateMatrix Rbn::run(std::size_t transient, std::size_t record) {
    for (std::size_t t = 0; t < transient; ++t) step();
    StateMatrix m(record, n_, 2);
    for (std::size_t r = 0; r < record; ++r) {
        for (std::size_t c = 0; c < n_; ++c) m.set(r, c, state_[c]);
        step();
    }
    return m;
}

Quartiles quartiles(std::vector<double> values) {
    if (values.empty()) throw empty_input_error("quartiles of an empty sample");
    std::sort(values.begin(), values.end());
    auto quantile = [&](double q) {
        // Linear interpolation between order statistics (type 7).
        double pos = q * static_cast<double>(values.size() - 1);
        std::size_t lo = static_cast<std::size_t>(pos);
        double frac = pos - static_cast<double>(lo);
        if (lo + 1 >= values.size()) return values.back();
        return values[lo] * (1.0 - frac) + values[lo + 1] * frac;
    };
    return {values.front(), quantile(0.25), quantile(0.5), quantile(0.75),
            values.back()};
}

std::vector<RbnEnsembleStats> measure_ensemble(std::size_t n, std::size_t k,
                                               std::size_t replicates,
                                               std::size_t transient,
                                               std::size_t record,
                                               const std::vector<std::uint32_t>& bases,
                                               std::uint64_t seed,
                                               unsigned jobs) {
    if (replicates < 1) throw parameter_error("replicates must be positive");
    if (record < 2) throw parameter_error("record must be at least 2");

    struct Sample { double e, s, c, h; };
    std::vector<std::vector<Sample>> samples(bases.size(),
                                             std::vector<Sample>(replicates));

    parallel_for(replicates, jobs, [&](std::size_t rep) {
        Rbn net = Rbn::generate(n, k, mix_seed(seed, rep));
        StateMatrix m = net.run(transient, record);
        for (std::size_t bi = 0; bi < bases.size(); ++bi) {
            StateMatrix grouped = regroup_matrix(m, bases[bi]);
            AveragedMeasures am = measure_matrix(grouped);
            samples[bi][rep] = {am.e, am.s, am.c, am.h.value_or(1.0)};
        }
    });

    std::vector<RbnEnsembleStats> out;
    out.reserve(bases.size());
    for (std::size_t bi = 0; bi < bases.size(); ++bi) {
        std::vector<double> e, s, c, h;
        for (const auto& smp : samples[bi]) {
            e.push_back(smp.e);
            s.push_back(smp.s);
            c.push_back(smp.c);
            h.push_back(smp.h);
        }
        out.push_back({k, bases[bi], quartiles(std::move(e)), quartiles(std::move(s)),
                       quartiles(std::move(c)), quartiles(std::move(h))});
    }
    return out;
}

namespace {

// Share of an internal node's inputs that tap the external images. The
// coupling has to be sparse: with heavier mixing, a frozen environment damps
// the internal dynamics so strongly that the relative-complexity landscape
// over (K_i, K_e) flattens out.
constexpr double kExternalInputShare = 0.08;

// Per-replicate mean node emergence of the internal nodes and of the
// external-image nodes of the coupled system.
struct CoupledSample {
    double e_internal = 0.0;
    double e_external = 0.0;
};

// One replicate. The coupled net has N_i internal nodes followed by N_e
// external-image nodes; internal nodes evolve by their own tables, images
// are overwritten from the freely running external net every step. Each
// internal input is an external image with probability kExternalInputShare
// and an internal node otherwise, sampled without replacement.
CoupledSample coupled_replicate(std::size_t n_i, std::size_t n_e,
                                std::size_t k_i, std::size_t k_e,
                                std::size_t transient, std::size_t record,
                                std::uint64_t seed) {
    const std::size_t n_c = n_i + n_e;
    Rbn external = Rbn::generate(n_e, k_e, mix_seed(seed, 11));
    Rng rng(mix_seed(seed, 13), mix_seed(seed, 17));

    std::vector<std::vector<std::size_t>> inputs(n_i);
    std::vector<std::vector<std::uint8_t>> tables(n_i);
    for (std::size_t i = 0; i < n_i; ++i) {
        while (inputs[i].size() < k_i) {
            std::size_t j = rng.bernoulli(kExternalInputShare)
                                ? n_i + rng.bounded(static_cast<std::uint32_t>(n_e))
                                : rng.bounded(static_cast<std::uint32_t>(n_i));
            if (std::find(inputs[i].begin(), inputs[i].end(), j) ==
                inputs[i].end())
                inputs[i].push_back(j);
        }
        tables[i].resize(std::size_t{1} << k_i);
        for (auto& bit : tables[i]) bit = rng.coin() ? 1 : 0;
    }

    std::vector<std::uint8_t> state(n_c, 0);
    for (std::size_t i = 0; i < n_i; ++i) state[i] = rng.coin() ? 1 : 0;
    std::copy(external.state().begin(), external.state().end(),
              state.begin() + static_cast<std::ptrdiff_t>(n_i));

    std::vector<std::uint8_t> next(n_c, 0);
    StateMatrix recorded(record, n_c, 2);
    std::size_t recorded_rows = 0;

    for (std::size_t t = 0; t < transient + record; ++t) {
        if (t >= transient) {
            for (std::size_t c = 0; c < n_c; ++c)
                recorded.set(recorded_rows, c, state[c]);
            ++recorded_rows;
        }
        external.step();
        for (std::size_t i = 0; i < n_i; ++i) {
            std::size_t idx = 0;
            for (auto j : inputs[i]) idx = (idx << 1) | state[j];
            next[i] = tables[i][idx];
        }
        std::copy(external.state().begin(), external.state().end(),
                  next.begin() + static_cast<std::ptrdiff_t>(n_i));
        state.swap(next);
    }

    CoupledSample out;
    for (std::size_t c = 0; c < n_c; ++c) {
        double e = emergence(recorded.column(c));
        if (c < n_i)
            out.e_internal += e;
        else
            out.e_external += e;
    }
    out.e_internal /= static_cast<double>(n_i);
    out.e_external /= static_cast<double>(n_e);
    return out;
}

} // namespace

std::vector<CoupledAutopoiesisCell> coupled_autopoiesis(
    std::size_t n_internal, std::size_t n_external,
    const std::vector<std::size_t>& k_internal_range,
    const std::vector<std::size_t>& k_external_range,
    std::size_t replicates, std::size_t transient, std::size_t record,
    std::uint64_t seed, unsigned jobs) {
    if (replicates < 1) throw parameter_error("replicates must be positive");
    if (record < 2) throw parameter_error("record must be at least 2");

    struct Task { std::size_t ki, ke; };
    std::vector<Task> tasks;
    for (auto ki : k_internal_range)
        for (auto ke : k_external_range) tasks.push_back({ki, ke});

    std::vector<CoupledSample> samples(tasks.size() * replicates);
    parallel_for(tasks.size() * replicates, jobs, [&](std::size_t idx) {
        std::size_t cell = idx / replicates;
        samples[idx] = coupled_replicate(n_internal, n_external, tasks[cell].ki,
                                         tasks[cell].ke, transient, record,
                                         mix_seed(seed, idx));
    });

    std::vector<CoupledAutopoiesisCell> out;
    out.reserve(tasks.size());
    for (std::size_t cell = 0; cell < tasks.size(); ++cell) {
        // Pool node emergence over the ensemble, then compare the two groups
        // at the network level: A = C(pooled internal E) / C(pooled image E).
        double ei = 0.0, ee = 0.0;
        for (std::size_t rep = 0; rep < replicates; ++rep) {
            ei += samples[cell * replicates + rep].e_internal;
            ee += samples[cell * replicates + rep].e_external;
        }
        ei /= static_cast<double>(replicates);
        ee /= static_cast<double>(replicates);
        const double c_int = 4.0 * ei * (1.0 - ei);
        const double c_ext = 4.0 * ee * (1.0 - ee);
        const double a = c_ext == 0.0 ? std::numeric_limits<double>::infinity()
                                      : c_int / c_ext;
        out.push_back({tasks[cell].ki, tasks[cell].ke, a});
    }
    return out;
}

} // namespace cxm

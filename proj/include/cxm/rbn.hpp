#ifndef CXM_RBN_HPP
#define CXM_RBN_HPP

#include <cstdint>
#include <vector>

#include "cxm/measures.hpp"
#include "cxm/rng.hpp"
#include "cxm/series.hpp"

namespace cxm {

/// Classical synchronous random Boolean network: fixed wiring and truth
/// tables drawn at construction, binary state evolved in lockstep.
class Rbn {
  public:
    /// Inputs drawn uniformly without replacement per node (self-input
    /// allowed), truth-table bits and the initial state fair-coin i.i.d.
    /// Fully determined by the seed.
    static Rbn generate(std::size_t n, std::size_t k, std::uint64_t seed);

    std::size_t node_count() const { return n_; }
    std::size_t in_degree() const { return k_; }
    const std::vector<std::uint8_t>& state() const { return state_; }
    void set_state(std::vector<std::uint8_t> s);

    /// Synchronous update: every node applies its table to the current state.
    void step();

    /// Advance `transient` unrecorded steps, then record `record` rows.
    StateMatrix run(std::size_t transient, std::size_t record);

    /// Next state of node `i` given an arbitrary state vector.
    std::uint8_t eval_node(std::size_t i, const std::vector<std::uint8_t>& s) const;

  private:
    Rbn() = default;
    std::size_t n_ = 0;
    std::size_t k_ = 0;
    std::vector<std::size_t> inputs_;       // n_ * k_
    std::vector<std::uint8_t> tables_;      // n_ * 2^k_
    std::vector<std::uint8_t> state_;
    std::vector<std::uint8_t> scratch_;
};

struct Quartiles {
    double min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
};

Quartiles quartiles(std::vector<double> values);

struct RbnEnsembleStats {
    std::size_t k;
    std::uint32_t bits;     // scale b, alphabet 2^b
    Quartiles e, s, c, h;
};

/// Per-replicate averaged node measures at each scale, summarized as
/// quartiles across replicates. Replicates run on independent derived
/// streams; results are deterministic given (parameters, seed) and jobs.
std::vector<RbnEnsembleStats> measure_ensemble(std::size_t n, std::size_t k,
                                               std::size_t replicates,
                                               std::size_t transient,
                                               std::size_t record,
                                               const std::vector<std::uint32_t>& bases,
                                               std::uint64_t seed,
                                               unsigned jobs = 0);

struct CoupledAutopoiesisCell {
    std::size_t k_internal;
    std::size_t k_external;
    double a;
};

/// Internal/external coupled networks: the external net evolves freely and is
/// copied onto its image nodes in the coupled net each step. Internal nodes
/// wire mostly among themselves, with a small fixed share of their inputs
/// tapping the images. Node emergence is pooled over the replicates per
/// group, and A is the ratio of the group complexities 4E(1-E); infinity
/// when the image group has zero complexity.
std::vector<CoupledAutopoiesisCell> coupled_autopoiesis(
    std::size_t n_internal, std::size_t n_external,
    const std::vector<std::size_t>& k_internal_range,
    const std::vector<std::size_t>& k_external_range,
    std::size_t replicates, std::size_t transient, std::size_t record,
    std::uint64_t seed, unsigned jobs = 0);

} // namespace cxm

#endif

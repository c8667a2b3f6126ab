#ifndef CXM_ECA_HPP
#define CXM_ECA_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "cxm/measures.hpp"
#include "cxm/rng.hpp"
#include "cxm/series.hpp"

namespace cxm {

/// Wolfram-numbered rule: table[i] is the output for neighborhood value i,
/// where (left, self, right) is read as a 3-bit number.
struct EcaRule {
    std::uint32_t number;
    std::array<std::uint8_t, 8> table;
};

EcaRule rule_table(std::uint32_t number);

/// Binary ring automaton.
class Eca {
  public:
    Eca(EcaRule rule, std::vector<std::uint8_t> cells);
    Eca(std::uint32_t rule, std::size_t width, Rng& rng);  // fair-coin init

    static Eca single_seed(std::uint32_t rule, std::size_t width);

    const std::vector<std::uint8_t>& cells() const { return cells_; }
    std::size_t width() const { return cells_.size(); }

    void step();

    /// Evolution history: steps+1 rows including the initial configuration.
    StateMatrix evolve(std::size_t steps);

    /// Run `transient` unrecorded steps, then record `record` rows.
    StateMatrix run(std::size_t transient, std::size_t record);

  private:
    EcaRule rule_;
    std::vector<std::uint8_t> cells_;
    std::vector<std::uint8_t> scratch_;
};

struct EcaScaleResult {
    std::uint32_t bits;
    std::uint32_t beta;
    AveragedMeasures measures;      // means across replicates
    double h_deviation;             // |H - 2^-b|, the ether marker
};

/// Replicated fair-coin-start measurement of one rule at several scales:
/// per-cell-column E/S/C averaged over columns, H over rows, averaged across
/// replicates on derived streams.
std::vector<EcaScaleResult> measure_rule(std::uint32_t rule, std::size_t width,
                                         std::size_t transient, std::size_t record,
                                         const std::vector<std::uint32_t>& bases,
                                         std::size_t replicates, std::uint64_t seed,
                                         unsigned jobs = 0);

} // namespace cxm

#endif

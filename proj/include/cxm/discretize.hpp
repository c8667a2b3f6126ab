#ifndef CXM_DISCRETIZE_HPP
#define CXM_DISCRETIZE_HPP

#include <vector>

#include "cxm/series.hpp"

namespace cxm {

/// A probability vector over an alphabet of beta symbols.
struct ProbDist {
    std::vector<double> probs;
    std::uint32_t beta = 2;

    void validate() const;
};

/// Floor-based mapping of reals onto beta classes between min and max.
/// x == max lands in class beta-1; values outside [min, max] clamp to the
/// boundary classes so per-file data can be scored against global ranges.
SymbolSeries normalize_to_classes(const std::vector<double>& values,
                                  std::uint32_t beta, double min, double max);

/// Regroup a binary series into non-overlapping b-bit words, MSB first.
/// A trailing remainder shorter than b is discarded.
SymbolSeries regroup_bits(const SymbolSeries& bits, std::uint32_t b);

/// Undo regroup_bits: expand each symbol back into b bits, MSB first.
SymbolSeries expand_bits(const SymbolSeries& grouped, std::uint32_t b);

/// Regroup each column's temporal stream independently; the matrix shrinks to
/// floor(rows / b) rows with alphabet 2^b.
StateMatrix regroup_matrix(const StateMatrix& m, std::uint32_t b);

/// Empirical symbol frequencies over the whole series; unseen symbols get 0.
ProbDist estimate_probs(const SymbolSeries& series);

} // namespace cxm

#endif

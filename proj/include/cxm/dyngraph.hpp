#ifndef CXM_DYNGRAPH_HPP
#define CXM_DYNGRAPH_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "cxm/errors.hpp"

namespace cxm {

/// Time-indexed neighborhoods: neighbors[t][i] is V(i_t).
class TemporalGraph {
  public:
    explicit TemporalGraph(std::vector<std::vector<std::set<std::size_t>>> snapshots);

    std::size_t snapshot_count() const { return snapshots_.size(); }
    std::size_t node_count() const {
        return snapshots_.empty() ? 0 : snapshots_.front().size();
    }
    const std::set<std::size_t>& neighbors(std::size_t t, std::size_t node) const;

  private:
    std::vector<std::vector<std::set<std::size_t>>> snapshots_;
};

/// Dynamic degree over snapshots [first, last): sum of Jaccard-style
/// neighborhood turnover |V_{t-1} \ V_t| / |V_{t-1} u V_t|, with empty-empty
/// terms contributing 0.
double temporal_degree(const TemporalGraph& g, std::size_t node, std::size_t horizon);
double temporal_degree_window(const TemporalGraph& g, std::size_t node,
                              std::size_t first, std::size_t last);

/// Dynamic clustering at snapshot `horizon` (1-based count of snapshots used):
/// fraction of current neighbors already seen at some strictly earlier,
/// strictly later-than-first snapshot. Undefined for an empty current
/// neighborhood.
std::optional<double> temporal_clustering(const TemporalGraph& g, std::size_t node,
                                          std::size_t horizon);

} // namespace cxm

#endif

#include "cxm/dyngraph.hpp"

#include <algorithm>
#include <iterator>

namespace cxm {

TemporalGraph::TemporalGraph(std::vector<std::vector<std::set<std::size_t>>> snapshots)
    : snapshots_(std::move(snapshots)) {
    if (snapshots_.empty()) throw empty_input_error("temporal graph needs snapshots");
    const std::size_t n = snapshots_.front().size();
    for (const auto& snap : snapshots_) {
        if (snap.size() != n)
            throw dimension_error("all snapshots must cover the same node set");
        for (const auto& nb : snap)
            for (auto j : nb)
                if (j >= n) throw range_error("neighbor index out of range");
    }
}

const std::set<std::size_t>& TemporalGraph::neighbors(std::size_t t,
                                                      std::size_t node) const {
    if (t >= snapshots_.size()) throw range_error("snapshot index out of range");
    if (node >= node_count()) throw range_error("unknown node");
    return snapshots_[t][node];
}

double temporal_degree_window(const TemporalGraph& g, std::size_t node,
                              std::size_t first, std::size_t last) {
    if (node >= g.node_count()) throw range_error("unknown node");
    if (last > g.snapshot_count() || first > last)
        throw range_error("bad snapshot window");
    double sum = 0.0;
    for (std::size_t t = first + 1; t < last; ++t) {
        const auto& prev = g.neighbors(t - 1, node);
        const auto& curr = g.neighbors(t, node);
        std::vector<std::size_t> lost, all;
        std::set_difference(prev.begin(), prev.end(), curr.begin(), curr.end(),
                            std::back_inserter(lost));
        std::set_union(prev.begin(), prev.end(), curr.begin(), curr.end(),
                       std::back_inserter(all));
        if (!all.empty())
            sum += static_cast<double>(lost.size()) / static_cast<double>(all.size());
    }
    return sum;
}

double temporal_degree(const TemporalGraph& g, std::size_t node, std::size_t horizon) {
    return temporal_degree_window(g, node, 0, horizon);
}

std::optional<double> temporal_clustering(const TemporalGraph& g, std::size_t node,
                                          std::size_t horizon) {
    if (node >= g.node_count()) throw range_error("unknown node");
    if (horizon < 1 || horizon > g.snapshot_count())
        throw range_error("bad snapshot horizon");
    const auto& current = g.neighbors(horizon - 1, node);
    if (current.empty()) return std::nullopt;
    std::set<std::size_t> history;
    for (std::size_t t = 1; t + 1 < horizon; ++t) {
        const auto& nb = g.neighbors(t, node);
        history.insert(nb.begin(), nb.end());
    }
    std::size_t hits = 0;
    for (auto j : current)
        if (history.count(j)) ++hits;
    return static_cast<double>(hits) / static_cast<double>(current.size());
}

} // namespace cxm

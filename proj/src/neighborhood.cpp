#include "gam/neighborhood.hpp"

#include <algorithm>

#include "gam/parallel.hpp"

namespace gam {

KHopExpander::KHopExpander(const DiscreteGraph& g)
    : graph_(&g), stamp_(static_cast<std::size_t>(g.num_nodes()), 0) {}

std::span<const NodeId> KHopExpander::expand(NodeId source, int hops) {
    ++epoch_;
    ball_.clear();
    stamp_[static_cast<std::size_t>(source)] = epoch_;

    // ball_ doubles as the BFS queue: [frontier_begin, frontier_end) is the
    // current ring, newly discovered nodes are appended behind it.
    std::size_t frontier_begin = 0;
    for (NodeId u : graph_->neighbors(source)) {
        stamp_[static_cast<std::size_t>(u)] = epoch_;
        ball_.push_back(u);
    }
    for (int d = 2; d <= hops; ++d) {
        const std::size_t frontier_end = ball_.size();
        if (frontier_begin == frontier_end) {
            break;
        }
        for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
            for (NodeId u : graph_->neighbors(ball_[i])) {
                auto& s = stamp_[static_cast<std::size_t>(u)];
                if (s != epoch_) {
                    s = epoch_;
                    ball_.push_back(u);
                }
            }
        }
        frontier_begin = frontier_end;
    }
    return ball_;
}

KHopNeighborhoods khop_neighborhoods(const DiscreteGraph& g, int hops) {
    if (hops < 1) {
        throw InputError("hop count must be >= 1");
    }
    const std::size_t n = static_cast<std::size_t>(g.num_nodes());
    KHopNeighborhoods out;
    out.hops = hops;
    out.offsets.assign(n + 1, 0);

    std::vector<std::vector<NodeId>> per_node(n);
    parallel_chunks(n, 256, [&](std::size_t begin, std::size_t end) {
        KHopExpander expander(g);
        for (std::size_t v = begin; v < end; ++v) {
            auto ball = expander.expand(static_cast<NodeId>(v), hops);
            per_node[v].assign(ball.begin(), ball.end());
            std::sort(per_node[v].begin(), per_node[v].end());
        }
    });

    for (std::size_t v = 0; v < n; ++v) {
        out.offsets[v + 1] = out.offsets[v] + per_node[v].size();
    }
    out.nodes.resize(out.offsets[n]);
    for (std::size_t v = 0; v < n; ++v) {
        std::copy(per_node[v].begin(), per_node[v].end(), out.nodes.begin() + static_cast<std::ptrdiff_t>(out.offsets[v]));
    }
    return out;
}

} // namespace gam

#pragma once

#include <span>
#include <vector>

#include "gam/graph.hpp"
#include "gam/types.hpp"

namespace gam {

// Reusable breadth-first workspace producing, for one source at a time, all
// nodes at shortest-path distance 1..k (cumulative, source excluded). The
// returned span is valid until the next expand() call; order is BFS order,
// not sorted. One expander per thread; expanders do not share state.
class KHopExpander {
public:
    explicit KHopExpander(const DiscreteGraph& g);

    std::span<const NodeId> expand(NodeId source, int hops);

private:
    const DiscreteGraph* graph_;
    std::vector<NodeId> ball_;      // collected nodes, frontier tail included
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 0;
};

// Materialized k-hop neighborhoods, CSR layout, sorted per source node.
// Fine for benchmark-scale graphs at small k; per-node streaming via
// KHopExpander is preferred inside metric kernels.
struct KHopNeighborhoods {
    int hops = 1;
    std::vector<std::size_t> offsets; // num_nodes + 1
    std::vector<NodeId> nodes;

    NodeId num_nodes() const { return static_cast<NodeId>(offsets.size()) - 1; }
    std::span<const NodeId> of(NodeId v) const {
        return {nodes.data() + offsets[static_cast<std::size_t>(v)],
                nodes.data() + offsets[static_cast<std::size_t>(v) + 1]};
    }
    std::size_t size(NodeId v) const {
        return offsets[static_cast<std::size_t>(v) + 1] - offsets[static_cast<std::size_t>(v)];
    }
};

// Exact { u != v : dist(v,u) <= hops } for every node. hops < 1 is an input
// error. hops == 1 reproduces the graph's own neighbor lists.
KHopNeighborhoods khop_neighborhoods(const DiscreteGraph& g, int hops);

} // namespace gam

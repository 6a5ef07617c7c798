#pragma once

#include <span>
#include <utility>
#include <vector>

#include "gam/types.hpp"

namespace gam {

struct WeightedEdge {
    NodeId u = 0;
    NodeId v = 0; // u < v in canonical edge lists
    double weight = 1.0;
};

// Undirected unweighted graph in CSR form. Always canonical: symmetrized,
// self-loop-free, duplicate-free, neighbor lists sorted ascending.
// Immutable after construction; safe for concurrent reads.
class DiscreteGraph {
public:
    DiscreteGraph() = default;

    NodeId num_nodes() const { return num_nodes_; }
    std::size_t num_undirected_edges() const { return adjacency_.size() / 2; }

    std::span<const NodeId> neighbors(NodeId v) const {
        return {adjacency_.data() + offsets_[static_cast<std::size_t>(v)],
                adjacency_.data() + offsets_[static_cast<std::size_t>(v) + 1]};
    }
    std::size_t degree(NodeId v) const {
        return offsets_[static_cast<std::size_t>(v) + 1] - offsets_[static_cast<std::size_t>(v)];
    }

    // Each undirected edge once, (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<NodeId, NodeId>> edge_list() const;

    friend DiscreteGraph build_discrete_graph(NodeId num_nodes,
                                              std::span<const std::pair<NodeId, NodeId>> edge_pairs);

private:
    NodeId num_nodes_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<NodeId> adjacency_;
};

// Undirected nonnegatively weighted graph in CSR form. Canonical: symmetric
// (w_uv = w_vu stored on both rows), zero-weight entries and self-loops
// absent, neighbor lists sorted. Immutable after construction.
class WeightedGraph {
public:
    WeightedGraph() = default;

    NodeId num_nodes() const { return num_nodes_; }
    std::size_t num_undirected_edges() const { return adjacency_.size() / 2; }

    std::span<const NodeId> neighbors(NodeId v) const {
        return {adjacency_.data() + offsets_[static_cast<std::size_t>(v)],
                adjacency_.data() + offsets_[static_cast<std::size_t>(v) + 1]};
    }
    std::span<const double> weights(NodeId v) const {
        return {weights_.data() + offsets_[static_cast<std::size_t>(v)],
                weights_.data() + offsets_[static_cast<std::size_t>(v) + 1]};
    }
    std::size_t degree(NodeId v) const {
        return offsets_[static_cast<std::size_t>(v) + 1] - offsets_[static_cast<std::size_t>(v)];
    }

    // Sum of incident edge weights of v.
    double incident_weight(NodeId v) const;

    // Each undirected edge once, u < v, lexicographically sorted.
    std::vector<WeightedEdge> edge_list() const;

    friend WeightedGraph build_weighted_graph(NodeId num_nodes, std::span<const WeightedEdge> entries);

private:
    NodeId num_nodes_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<NodeId> adjacency_;
    std::vector<double> weights_;
};

// Canonicalizes an arbitrary pair list: symmetrizes, drops self-loops and
// duplicates. Ids out of [0, num_nodes) are input errors.
DiscreteGraph build_discrete_graph(NodeId num_nodes, std::span<const std::pair<NodeId, NodeId>> edge_pairs);

// Directed entries (u,v,w1) and (v,u,w2) are merged to w = (w1+w2)/2; a
// repeated directed entry is an input error, as is any negative weight.
// Zero-weight entries and self-loops are dropped.
WeightedGraph build_weighted_graph(NodeId num_nodes, std::span<const WeightedEdge> entries);

} // namespace gam

#include "gam/graph.hpp"

#include <algorithm>
#include <cmath>

namespace gam {

namespace {

void check_id(NodeId id, NodeId num_nodes) {
    if (id < 0 || id >= num_nodes) {
        throw InputError("node id " + std::to_string(id) + " out of range [0, " +
                         std::to_string(num_nodes) + ")");
    }
}

} // namespace

std::vector<std::pair<NodeId, NodeId>> DiscreteGraph::edge_list() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(num_undirected_edges());
    for (NodeId u = 0; u < num_nodes_; ++u) {
        for (NodeId v : neighbors(u)) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

DiscreteGraph build_discrete_graph(NodeId num_nodes, std::span<const std::pair<NodeId, NodeId>> edge_pairs) {
    if (num_nodes < 0) {
        throw InputError("negative node count");
    }
    std::vector<std::pair<NodeId, NodeId>> dir;
    dir.reserve(edge_pairs.size() * 2);
    for (const auto& [u, v] : edge_pairs) {
        check_id(u, num_nodes);
        check_id(v, num_nodes);
        if (u == v) {
            continue; // self-loops dropped on canonicalization
        }
        dir.emplace_back(u, v);
        dir.emplace_back(v, u);
    }
    std::sort(dir.begin(), dir.end());
    dir.erase(std::unique(dir.begin(), dir.end()), dir.end());

    DiscreteGraph g;
    g.num_nodes_ = num_nodes;
    g.offsets_.assign(static_cast<std::size_t>(num_nodes) + 1, 0);
    g.adjacency_.resize(dir.size());
    for (std::size_t i = 0; i < dir.size(); ++i) {
        ++g.offsets_[static_cast<std::size_t>(dir[i].first) + 1];
        g.adjacency_[i] = dir[i].second;
    }
    for (std::size_t v = 0; v < static_cast<std::size_t>(num_nodes); ++v) {
        g.offsets_[v + 1] += g.offsets_[v];
    }
    return g;
}

double WeightedGraph::incident_weight(NodeId v) const {
    double total = 0.0;
    for (double w : weights(v)) {
        total += w;
    }
    return total;
}

std::vector<WeightedEdge> WeightedGraph::edge_list() const {
    std::vector<WeightedEdge> out;
    out.reserve(num_undirected_edges());
    for (NodeId u = 0; u < num_nodes_; ++u) {
        const auto nbrs = neighbors(u);
        const auto ws = weights(u);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            if (u < nbrs[i]) {
                out.push_back({u, nbrs[i], ws[i]});
            }
        }
    }
    return out;
}

WeightedGraph build_weighted_graph(NodeId num_nodes, std::span<const WeightedEdge> entries) {
    if (num_nodes < 0) {
        throw InputError("negative node count");
    }
    struct Directed {
        NodeId u, v;
        double w;
    };
    std::vector<Directed> dir;
    dir.reserve(entries.size());
    for (const auto& e : entries) {
        check_id(e.u, num_nodes);
        check_id(e.v, num_nodes);
        if (!(e.weight >= 0.0) || std::isinf(e.weight)) { // rejects NaN too
            throw InputError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                             ") has invalid weight " + std::to_string(e.weight));
        }
        if (e.u == e.v) {
            continue;
        }
        dir.push_back({e.u, e.v, e.weight});
    }
    std::sort(dir.begin(), dir.end(), [](const Directed& a, const Directed& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    for (std::size_t i = 1; i < dir.size(); ++i) {
        if (dir[i].u == dir[i - 1].u && dir[i].v == dir[i - 1].v) {
            throw InputError("duplicate directed entry (" + std::to_string(dir[i].u) + ", " +
                             std::to_string(dir[i].v) + ")");
        }
    }

    // Merge the two possible directed entries per undirected edge: average if
    // both present, take the single value otherwise.
    std::vector<WeightedEdge> undirected;
    undirected.reserve(dir.size());
    for (const auto& d : dir) {
        NodeId a = std::min(d.u, d.v), b = std::max(d.u, d.v);
        undirected.push_back({a, b, d.w});
    }
    std::sort(undirected.begin(), undirected.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    std::vector<WeightedEdge> merged;
    merged.reserve(undirected.size());
    for (const auto& e : undirected) {
        if (!merged.empty() && merged.back().u == e.u && merged.back().v == e.v) {
            merged.back().weight = (merged.back().weight + e.weight) / 2.0;
        } else {
            merged.push_back(e);
        }
    }
    std::erase_if(merged, [](const WeightedEdge& e) { return e.weight == 0.0; });

    WeightedGraph g;
    g.num_nodes_ = num_nodes;
    g.offsets_.assign(static_cast<std::size_t>(num_nodes) + 1, 0);
    for (const auto& e : merged) {
        ++g.offsets_[static_cast<std::size_t>(e.u) + 1];
        ++g.offsets_[static_cast<std::size_t>(e.v) + 1];
    }
    for (std::size_t v = 0; v < static_cast<std::size_t>(num_nodes); ++v) {
        g.offsets_[v + 1] += g.offsets_[v];
    }
    g.adjacency_.resize(merged.size() * 2);
    g.weights_.resize(merged.size() * 2);
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& e : merged) {
        // merged is sorted by (u, v), so per-row insertions stay sorted for the
        // u rows; v rows receive ascending u values for the same reason.
        g.adjacency_[cursor[static_cast<std::size_t>(e.u)]] = e.v;
        g.weights_[cursor[static_cast<std::size_t>(e.u)]++] = e.weight;
        g.adjacency_[cursor[static_cast<std::size_t>(e.v)]] = e.u;
        g.weights_[cursor[static_cast<std::size_t>(e.v)]++] = e.weight;
    }
    return g;
}

} // namespace gam

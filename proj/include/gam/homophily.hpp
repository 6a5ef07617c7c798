#pragma once

#include <vector>

#include "gam/graph.hpp"
#include "gam/labels.hpp"
#include "gam/neighborhood.hpp"

namespace gam {

// Per-node homophily contributions plus their summary. Nodes outside the
// evaluated subset and nodes with an empty (or zero-weight) neighborhood are
// not evaluated; their per_node slot is NaN. mean/stddev run over included
// nodes only; stddev is the population form.
struct HomophilyResult {
    std::vector<double> per_node;
    double mean = 0.0;
    double stddev = 0.0;
    std::size_t num_included = 0;
    std::size_t num_excluded = 0; // evaluated nodes skipped for empty neighborhoods

    bool evaluated(NodeId v) const;
};

// Fraction of k-hop neighbors sharing the node's class, averaged over the
// subset (nullptr = all nodes). Neighborhoods always span the full graph;
// restrict only narrows the averaging set.
HomophilyResult node_homophily(const DiscreteGraph& g, const NodeLabels& labels,
                               const KHopNeighborhoods& nbh, const NodeList* restrict_to = nullptr);
// Streaming variant expanding neighborhoods per node; identical results.
HomophilyResult node_homophily(const DiscreteGraph& g, const NodeLabels& labels, int hops,
                               const NodeList* restrict_to = nullptr);

// 1 - mean absolute distance of normalized labels across the k-hop
// neighborhood, per node.
HomophilyResult regression_homophily(const DiscreteGraph& g, const NodeLabels& labels,
                                     const KHopNeighborhoods& nbh, const NodeList* restrict_to = nullptr);
HomophilyResult regression_homophily(const DiscreteGraph& g, const NodeLabels& labels, int hops,
                                     const NodeList* restrict_to = nullptr);

// Same-class incident weight over total incident weight (1-hop; weighted
// k-hop metrics are out of scope). Zero-total-weight nodes are excluded.
HomophilyResult continuous_homophily(const WeightedGraph& g, const NodeLabels& labels,
                                     const NodeList* restrict_to = nullptr);

// 1 - weight-averaged absolute label distance over incident edges.
HomophilyResult continuous_regression_homophily(const WeightedGraph& g, const NodeLabels& labels,
                                                const NodeList* restrict_to = nullptr);

} // namespace gam

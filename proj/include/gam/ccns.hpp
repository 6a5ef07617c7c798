#pragma once

#include <vector>

#include "gam/graph.hpp"
#include "gam/labels.hpp"
#include "gam/neighborhood.hpp"

namespace gam {

// Per-class neighbor-label mass of one node: counts for discrete graphs,
// incident-weight sums for weighted graphs.
struct NeighborLabelHistogram {
    std::vector<double> mass; // length num_classes

    double norm() const;
};

enum class CcnsMode { Discrete, Continuous };

struct CcnsOptions {
    // Count the node's own label in its histogram, with mass equal to its
    // mean incident edge weight (1 for any non-isolated node of a discrete
    // graph, 0 for isolated nodes). This is the convention the benchmark
    // reference values follow; disable to get the bare neighbor histogram.
    bool count_self_label = true;
    // Include u == v pairs in the diagonal class averages. Disabling switches
    // the diagonal to the mean over distinct pairs, which requires every
    // class to have at least two members in the evaluated set.
    bool include_self_pairs = true;
};

// Class-pair averages of cosine similarity between nodes' neighbor-label
// histograms. Entries lie in [0,1]; the matrix is exactly symmetric.
struct CcnsMatrix {
    int num_classes = 0;
    int hops = 1;
    CcnsMode mode = CcnsMode::Discrete;
    std::vector<double> values; // row-major num_classes x num_classes
    // Nodes whose histogram is the zero vector (isolated under the chosen
    // options); their pairs contribute cosine 0.
    std::size_t zero_histogram_nodes = 0;

    double at(int c, int cp) const {
        return values[static_cast<std::size_t>(c) * static_cast<std::size_t>(num_classes) +
                      static_cast<std::size_t>(cp)];
    }
};

NeighborLabelHistogram neighbor_histogram(NodeId v, const KHopNeighborhoods& nbh, const NodeLabels& labels,
                                          bool include_self_label = false);
NeighborLabelHistogram neighbor_histogram(NodeId v, const WeightedGraph& g, const NodeLabels& labels,
                                          bool include_self_label = false);

// The pairwise double sum is never materialized: cosine similarity is
// bilinear once histograms are normalized, so class-pair sums reduce to dot
// products of per-class sums of normalized histograms, O(n*C + C^2) total.
// restrict_to narrows the node set being compared (split-wise evaluation);
// histograms always span the full graph. Every class must have a member in
// the evaluated set.
CcnsMatrix ccns_matrix(const DiscreteGraph& g, const NodeLabels& labels, const KHopNeighborhoods& nbh,
                       const NodeList* restrict_to = nullptr, const CcnsOptions& options = {});
CcnsMatrix ccns_matrix(const DiscreteGraph& g, const NodeLabels& labels, int hops,
                       const NodeList* restrict_to = nullptr, const CcnsOptions& options = {});
CcnsMatrix ccns_matrix(const WeightedGraph& g, const NodeLabels& labels,
                       const NodeList* restrict_to = nullptr, const CcnsOptions& options = {});

// Mean absolute entrywise deviation from the identity: sum |CCNS - I| / n^2.
// 0 exactly iff the matrix is the identity; lower is better.
double ccns_distance(const CcnsMatrix& m);

} // namespace gam

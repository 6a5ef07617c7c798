#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "gam/graph.hpp"
#include "gam/labels.hpp"

namespace gam {

// Deterministic scalar sampler on top of mt19937_64. Uniforms come from the
// top 53 bits, normals from Box-Muller; std::*_distribution is avoided
// because its output is implementation-defined and seeded runs must be
// byte-identical everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { // [0, 1)
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double normal();

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

struct SyntheticSpec {
    NodeId num_nodes = 0;
    int num_features = 50;
    int num_informative = 5;
    bool regression = false;
    ClassId num_classes = 2; // classification only
    int knn_k = 5;
    std::uint64_t seed = 0;

    void validate() const;
};

struct SyntheticDataset {
    std::vector<double> features; // row-major num_nodes x num_features
    NodeLabels labels;
    DiscreteGraph graph;
};

// Classification: class c's informative coordinates cluster around a center
// placed so adjacent class centers are Euclidean distance 4 apart (unit
// variance per coordinate); remaining features are standard Gaussian noise;
// labels cycle v mod num_classes. Regression: target is a seeded linear
// function of the informative features plus N(0, 0.1) noise. The graph is
// knn_graph over the features. Byte-identical for a fixed spec.
SyntheticDataset generate_synthetic(const SyntheticSpec& spec);

// Euclidean k-nearest-neighbor graph, symmetrized by union: the undirected
// edge {u,v} exists if either endpoint selects the other. Distance ties break
// toward the lower node id; a node never selects itself.
DiscreteGraph knn_graph(std::span<const double> features, NodeId num_nodes, int num_features, int k);

void write_features(std::ostream& out, std::span<const double> features, NodeId num_nodes,
                    int num_features);

// One row of whitespace-separated reals per node.
std::vector<double> parse_features(std::istream& in, NodeId& num_nodes, int& num_features);

} // namespace gam

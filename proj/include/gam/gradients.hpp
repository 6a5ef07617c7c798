#pragma once

#include <utility>
#include <vector>

#include "gam/graph.hpp"
#include "gam/labels.hpp"

namespace gam {

enum class WeightedMetricId { HCont, HRegCont };

const char* weighted_metric_name(WeightedMetricId id);

// Derivative of a continuous metric's mean with respect to each undirected
// edge weight. w_uv = w_vu is one variable, so each entry accounts for the
// edge's appearance in both endpoints' per-node ratios. Edge order matches
// WeightedGraph::edge_list() (u < v, lexicographic).
struct MetricGradient {
    WeightedMetricId metric = WeightedMetricId::HCont;
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::vector<double> d_weight;
};

MetricGradient grad_continuous_homophily(const WeightedGraph& g, const NodeLabels& labels);
MetricGradient grad_continuous_regression_homophily(const WeightedGraph& g, const NodeLabels& labels);

// Central-difference verification of the analytic gradient. Per-edge errors
// are measured relative to the instance's gradient scale (the largest
// |analytic| or |numeric| entry): a per-edge relative error would be
// dominated by difference-quotient noise wherever the true derivative is
// ~0. When the whole gradient is ~0 the absolute difference is reported.
struct FiniteDifferenceReport {
    WeightedMetricId metric = WeightedMetricId::HCont;
    double max_rel_error = 0.0;
    double mean_rel_error = 0.0;
    std::pair<NodeId, NodeId> worst_edge{-1, -1};
    double worst_analytic = 0.0;
    double worst_numeric = 0.0;
    double gradient_scale = 0.0;  // relative-error denominator
    std::size_t clamped_steps = 0; // edges whose step was shrunk to keep w > 0
    std::size_t num_edges = 0;
};

// step must be > 0; it is shrunk per edge (reported via clamped_steps) when a
// full step would drive that weight nonpositive.
FiniteDifferenceReport finite_difference_check(const WeightedGraph& g, const NodeLabels& labels,
                                               WeightedMetricId metric, double step = 1e-6);

} // namespace gam

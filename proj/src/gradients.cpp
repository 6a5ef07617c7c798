#include "gam/gradients.hpp"

#include <algorithm>
#include <cmath>

#include "gam/homophily.hpp"

namespace gam {

namespace {

// Shared shape of both continuous metrics: mean over nodes with positive
// incident weight of r_v, where
//   HCont:    r_v = (sum of same-class incident weight) / (total incident weight)
//   HRegCont: r_v = 1 - (weighted mean absolute label distance)
// For an edge {u,v}: d r_v / d w_uv = (term(u,v) - contribution_v) / total_v
// with term = [y_u = y_v] for HCont and term = -|y_v - y_u| for HRegCont
// (the leading 1 of HRegCont has zero derivative). Summed over both
// endpoints and divided by the included-node count.
struct NodeState {
    double total = 0.0; // incident weight
    double ratio = 0.0; // r_v (same-class fraction, resp. distance mean d_v)
    bool included = false;
};

MetricGradient gradient_impl(const WeightedGraph& g, const NodeLabels& labels, WeightedMetricId metric) {
    const NodeId n = g.num_nodes();
    const bool regression = metric == WeightedMetricId::HRegCont;
    if (regression) {
        labels.require_kind(LabelKind::Regression, "grad_continuous_regression_homophily");
    } else {
        labels.require_kind(LabelKind::Classification, "grad_continuous_homophily");
    }
    if (labels.num_nodes() != n) {
        throw InputError("label count does not match node count");
    }

    std::vector<NodeState> state(static_cast<std::size_t>(n));
    std::size_t included = 0;
    for (NodeId v = 0; v < n; ++v) {
        const auto nbrs = g.neighbors(v);
        const auto ws = g.weights(v);
        double total = 0.0, acc = 0.0;
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            total += ws[i];
            if (regression) {
                acc += ws[i] * std::abs(labels.normalized_of(v) -
                                        labels.normalized_of(nbrs[i]));
            } else if (labels.class_of(nbrs[i]) == labels.class_of(v)) {
                acc += ws[i];
            }
        }
        auto& s = state[static_cast<std::size_t>(v)];
        s.total = total;
        if (total > 0.0) {
            s.ratio = acc / total;
            s.included = true;
            ++included;
        }
    }

    MetricGradient grad;
    grad.metric = metric;
    const auto edges = g.edge_list();
    grad.edges.reserve(edges.size());
    grad.d_weight.reserve(edges.size());
    const double inv_count = included > 0 ? 1.0 / static_cast<double>(included) : 0.0;
    for (const auto& e : edges) {
        double d = 0.0;
        for (const auto& [v, other] : {std::pair(e.u, e.v), std::pair(e.v, e.u)}) {
            const auto& s = state[static_cast<std::size_t>(v)];
            if (!s.included) {
                continue; // excluded nodes are locally constant
            }
            double term;
            if (regression) {
                term = -std::abs(labels.normalized_of(v) - labels.normalized_of(other));
                d += (term - (-s.ratio)) / s.total; // d(1 - dist)/dw = (dist - |dy|)/total
            } else {
                term = labels.class_of(v) == labels.class_of(other) ? 1.0 : 0.0;
                d += (term - s.ratio) / s.total;
            }
        }
        grad.edges.emplace_back(e.u, e.v);
        grad.d_weight.push_back(d * inv_count);
    }
    return grad;
}

double metric_mean(const WeightedGraph& g, const NodeLabels& labels, WeightedMetricId metric) {
    return metric == WeightedMetricId::HRegCont
               ? continuous_regression_homophily(g, labels).mean
               : continuous_homophily(g, labels).mean;
}

} // namespace

const char* weighted_metric_name(WeightedMetricId id) {
    return id == WeightedMetricId::HRegCont ? "hreg_cont" : "hcont";
}

MetricGradient grad_continuous_homophily(const WeightedGraph& g, const NodeLabels& labels) {
    return gradient_impl(g, labels, WeightedMetricId::HCont);
}

MetricGradient grad_continuous_regression_homophily(const WeightedGraph& g, const NodeLabels& labels) {
    return gradient_impl(g, labels, WeightedMetricId::HRegCont);
}

FiniteDifferenceReport finite_difference_check(const WeightedGraph& g, const NodeLabels& labels,
                                               WeightedMetricId metric, double step) {
    if (!(step > 0.0)) {
        throw InputError("finite-difference step must be positive");
    }
    const MetricGradient grad = gradient_impl(g, labels, metric);

    FiniteDifferenceReport report;
    report.metric = metric;
    report.num_edges = grad.edges.size();

    auto base_edges = g.edge_list();
    std::vector<double> numeric(base_edges.size(), 0.0);
    for (std::size_t i = 0; i < base_edges.size(); ++i) {
        double h = step;
        if (base_edges[i].weight - h <= 0.0) {
            h = base_edges[i].weight / 2.0;
            ++report.clamped_steps;
        }
        auto perturbed = base_edges;
        perturbed[i].weight = base_edges[i].weight + h;
        const double up = metric_mean(build_weighted_graph(g.num_nodes(), perturbed), labels, metric);
        perturbed[i].weight = base_edges[i].weight - h;
        const double down = metric_mean(build_weighted_graph(g.num_nodes(), perturbed), labels, metric);
        numeric[i] = (up - down) / (2.0 * h);
    }

    double scale = 0.0;
    for (std::size_t i = 0; i < numeric.size(); ++i) {
        scale = std::max({scale, std::abs(grad.d_weight[i]), std::abs(numeric[i])});
    }
    report.gradient_scale = scale;
    const double denom = scale > 0.0 ? scale : 1.0;

    double err_sum = 0.0;
    for (std::size_t i = 0; i < numeric.size(); ++i) {
        const double err = std::abs(grad.d_weight[i] - numeric[i]) / denom;
        err_sum += err;
        if (err > report.max_rel_error) {
            report.max_rel_error = err;
            report.worst_edge = grad.edges[i];
            report.worst_analytic = grad.d_weight[i];
            report.worst_numeric = numeric[i];
        }
    }
    if (!numeric.empty()) {
        report.mean_rel_error = err_sum / static_cast<double>(numeric.size());
    }
    return report;
}

} // namespace gam

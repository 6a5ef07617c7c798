#include "gam/homophily.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gam/parallel.hpp"

namespace gam {

namespace {

constexpr double kNotEvaluated = std::numeric_limits<double>::quiet_NaN();

void check_common(NodeId graph_nodes, const NodeLabels& labels, const NodeList* restrict_to) {
    if (labels.num_nodes() != graph_nodes) {
        throw InputError("label count " + std::to_string(labels.num_nodes()) +
                         " does not match node count " + std::to_string(graph_nodes));
    }
    if (restrict_to != nullptr) {
        if (restrict_to->empty()) {
            throw InputError("restricted evaluation requires a nonempty node subset");
        }
        for (NodeId v : *restrict_to) {
            if (v < 0 || v >= graph_nodes) {
                throw InputError("subset node id " + std::to_string(v) + " out of range");
            }
        }
    }
}

// Fills per_node for the evaluation set in parallel, then reduces serially in
// node-index order (bitwise reproducible across worker counts). make_kernel()
// is invoked once per chunk and returns a callable double(NodeId) yielding the
// node's contribution, NaN for an empty neighborhood.
template <typename KernelFactory>
HomophilyResult run(NodeId num_nodes, const NodeList* restrict_to, KernelFactory&& make_kernel) {
    const std::size_t n = static_cast<std::size_t>(num_nodes);
    HomophilyResult r;
    r.per_node.assign(n, kNotEvaluated);

    const std::size_t eval_count = restrict_to ? restrict_to->size() : n;
    parallel_chunks(eval_count, 512, [&](std::size_t begin, std::size_t end) {
        auto kernel = make_kernel();
        for (std::size_t i = begin; i < end; ++i) {
            const NodeId v = restrict_to ? (*restrict_to)[i] : static_cast<NodeId>(i);
            r.per_node[static_cast<std::size_t>(v)] = kernel(v);
        }
    });

    double sum = 0.0;
    for (std::size_t i = 0; i < eval_count; ++i) {
        const NodeId v = restrict_to ? (*restrict_to)[i] : static_cast<NodeId>(i);
        const double x = r.per_node[static_cast<std::size_t>(v)];
        if (std::isnan(x)) {
            ++r.num_excluded;
        } else {
            sum += x;
            ++r.num_included;
        }
    }
    if (r.num_included > 0) {
        r.mean = sum / static_cast<double>(r.num_included);
        double sq = 0.0;
        for (std::size_t i = 0; i < eval_count; ++i) {
            const NodeId v = restrict_to ? (*restrict_to)[i] : static_cast<NodeId>(i);
            const double x = r.per_node[static_cast<std::size_t>(v)];
            if (!std::isnan(x)) {
                sq += (x - r.mean) * (x - r.mean);
            }
        }
        r.stddev = std::sqrt(sq / static_cast<double>(r.num_included));
    }
    return r;
}

double same_class_fraction(std::span<const NodeId> nbrs, std::span<const ClassId> cls, ClassId own) {
    if (nbrs.empty()) {
        return kNotEvaluated;
    }
    std::size_t same = 0;
    for (NodeId u : nbrs) {
        same += cls[static_cast<std::size_t>(u)] == own;
    }
    return static_cast<double>(same) / static_cast<double>(nbrs.size());
}

double label_proximity(std::span<const NodeId> nbrs, std::span<const double> y, double own) {
    if (nbrs.empty()) {
        return kNotEvaluated;
    }
    double dist = 0.0;
    for (NodeId u : nbrs) {
        dist += std::abs(own - y[static_cast<std::size_t>(u)]);
    }
    return std::clamp(1.0 - dist / static_cast<double>(nbrs.size()), 0.0, 1.0);
}

void check_nbh(const KHopNeighborhoods& nbh, const DiscreteGraph& g) {
    if (nbh.num_nodes() != g.num_nodes()) {
        throw InputError("neighborhoods were computed on a different graph");
    }
}

} // namespace

bool HomophilyResult::evaluated(NodeId v) const {
    return !std::isnan(per_node[static_cast<std::size_t>(v)]);
}

HomophilyResult node_homophily(const DiscreteGraph& g, const NodeLabels& labels,
                               const KHopNeighborhoods& nbh, const NodeList* restrict_to) {
    labels.require_kind(LabelKind::Classification, "node_homophily");
    check_common(g.num_nodes(), labels, restrict_to);
    check_nbh(nbh, g);
    const auto cls = labels.class_ids();
    return run(g.num_nodes(), restrict_to, [&] {
        return [&](NodeId v) { return same_class_fraction(nbh.of(v), cls, cls[static_cast<std::size_t>(v)]); };
    });
}

HomophilyResult node_homophily(const DiscreteGraph& g, const NodeLabels& labels, int hops,
                               const NodeList* restrict_to) {
    if (hops < 1) {
        throw InputError("hop count must be >= 1");
    }
    labels.require_kind(LabelKind::Classification, "node_homophily");
    check_common(g.num_nodes(), labels, restrict_to);
    const auto cls = labels.class_ids();
    if (hops == 1) {
        return run(g.num_nodes(), restrict_to, [&] {
            return [&](NodeId v) { return same_class_fraction(g.neighbors(v), cls, cls[static_cast<std::size_t>(v)]); };
        });
    }
    return run(g.num_nodes(), restrict_to, [&, hops] {
        return [&, hops, expander = KHopExpander(g)](NodeId v) mutable {
            return same_class_fraction(expander.expand(v, hops), cls, cls[static_cast<std::size_t>(v)]);
        };
    });
}

HomophilyResult regression_homophily(const DiscreteGraph& g, const NodeLabels& labels,
                                     const KHopNeighborhoods& nbh, const NodeList* restrict_to) {
    labels.require_kind(LabelKind::Regression, "regression_homophily");
    check_common(g.num_nodes(), labels, restrict_to);
    check_nbh(nbh, g);
    const auto y = labels.normalized_values();
    return run(g.num_nodes(), restrict_to, [&] {
        return [&](NodeId v) { return label_proximity(nbh.of(v), y, y[static_cast<std::size_t>(v)]); };
    });
}

HomophilyResult regression_homophily(const DiscreteGraph& g, const NodeLabels& labels, int hops,
                                     const NodeList* restrict_to) {
    if (hops < 1) {
        throw InputError("hop count must be >= 1");
    }
    labels.require_kind(LabelKind::Regression, "regression_homophily");
    check_common(g.num_nodes(), labels, restrict_to);
    const auto y = labels.normalized_values();
    if (hops == 1) {
        return run(g.num_nodes(), restrict_to, [&] {
            return [&](NodeId v) { return label_proximity(g.neighbors(v), y, y[static_cast<std::size_t>(v)]); };
        });
    }
    return run(g.num_nodes(), restrict_to, [&, hops] {
        return [&, hops, expander = KHopExpander(g)](NodeId v) mutable {
            return label_proximity(expander.expand(v, hops), y, y[static_cast<std::size_t>(v)]);
        };
    });
}

HomophilyResult continuous_homophily(const WeightedGraph& g, const NodeLabels& labels,
                                     const NodeList* restrict_to) {
    labels.require_kind(LabelKind::Classification, "continuous_homophily");
    check_common(g.num_nodes(), labels, restrict_to);
    const auto cls = labels.class_ids();
    return run(g.num_nodes(), restrict_to, [&] {
        return [&](NodeId v) {
            const auto nbrs = g.neighbors(v);
            const auto ws = g.weights(v);
            const ClassId own = cls[static_cast<std::size_t>(v)];
            double same = 0.0, total = 0.0;
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                total += ws[i];
                if (cls[static_cast<std::size_t>(nbrs[i])] == own) {
                    same += ws[i];
                }
            }
            if (total <= 0.0) {
                return kNotEvaluated;
            }
            return std::clamp(same / total, 0.0, 1.0);
        };
    });
}

HomophilyResult continuous_regression_homophily(const WeightedGraph& g, const NodeLabels& labels,
                                                const NodeList* restrict_to) {
    labels.require_kind(LabelKind::Regression, "continuous_regression_homophily");
    check_common(g.num_nodes(), labels, restrict_to);
    const auto y = labels.normalized_values();
    return run(g.num_nodes(), restrict_to, [&] {
        return [&](NodeId v) {
            const auto nbrs = g.neighbors(v);
            const auto ws = g.weights(v);
            const double own = y[static_cast<std::size_t>(v)];
            double dist = 0.0, total = 0.0;
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                total += ws[i];
                dist += ws[i] * std::abs(own - y[static_cast<std::size_t>(nbrs[i])]);
            }
            if (total <= 0.0) {
                return kNotEvaluated;
            }
            return std::clamp(1.0 - dist / total, 0.0, 1.0);
        };
    });
}

} // namespace gam

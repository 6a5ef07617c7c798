#include "gam/ccns.hpp"

#include <algorithm>
#include <cmath>

#include "gam/parallel.hpp"

namespace gam {

namespace {

double self_mass(const DiscreteGraph& g, NodeId v) {
    return g.degree(v) > 0 ? 1.0 : 0.0;
}

double self_mass(const WeightedGraph& g, NodeId v) {
    const std::size_t deg = g.degree(v);
    return deg > 0 ? g.incident_weight(v) / static_cast<double>(deg) : 0.0;
}

void fill_discrete(std::span<const NodeId> nbrs, std::span<const ClassId> cls, std::vector<double>& h) {
    std::fill(h.begin(), h.end(), 0.0);
    for (NodeId u : nbrs) {
        h[static_cast<std::size_t>(cls[static_cast<std::size_t>(u)])] += 1.0;
    }
}

void fill_weighted(const WeightedGraph& g, NodeId v, std::span<const ClassId> cls, std::vector<double>& h) {
    std::fill(h.begin(), h.end(), 0.0);
    const auto nbrs = g.neighbors(v);
    const auto ws = g.weights(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        h[static_cast<std::size_t>(cls[static_cast<std::size_t>(nbrs[i])])] += ws[i];
    }
}

double l2_norm(std::span<const double> h) {
    double sq = 0.0;
    for (double x : h) {
        sq += x * x;
    }
    return std::sqrt(sq);
}

struct ClassAggregates {
    std::vector<double> normed_sums;  // C x C row-major: per-class sums of normalized histograms
    std::vector<std::size_t> sizes;   // evaluated members per class
    std::vector<std::size_t> nonzero; // members with a nonzero histogram per class
    std::size_t zero_histograms = 0;
};

void check_inputs(NodeId graph_nodes, const NodeLabels& labels, const NodeList* restrict_to) {
    labels.require_kind(LabelKind::Classification, "ccns_matrix");
    if (labels.num_nodes() != graph_nodes) {
        throw InputError("label count does not match node count");
    }
    if (labels.num_classes() < 2) {
        throw InputError("CCNS requires at least 2 classes");
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

// Accumulates per-class sums of normalized histograms over the evaluated node
// set. make_fill() is invoked once per chunk and returns a callable
// (NodeId v, vector<double>& h) writing v's raw histogram (without self
// mass); self(v) supplies the self-label mass. Chunk boundaries do not depend
// on the worker count and partials reduce in chunk order, so the result is
// bitwise reproducible.
template <typename FillFactory, typename SelfMass>
ClassAggregates aggregate(NodeId num_nodes, ClassId num_classes, std::span<const ClassId> cls,
                          const NodeList* restrict_to, const CcnsOptions& options,
                          FillFactory&& make_fill, SelfMass&& self) {
    const std::size_t c_count = static_cast<std::size_t>(num_classes);
    const std::size_t eval_count = restrict_to ? restrict_to->size() : static_cast<std::size_t>(num_nodes);
    constexpr std::size_t kChunk = 1024;
    const std::size_t chunks = chunk_count(eval_count, kChunk);

    struct Partial {
        std::vector<double> sums;
        std::vector<std::size_t> nonzero;
        std::size_t zeros = 0;
    };
    std::vector<Partial> partials(chunks);

    parallel_chunks(eval_count, kChunk, [&](std::size_t begin, std::size_t end) {
        Partial& p = partials[begin / kChunk];
        p.sums.assign(c_count * c_count, 0.0);
        p.nonzero.assign(c_count, 0);
        auto fill = make_fill();
        std::vector<double> h(c_count);
        for (std::size_t i = begin; i < end; ++i) {
            const NodeId v = restrict_to ? (*restrict_to)[i] : static_cast<NodeId>(i);
            fill(v, h);
            const std::size_t own = static_cast<std::size_t>(cls[static_cast<std::size_t>(v)]);
            if (options.count_self_label) {
                h[own] += self(v);
            }
            const double norm = l2_norm(h);
            if (norm <= 0.0) {
                ++p.zeros;
                continue;
            }
            ++p.nonzero[own];
            double* row = p.sums.data() + own * c_count;
            for (std::size_t c = 0; c < c_count; ++c) {
                row[c] += h[c] / norm;
            }
        }
    });

    ClassAggregates agg;
    agg.normed_sums.assign(c_count * c_count, 0.0);
    agg.sizes.assign(c_count, 0);
    agg.nonzero.assign(c_count, 0);
    for (const Partial& p : partials) {
        for (std::size_t i = 0; i < c_count * c_count; ++i) {
            agg.normed_sums[i] += p.sums[i];
        }
        for (std::size_t c = 0; c < c_count; ++c) {
            agg.nonzero[c] += p.nonzero[c];
        }
        agg.zero_histograms += p.zeros;
    }
    for (std::size_t i = 0; i < eval_count; ++i) {
        const NodeId v = restrict_to ? (*restrict_to)[i] : static_cast<NodeId>(i);
        ++agg.sizes[static_cast<std::size_t>(cls[static_cast<std::size_t>(v)])];
    }
    return agg;
}

CcnsMatrix assemble(const ClassAggregates& agg, ClassId num_classes, int hops, CcnsMode mode,
                    const CcnsOptions& options) {
    const std::size_t c_count = static_cast<std::size_t>(num_classes);
    for (std::size_t c = 0; c < c_count; ++c) {
        if (agg.sizes[c] == 0) {
            throw InputError("class " + std::to_string(c) + " has no members in the evaluated node set");
        }
        if (!options.include_self_pairs && agg.sizes[c] < 2) {
            throw InputError("class " + std::to_string(c) +
                             " has a single member; distinct-pair diagonal is undefined");
        }
    }
    CcnsMatrix m;
    m.num_classes = num_classes;
    m.hops = hops;
    m.mode = mode;
    m.zero_histogram_nodes = agg.zero_histograms;
    m.values.assign(c_count * c_count, 0.0);
    for (std::size_t c = 0; c < c_count; ++c) {
        for (std::size_t cp = c; cp < c_count; ++cp) {
            double dot = 0.0;
            const double* a = agg.normed_sums.data() + c * c_count;
            const double* b = agg.normed_sums.data() + cp * c_count;
            for (std::size_t j = 0; j < c_count; ++j) {
                dot += a[j] * b[j];
            }
            double value;
            if (c == cp && !options.include_self_pairs) {
                // each nonzero histogram has cosine exactly 1 with itself;
                // subtract those before the distinct-pair mean
                dot -= static_cast<double>(agg.nonzero[c]);
                value = dot / (static_cast<double>(agg.sizes[c]) * static_cast<double>(agg.sizes[c] - 1));
            } else {
                value = dot / (static_cast<double>(agg.sizes[c]) * static_cast<double>(agg.sizes[cp]));
            }
            value = std::clamp(value, 0.0, 1.0);
            m.values[c * c_count + cp] = value;
            m.values[cp * c_count + c] = value;
        }
    }
    return m;
}

} // namespace

double NeighborLabelHistogram::norm() const {
    return l2_norm(mass);
}

NeighborLabelHistogram neighbor_histogram(NodeId v, const KHopNeighborhoods& nbh, const NodeLabels& labels,
                                          bool include_self_label) {
    labels.require_kind(LabelKind::Classification, "neighbor_histogram");
    NeighborLabelHistogram h;
    h.mass.assign(static_cast<std::size_t>(labels.num_classes()), 0.0);
    fill_discrete(nbh.of(v), labels.class_ids(), h.mass);
    if (include_self_label && nbh.size(v) > 0) {
        h.mass[static_cast<std::size_t>(labels.class_of(v))] += 1.0;
    }
    return h;
}

NeighborLabelHistogram neighbor_histogram(NodeId v, const WeightedGraph& g, const NodeLabels& labels,
                                          bool include_self_label) {
    labels.require_kind(LabelKind::Classification, "neighbor_histogram");
    NeighborLabelHistogram h;
    h.mass.assign(static_cast<std::size_t>(labels.num_classes()), 0.0);
    fill_weighted(g, v, labels.class_ids(), h.mass);
    if (include_self_label) {
        h.mass[static_cast<std::size_t>(labels.class_of(v))] += self_mass(g, v);
    }
    return h;
}

CcnsMatrix ccns_matrix(const DiscreteGraph& g, const NodeLabels& labels, const KHopNeighborhoods& nbh,
                       const NodeList* restrict_to, const CcnsOptions& options) {
    check_inputs(g.num_nodes(), labels, restrict_to);
    if (nbh.num_nodes() != g.num_nodes()) {
        throw InputError("neighborhoods were computed on a different graph");
    }
    const auto cls = labels.class_ids();
    auto agg = aggregate(
        g.num_nodes(), labels.num_classes(), cls, restrict_to, options,
        [&] {
            return [&](NodeId v, std::vector<double>& h) { fill_discrete(nbh.of(v), cls, h); };
        },
        [&](NodeId v) { return self_mass(g, v); });
    return assemble(agg, labels.num_classes(), nbh.hops, CcnsMode::Discrete, options);
}

CcnsMatrix ccns_matrix(const DiscreteGraph& g, const NodeLabels& labels, int hops,
                       const NodeList* restrict_to, const CcnsOptions& options) {
    if (hops < 1) {
        throw InputError("hop count must be >= 1");
    }
    check_inputs(g.num_nodes(), labels, restrict_to);
    const auto cls = labels.class_ids();
    if (hops == 1) {
        auto agg = aggregate(
            g.num_nodes(), labels.num_classes(), cls, restrict_to, options,
            [&] {
                return [&](NodeId v, std::vector<double>& h) { fill_discrete(g.neighbors(v), cls, h); };
            },
            [&](NodeId v) { return self_mass(g, v); });
        return assemble(agg, labels.num_classes(), hops, CcnsMode::Discrete, options);
    }
    auto agg = aggregate(
        g.num_nodes(), labels.num_classes(), cls, restrict_to, options,
        [&, hops] {
            return [&, hops, expander = KHopExpander(g)](NodeId v, std::vector<double>& h) mutable {
                fill_discrete(expander.expand(v, hops), cls, h);
            };
        },
        [&](NodeId v) { return self_mass(g, v); });
    return assemble(agg, labels.num_classes(), hops, CcnsMode::Discrete, options);
}

CcnsMatrix ccns_matrix(const WeightedGraph& g, const NodeLabels& labels,
                       const NodeList* restrict_to, const CcnsOptions& options) {
    check_inputs(g.num_nodes(), labels, restrict_to);
    const auto cls = labels.class_ids();
    auto agg = aggregate(
        g.num_nodes(), labels.num_classes(), cls, restrict_to, options,
        [&] {
            return [&](NodeId v, std::vector<double>& h) { fill_weighted(g, v, cls, h); };
        },
        [&](NodeId v) { return self_mass(g, v); });
    return assemble(agg, labels.num_classes(), 1, CcnsMode::Continuous, options);
}

double ccns_distance(const CcnsMatrix& m) {
    const std::size_t c_count = static_cast<std::size_t>(m.num_classes);
    double total = 0.0;
    for (std::size_t c = 0; c < c_count; ++c) {
        for (std::size_t cp = 0; cp < c_count; ++cp) {
            const double target = c == cp ? 1.0 : 0.0;
            total += std::abs(m.values[c * c_count + cp] - target);
        }
    }
    return total / static_cast<double>(c_count * c_count);
}

} // namespace gam

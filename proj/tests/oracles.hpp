#pragma once

// Brute-force reference implementations used as test oracles. Everything here
// works from the metric definitions directly (dense matrices, explicit double
// loops, Floyd-Warshall) and shares no kernel code with the library.

#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "gam/ccns.hpp"
#include "gam/graph.hpp"
#include "gam/labels.hpp"

namespace oracle {

constexpr int kUnreachable = std::numeric_limits<int>::max() / 4;

inline std::vector<std::vector<int>> all_pairs_distances(const gam::DiscreteGraph& g) {
    const std::size_t n = static_cast<std::size_t>(g.num_nodes());
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, kUnreachable));
    for (std::size_t v = 0; v < n; ++v) {
        dist[v][v] = 0;
        for (gam::NodeId u : g.neighbors(static_cast<gam::NodeId>(v))) {
            dist[v][static_cast<std::size_t>(u)] = 1;
        }
    }
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (dist[i][m] + dist[m][j] < dist[i][j]) {
                    dist[i][j] = dist[i][m] + dist[m][j];
                }
            }
        }
    }
    return dist;
}

inline std::vector<std::vector<gam::NodeId>> khop_sets(const gam::DiscreteGraph& g, int k) {
    const auto dist = all_pairs_distances(g);
    const std::size_t n = dist.size();
    std::vector<std::vector<gam::NodeId>> out(n);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t u = 0; u < n; ++u) {
            if (u != v && dist[v][u] <= k) {
                out[v].push_back(static_cast<gam::NodeId>(u));
            }
        }
    }
    return out;
}

struct Summary {
    std::vector<double> per_node; // NaN where not evaluated
    double mean = 0.0;
    double stddev = 0.0;
    std::size_t excluded = 0;
};

inline Summary summarize(const std::vector<double>& per_node, const std::vector<gam::NodeId>& eval_set) {
    Summary s;
    s.per_node = per_node;
    std::vector<double> vals;
    for (gam::NodeId v : eval_set) {
        const double x = per_node[static_cast<std::size_t>(v)];
        if (std::isnan(x)) {
            ++s.excluded;
        } else {
            vals.push_back(x);
        }
    }
    for (double x : vals) {
        s.mean += x;
    }
    if (!vals.empty()) {
        s.mean /= static_cast<double>(vals.size());
        double sq = 0.0;
        for (double x : vals) {
            sq += (x - s.mean) * (x - s.mean);
        }
        s.stddev = std::sqrt(sq / static_cast<double>(vals.size()));
    }
    return s;
}

inline std::vector<gam::NodeId> everyone(gam::NodeId n) {
    std::vector<gam::NodeId> all(static_cast<std::size_t>(n));
    for (gam::NodeId v = 0; v < n; ++v) {
        all[static_cast<std::size_t>(v)] = v;
    }
    return all;
}

inline Summary node_homophily(const gam::DiscreteGraph& g, const std::vector<gam::ClassId>& labels, int k,
                              std::optional<std::vector<gam::NodeId>> eval = std::nullopt) {
    const auto sets = khop_sets(g, k);
    const std::size_t n = sets.size();
    std::vector<double> per(n, std::numeric_limits<double>::quiet_NaN());
    const auto eval_set = eval ? *eval : everyone(g.num_nodes());
    for (gam::NodeId v : eval_set) {
        const auto& nb = sets[static_cast<std::size_t>(v)];
        if (nb.empty()) {
            continue;
        }
        std::size_t same = 0;
        for (gam::NodeId u : nb) {
            same += labels[static_cast<std::size_t>(u)] == labels[static_cast<std::size_t>(v)];
        }
        per[static_cast<std::size_t>(v)] = static_cast<double>(same) / static_cast<double>(nb.size());
    }
    return summarize(per, eval_set);
}

inline Summary regression_homophily(const gam::DiscreteGraph& g, const std::vector<double>& y, int k,
                                    std::optional<std::vector<gam::NodeId>> eval = std::nullopt) {
    const auto sets = khop_sets(g, k);
    const std::size_t n = sets.size();
    std::vector<double> per(n, std::numeric_limits<double>::quiet_NaN());
    const auto eval_set = eval ? *eval : everyone(g.num_nodes());
    for (gam::NodeId v : eval_set) {
        const auto& nb = sets[static_cast<std::size_t>(v)];
        if (nb.empty()) {
            continue;
        }
        double dist = 0.0;
        for (gam::NodeId u : nb) {
            dist += std::abs(y[static_cast<std::size_t>(v)] - y[static_cast<std::size_t>(u)]);
        }
        per[static_cast<std::size_t>(v)] = 1.0 - dist / static_cast<double>(nb.size());
    }
    return summarize(per, eval_set);
}

inline std::vector<std::vector<double>> dense_weights(const gam::WeightedGraph& g) {
    const std::size_t n = static_cast<std::size_t>(g.num_nodes());
    std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
    for (const auto& e : g.edge_list()) {
        w[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = e.weight;
        w[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = e.weight;
    }
    return w;
}

inline Summary continuous_homophily(const gam::WeightedGraph& g, const std::vector<gam::ClassId>& labels,
                                    std::optional<std::vector<gam::NodeId>> eval = std::nullopt) {
    const auto w = dense_weights(g);
    const std::size_t n = w.size();
    std::vector<double> per(n, std::numeric_limits<double>::quiet_NaN());
    const auto eval_set = eval ? *eval : everyone(g.num_nodes());
    for (gam::NodeId vi : eval_set) {
        const std::size_t v = static_cast<std::size_t>(vi);
        double same = 0.0, total = 0.0;
        for (std::size_t u = 0; u < n; ++u) {
            total += w[v][u];
            if (labels[u] == labels[v]) {
                same += w[v][u];
            }
        }
        if (total > 0.0) {
            per[v] = same / total;
        }
    }
    return summarize(per, eval_set);
}

inline Summary continuous_regression_homophily(const gam::WeightedGraph& g, const std::vector<double>& y,
                                               std::optional<std::vector<gam::NodeId>> eval = std::nullopt) {
    const auto w = dense_weights(g);
    const std::size_t n = w.size();
    std::vector<double> per(n, std::numeric_limits<double>::quiet_NaN());
    const auto eval_set = eval ? *eval : everyone(g.num_nodes());
    for (gam::NodeId vi : eval_set) {
        const std::size_t v = static_cast<std::size_t>(vi);
        double dist = 0.0, total = 0.0;
        for (std::size_t u = 0; u < n; ++u) {
            total += w[v][u];
            dist += w[v][u] * std::abs(y[v] - y[u]);
        }
        if (total > 0.0) {
            per[v] = 1.0 - dist / total;
        }
    }
    return summarize(per, eval_set);
}

// Naive pairwise CCNS straight from the definition: per-node histograms,
// explicit cosine for every node pair. Pass a discrete graph with k >= 1, or
// a weighted graph (k ignored).
struct CcnsOracleResult {
    std::vector<std::vector<double>> matrix;
    std::size_t zero_histograms = 0;
};

inline CcnsOracleResult ccns(const gam::DiscreteGraph* dg, const gam::WeightedGraph* wg,
                             const std::vector<gam::ClassId>& labels, gam::ClassId num_classes, int k,
                             const gam::CcnsOptions& options,
                             std::optional<std::vector<gam::NodeId>> eval = std::nullopt) {
    const std::size_t n = labels.size();
    const std::size_t c_count = static_cast<std::size_t>(num_classes);

    std::vector<std::vector<double>> hist(n, std::vector<double>(c_count, 0.0));
    if (dg != nullptr) {
        const auto sets = khop_sets(*dg, k);
        for (std::size_t v = 0; v < n; ++v) {
            for (gam::NodeId u : sets[v]) {
                hist[v][static_cast<std::size_t>(labels[static_cast<std::size_t>(u)])] += 1.0;
            }
            if (options.count_self_label && dg->degree(static_cast<gam::NodeId>(v)) > 0) {
                hist[v][static_cast<std::size_t>(labels[v])] += 1.0;
            }
        }
    } else {
        const auto w = dense_weights(*wg);
        for (std::size_t v = 0; v < n; ++v) {
            double total = 0.0;
            std::size_t deg = 0;
            for (std::size_t u = 0; u < n; ++u) {
                hist[v][static_cast<std::size_t>(labels[u])] += w[v][u];
                total += w[v][u];
                deg += w[v][u] > 0.0;
            }
            if (options.count_self_label && deg > 0) {
                hist[v][static_cast<std::size_t>(labels[v])] += total / static_cast<double>(deg);
            }
        }
    }

    auto norm = [&](std::size_t v) {
        double sq = 0.0;
        for (double x : hist[v]) {
            sq += x * x;
        }
        return std::sqrt(sq);
    };
    auto cossim = [&](std::size_t u, std::size_t v) {
        const double nu = norm(u), nv = norm(v);
        if (nu <= 0.0 || nv <= 0.0) {
            return 0.0;
        }
        double dot = 0.0;
        for (std::size_t c = 0; c < c_count; ++c) {
            dot += hist[u][c] * hist[v][c];
        }
        return dot / (nu * nv);
    };

    const auto eval_set = eval ? *eval : everyone(static_cast<gam::NodeId>(n));
    std::vector<std::vector<gam::NodeId>> by_class(c_count);
    for (gam::NodeId v : eval_set) {
        by_class[static_cast<std::size_t>(labels[static_cast<std::size_t>(v)])].push_back(v);
    }

    CcnsOracleResult result;
    for (gam::NodeId v : eval_set) {
        if (norm(static_cast<std::size_t>(v)) <= 0.0) {
            ++result.zero_histograms;
        }
    }
    result.matrix.assign(c_count, std::vector<double>(c_count, 0.0));
    for (std::size_t c = 0; c < c_count; ++c) {
        for (std::size_t cp = 0; cp < c_count; ++cp) {
            double sum = 0.0;
            std::size_t pairs = 0;
            for (gam::NodeId u : by_class[c]) {
                for (gam::NodeId v : by_class[cp]) {
                    if (c == cp && !options.include_self_pairs && u == v) {
                        continue;
                    }
                    sum += cossim(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
                    ++pairs;
                }
            }
            result.matrix[c][cp] = pairs > 0 ? sum / static_cast<double>(pairs) : 0.0;
        }
    }
    return result;
}

inline double ccns_distance(const std::vector<std::vector<double>>& m) {
    const std::size_t c = m.size();
    double total = 0.0;
    for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            total += std::abs(m[i][j] - (i == j ? 1.0 : 0.0));
        }
    }
    return total / static_cast<double>(c * c);
}

// Seeded random instances. mt19937 with explicit ranges keeps them portable.
struct RandomGraphSpec {
    gam::NodeId n = 20;
    double edge_prob = 0.2;
    gam::ClassId num_classes = 3;
    std::uint32_t seed = 1;
};

inline gam::DiscreteGraph random_discrete(const RandomGraphSpec& spec) {
    std::mt19937 rng(spec.seed);
    std::vector<std::pair<gam::NodeId, gam::NodeId>> edges;
    for (gam::NodeId u = 0; u < spec.n; ++u) {
        for (gam::NodeId v = u + 1; v < spec.n; ++v) {
            const double x = static_cast<double>(rng()) / 4294967296.0;
            if (x < spec.edge_prob) {
                edges.emplace_back(u, v);
            }
        }
    }
    return gam::build_discrete_graph(spec.n, edges);
}

inline gam::WeightedGraph random_weighted(const RandomGraphSpec& spec) {
    std::mt19937 rng(spec.seed);
    std::vector<gam::WeightedEdge> edges;
    for (gam::NodeId u = 0; u < spec.n; ++u) {
        for (gam::NodeId v = u + 1; v < spec.n; ++v) {
            const double x = static_cast<double>(rng()) / 4294967296.0;
            const double w = 0.1 + 1.9 * (static_cast<double>(rng()) / 4294967296.0);
            if (x < spec.edge_prob) {
                edges.push_back({u, v, w});
            }
        }
    }
    return gam::build_weighted_graph(spec.n, edges);
}

inline std::vector<gam::ClassId> random_classes(gam::NodeId n, gam::ClassId num_classes,
                                                std::uint32_t seed) {
    std::mt19937 rng(seed ^ 0x9e3779b9u);
    std::vector<gam::ClassId> out(static_cast<std::size_t>(n));
    for (auto& c : out) {
        c = static_cast<gam::ClassId>(rng() % static_cast<std::uint32_t>(num_classes));
    }
    // every class must appear at least once for CCNS
    for (gam::ClassId c = 0; c < num_classes; ++c) {
        out[static_cast<std::size_t>(c) % out.size()] = c;
    }
    return out;
}

inline std::vector<double> random_unit_values(gam::NodeId n, std::uint32_t seed) {
    std::mt19937 rng(seed ^ 0x7f4a7c15u);
    std::vector<double> out(static_cast<std::size_t>(n));
    for (auto& y : out) {
        y = static_cast<double>(rng()) / 4294967296.0;
    }
    return out;
}

} // namespace oracle

#include "gam/trajectory.hpp"

#include <cmath>
#include <iostream>

#include "gam/ccns.hpp"
#include "gam/homophily.hpp"

namespace gam {

std::optional<double> pearson_correlation(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = std::min(x.size(), y.size());
    if (n < 3) {
        return std::nullopt;
    }
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_x += x[i];
        mean_y += y[i];
    }
    mean_x /= static_cast<double>(n);
    mean_y /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mean_x;
        const double dy = y[i] - mean_y;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        return std::nullopt; // constant series
    }
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

TrajectoryAnalysis analyze_trajectory(const SnapshotSequence& seq, const NodeLabels& labels,
                                      const TrajectoryOptions& options, const NodeList* restrict_to) {
    if (labels.num_nodes() != seq.num_nodes) {
        throw InputError("label count does not match snapshot node count");
    }
    const bool classification = labels.kind() == LabelKind::Classification;

    TrajectoryAnalysis out;
    std::vector<double> metric_series;
    std::vector<double> perf_series;

    for (const auto& snap : seq.snapshots) {
        const bool weighted = std::holds_alternative<WeightedGraph>(snap.graph);

        HomophilyResult h;
        std::string metric_name;
        if (weighted) {
            const auto& g = std::get<WeightedGraph>(snap.graph);
            h = classification ? continuous_homophily(g, labels, restrict_to)
                               : continuous_regression_homophily(g, labels, restrict_to);
            metric_name = classification ? "hcont" : "hreg_cont";
        } else {
            const auto& g = std::get<DiscreteGraph>(snap.graph);
            h = classification ? node_homophily(g, labels, options.hops, restrict_to)
                               : regression_homophily(g, labels, options.hops, restrict_to);
            metric_name = classification ? "node_homophily" : "hreg";
        }

        MetricRecord rec;
        rec.step = snap.step;
        rec.metric = metric_name;
        rec.k = weighted ? 1 : options.hops;
        rec.mean = h.mean;
        rec.stddev = h.stddev;
        rec.excluded = h.num_excluded;
        rec.performance = snap.performance;
        out.per_step.push_back(rec);

        if (classification && options.with_ccns) {
            try {
                const CcnsMatrix m =
                    weighted ? ccns_matrix(std::get<WeightedGraph>(snap.graph), labels, restrict_to)
                             : ccns_matrix(std::get<DiscreteGraph>(snap.graph), labels, options.hops,
                                           restrict_to);
                MetricRecord crec;
                crec.step = snap.step;
                crec.metric = weighted ? "ccns_cont" : "ccns";
                crec.k = weighted ? 1 : options.hops;
                crec.num_classes = m.num_classes;
                crec.d_ccns = ccns_distance(m);
                crec.excluded = m.zero_histogram_nodes;
                crec.performance = snap.performance;
                out.per_step.push_back(crec);
            } catch (const InputError& e) {
                std::cerr << "warning: skipping ccns at step " << snap.step << ": " << e.what() << "\n";
            }
        }

        if (snap.performance) {
            metric_series.push_back(h.mean);
            perf_series.push_back(options.lower_is_better ? -*snap.performance : *snap.performance);
            ++out.steps_with_performance;
        }
    }

    out.pearson = pearson_correlation(metric_series, perf_series);
    if (out.pearson) {
        out.direction = *out.pearson > 0.0 ? 1 : (*out.pearson < 0.0 ? -1 : 0);
    }
    return out;
}

} // namespace gam

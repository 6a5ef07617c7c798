#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gam/io.hpp"
#include "gam/labels.hpp"

namespace gam {

// Pearson correlation coefficient; nullopt when fewer than 3 points or
// either series is constant (the undefined cases).
std::optional<double> pearson_correlation(std::span<const double> x, std::span<const double> y);

struct TrajectoryOptions {
    int hops = 1;                 // discrete snapshots only
    bool lower_is_better = false; // error-like performance: correlate against -perf
    bool with_ccns = true;        // classification only; skipped when a class is empty
};

// Per-step metric records plus the correlation between the primary metric's
// mean series and the performance series. The primary metric is homophily
// (its continuous form for weighted snapshots); pearson is computed over
// steps that carry a performance value and is undefined for fewer than 3
// such steps or constant series.
struct TrajectoryAnalysis {
    std::vector<MetricRecord> per_step;
    std::optional<double> pearson;
    int direction = 0; // sign of pearson, 0 when undefined
    std::size_t steps_with_performance = 0;
};

TrajectoryAnalysis analyze_trajectory(const SnapshotSequence& seq, const NodeLabels& labels,
                                      const TrajectoryOptions& options = {},
                                      const NodeList* restrict_to = nullptr);

} // namespace gam

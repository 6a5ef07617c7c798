#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "gam/graph.hpp"
#include "gam/labels.hpp"

namespace gam {

// Plain-text formats, all 0-indexed and whitespace-separated:
//   edge list:   first line node count, then "u v" per line
//   triplets:    first line node count, then "u v w" per line
//   dense:       first line node count, then n rows of n reals
//                (symmetric within 1e-9, zero diagonal)
//   labels:      one value per line, line i = node i
//   splits:      one of train|val|test|none per line
// Malformed input always raises InputError with a line number; a parser
// never returns a partial result.

enum class WeightedLayout { Triplets, Dense };

DiscreteGraph parse_edge_list(std::istream& in);
WeightedGraph parse_weighted_matrix(std::istream& in, WeightedLayout layout);
NodeLabels parse_labels(std::istream& in, LabelKind kind);
SplitMask parse_splits(std::istream& in);

void write_edge_list(std::ostream& out, const DiscreteGraph& g);
void write_weighted_triplets(std::ostream& out, const WeightedGraph& g);
void write_labels(std::ostream& out, const NodeLabels& labels);

// Training-time snapshots: "step <idx> graph <path> [perf <real>]" per
// manifest line, graph paths relative to base_dir. Step indices must be
// strictly increasing and all graphs must agree on the node count.
enum class SnapshotGraphKind { Discrete, WeightedTriplets, WeightedDense };

struct Snapshot {
    std::size_t step = 0;
    std::variant<DiscreteGraph, WeightedGraph> graph;
    std::optional<double> performance;
};

struct SnapshotSequence {
    NodeId num_nodes = 0;
    std::vector<Snapshot> snapshots;
};

SnapshotSequence parse_snapshot_sequence(std::istream& manifest, const std::filesystem::path& base_dir,
                                         SnapshotGraphKind kind);

// One report record per (metric, k, split) — or per step for trajectories.
// Absent fields are omitted (JSON lines) or left empty (CSV). Numbers are
// rendered with 6 significant digits; field order is fixed.
struct MetricRecord {
    std::optional<std::size_t> step;
    std::string metric;
    std::optional<int> k;
    std::string split = "all";
    std::optional<double> mean;
    std::optional<double> stddev;
    std::optional<std::size_t> excluded;
    std::optional<int> num_classes;
    std::optional<double> d_ccns;
    std::optional<double> performance;
    bool has_pearson_slot = false; // trajectory summary rows render pearson even when undefined
    std::optional<double> pearson;
    std::optional<int> direction;
    std::optional<std::vector<double>> matrix; // row-major num_classes^2
};

enum class ReportFormat { JsonLines, Csv };

void write_report(std::ostream& out, std::span<const MetricRecord> records, ReportFormat format);

// "%.6g" rendering used by reports.
std::string format_number(double value);

} // namespace gam

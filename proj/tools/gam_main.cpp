// gam: graph assessment metrics CLI
//
// Subcommands: evaluate, trajectory, synth, knn, gradcheck.
// Exit codes: 0 success, 1 input error, 2 internal invariant violation
// (including a failed gradient check).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "gam/ccns.hpp"
#include "gam/gradients.hpp"
#include "gam/homophily.hpp"
#include "gam/io.hpp"
#include "gam/parallel.hpp"
#include "gam/synthetic.hpp"
#include "gam/trajectory.hpp"

namespace {

using namespace gam;

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot write '" + path + "'");
    }
    return out;
}

// Writes to --out when given, stdout otherwise.
void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        open_output(out_path) << payload;
    }
}

ReportFormat parse_format(const std::string& name) {
    if (name == "jsonl") {
        return ReportFormat::JsonLines;
    }
    if (name == "csv") {
        return ReportFormat::Csv;
    }
    throw InputError("unknown format '" + name + "'");
}

struct SplitSubsets {
    // evaluation subsets in output order: "all" plus each nonempty split
    std::vector<std::pair<std::string, std::optional<NodeList>>> entries;
};

SplitSubsets make_subsets(const std::optional<SplitMask>& mask) {
    SplitSubsets s;
    s.entries.emplace_back("all", std::nullopt);
    if (mask) {
        for (Split split : {Split::Train, Split::Val, Split::Test}) {
            NodeList members = mask->members(split);
            if (!members.empty()) {
                s.entries.emplace_back(split_name(split), std::move(members));
            }
        }
    }
    return s;
}

void check_counts(NodeId graph_nodes, const NodeLabels& labels, const std::optional<SplitMask>& mask) {
    if (labels.num_nodes() != graph_nodes) {
        throw InputError("label count " + std::to_string(labels.num_nodes()) +
                         " does not match graph node count " + std::to_string(graph_nodes));
    }
    if (mask && mask->num_nodes() != graph_nodes) {
        throw InputError("split count " + std::to_string(mask->num_nodes()) +
                         " does not match graph node count " + std::to_string(graph_nodes));
    }
}

struct EvaluateArgs {
    std::string graph_path, labels_path, splits_path, out_path;
    std::string task = "classification";
    std::string format = "jsonl";
    std::string layout = "triplets";
    bool weighted = false;
    int k_max = 1;
};

int run_evaluate(const EvaluateArgs& a) {
    const LabelKind kind = a.task == "regression" ? LabelKind::Regression : LabelKind::Classification;
    auto labels_in = open_input(a.labels_path);
    const NodeLabels labels = parse_labels(labels_in, kind);

    std::optional<SplitMask> mask;
    if (!a.splits_path.empty()) {
        auto splits_in = open_input(a.splits_path);
        mask = parse_splits(splits_in);
    }
    if (a.k_max < 1) {
        throw InputError("--k-max must be >= 1");
    }

    std::vector<MetricRecord> records;
    auto push_homophily = [&](const std::string& metric, int k, const std::string& split,
                              const HomophilyResult& h) {
        MetricRecord rec;
        rec.metric = metric;
        rec.k = k;
        rec.split = split;
        rec.mean = h.mean;
        rec.stddev = h.stddev;
        rec.excluded = h.num_excluded;
        records.push_back(std::move(rec));
    };
    auto push_ccns = [&](const std::string& metric, int k, const std::string& split, const CcnsMatrix& m) {
        MetricRecord rec;
        rec.metric = metric;
        rec.k = k;
        rec.split = split;
        rec.num_classes = m.num_classes;
        rec.matrix = m.values;
        rec.d_ccns = ccns_distance(m);
        rec.excluded = m.zero_histogram_nodes;
        records.push_back(std::move(rec));
    };

    if (a.weighted) {
        if (a.k_max > 1) {
            throw InputError("weighted k-hop metrics are not defined; use --k-max 1");
        }
        auto graph_in = open_input(a.graph_path);
        const WeightedGraph g = parse_weighted_matrix(
            graph_in, a.layout == "dense" ? WeightedLayout::Dense : WeightedLayout::Triplets);
        check_counts(g.num_nodes(), labels, mask);
        const SplitSubsets subsets = make_subsets(mask);
        for (const auto& [split, subset] : subsets.entries) {
            const NodeList* restrict_to = subset ? &*subset : nullptr;
            if (kind == LabelKind::Classification) {
                push_homophily("hcont", 1, split, continuous_homophily(g, labels, restrict_to));
                try {
                    push_ccns("ccns_cont", 1, split, ccns_matrix(g, labels, restrict_to));
                } catch (const InputError& e) {
                    std::cerr << "warning: skipping ccns_cont for split '" << split << "': " << e.what()
                              << "\n";
                }
            } else {
                push_homophily("hreg_cont", 1, split,
                               continuous_regression_homophily(g, labels, restrict_to));
            }
        }
    } else {
        auto graph_in = open_input(a.graph_path);
        const DiscreteGraph g = parse_edge_list(graph_in);
        check_counts(g.num_nodes(), labels, mask);
        const SplitSubsets subsets = make_subsets(mask);
        for (int k = 1; k <= a.k_max; ++k) {
            for (const auto& [split, subset] : subsets.entries) {
                const NodeList* restrict_to = subset ? &*subset : nullptr;
                if (kind == LabelKind::Classification) {
                    push_homophily("node_homophily", k, split, node_homophily(g, labels, k, restrict_to));
                    try {
                        push_ccns("ccns", k, split, ccns_matrix(g, labels, k, restrict_to));
                    } catch (const InputError& e) {
                        std::cerr << "warning: skipping ccns for split '" << split << "' at k=" << k
                                  << ": " << e.what() << "\n";
                    }
                } else {
                    push_homophily("hreg", k, split, regression_homophily(g, labels, k, restrict_to));
                }
            }
        }
    }

    std::ostringstream payload;
    write_report(payload, records, parse_format(a.format));
    emit(a.out_path, payload.str());
    return 0;
}

struct TrajectoryArgs {
    std::string manifest_path, labels_path, splits_path, out_path;
    std::string task = "classification";
    std::string format = "jsonl";
    std::string layout = "triplets";
    std::string split = "all";
    bool weighted = false;
    bool lower_is_better = false;
    bool no_ccns = false;
    int hops = 1;
};

int run_trajectory(const TrajectoryArgs& a) {
    const LabelKind kind = a.task == "regression" ? LabelKind::Regression : LabelKind::Classification;
    auto labels_in = open_input(a.labels_path);
    const NodeLabels labels = parse_labels(labels_in, kind);

    auto manifest_in = open_input(a.manifest_path);
    const auto base_dir = std::filesystem::path(a.manifest_path).parent_path();
    const SnapshotGraphKind gkind = !a.weighted ? SnapshotGraphKind::Discrete
                                    : (a.layout == "dense" ? SnapshotGraphKind::WeightedDense
                                                           : SnapshotGraphKind::WeightedTriplets);
    const SnapshotSequence seq = parse_snapshot_sequence(manifest_in, base_dir, gkind);
    if (labels.num_nodes() != seq.num_nodes) {
        throw InputError("label count does not match snapshot node count");
    }

    std::optional<NodeList> subset;
    if (a.split != "all") {
        if (a.splits_path.empty()) {
            throw InputError("--split requires --splits");
        }
        auto splits_in = open_input(a.splits_path);
        const SplitMask mask = parse_splits(splits_in);
        if (mask.num_nodes() != seq.num_nodes) {
            throw InputError("split count does not match snapshot node count");
        }
        Split s;
        if (a.split == "train") {
            s = Split::Train;
        } else if (a.split == "val") {
            s = Split::Val;
        } else if (a.split == "test") {
            s = Split::Test;
        } else {
            throw InputError("unknown split '" + a.split + "'");
        }
        subset = mask.members(s);
        if (subset->empty()) {
            throw InputError("split '" + a.split + "' has no members");
        }
    }

    TrajectoryOptions options;
    options.hops = a.hops;
    options.lower_is_better = a.lower_is_better;
    options.with_ccns = !a.no_ccns;
    TrajectoryAnalysis analysis =
        analyze_trajectory(seq, labels, options, subset ? &*subset : nullptr);

    std::vector<MetricRecord> records = std::move(analysis.per_step);
    for (auto& rec : records) {
        rec.split = a.split;
    }
    MetricRecord summary;
    summary.metric = records.empty() ? std::string("homophily") : records.front().metric;
    summary.k = a.hops;
    summary.split = a.split;
    summary.has_pearson_slot = true;
    summary.pearson = analysis.pearson;
    summary.direction = analysis.direction;
    records.push_back(std::move(summary));

    std::ostringstream payload;
    write_report(payload, records, parse_format(a.format));
    emit(a.out_path, payload.str());
    return 0;
}

struct SynthArgs {
    std::string out_prefix;
    std::string task = "classification";
    int nodes = 0;
    int features = 50;
    int informative = 5;
    int classes = 2;
    int knn_k = 5;
    std::uint64_t seed = 0;
};

int run_synth(const SynthArgs& a) {
    SyntheticSpec spec;
    spec.num_nodes = a.nodes;
    spec.num_features = a.features;
    spec.num_informative = a.informative;
    spec.regression = a.task == "regression";
    spec.num_classes = a.classes;
    spec.knn_k = a.knn_k;
    spec.seed = a.seed;
    const SyntheticDataset data = generate_synthetic(spec);

    const std::string features_path = a.out_prefix + ".features.txt";
    const std::string labels_path = a.out_prefix + ".labels.txt";
    const std::string graph_path = a.out_prefix + ".graph.txt";
    {
        auto out = open_output(features_path);
        write_features(out, data.features, spec.num_nodes, spec.num_features);
    }
    {
        auto out = open_output(labels_path);
        write_labels(out, data.labels);
    }
    {
        auto out = open_output(graph_path);
        write_edge_list(out, data.graph);
    }
    std::cout << features_path << "\n" << labels_path << "\n" << graph_path << "\n";
    return 0;
}

struct KnnArgs {
    std::string features_path, out_path;
    int k = 5;
};

int run_knn(const KnnArgs& a) {
    auto in = open_input(a.features_path);
    NodeId num_nodes = 0;
    int num_features = 0;
    const std::vector<double> features = parse_features(in, num_nodes, num_features);
    const DiscreteGraph g = knn_graph(features, num_nodes, num_features, a.k);
    std::ostringstream payload;
    write_edge_list(payload, g);
    emit(a.out_path, payload.str());
    return 0;
}

struct GradcheckArgs {
    std::string graph_path, labels_path, out_path;
    std::string task = "classification";
    std::string layout = "triplets";
    double step = 1e-6;
    double tolerance = 1e-6;
};

int run_gradcheck(const GradcheckArgs& a) {
    const LabelKind kind = a.task == "regression" ? LabelKind::Regression : LabelKind::Classification;
    auto labels_in = open_input(a.labels_path);
    const NodeLabels labels = parse_labels(labels_in, kind);
    auto graph_in = open_input(a.graph_path);
    const WeightedGraph g = parse_weighted_matrix(
        graph_in, a.layout == "dense" ? WeightedLayout::Dense : WeightedLayout::Triplets);
    if (labels.num_nodes() != g.num_nodes()) {
        throw InputError("label count does not match graph node count");
    }
    const WeightedMetricId metric =
        kind == LabelKind::Regression ? WeightedMetricId::HRegCont : WeightedMetricId::HCont;
    const FiniteDifferenceReport report = finite_difference_check(g, labels, metric, a.step);

    std::ostringstream payload;
    payload << "metric " << weighted_metric_name(metric) << " edges " << report.num_edges
            << " max_rel_error " << format_number(report.max_rel_error) << " mean_rel_error "
            << format_number(report.mean_rel_error) << " gradient_scale "
            << format_number(report.gradient_scale) << " worst_edge " << report.worst_edge.first << " "
            << report.worst_edge.second << " clamped_steps " << report.clamped_steps << "\n";
    emit(a.out_path, payload.str());
    if (report.max_rel_error > a.tolerance) {
        std::cerr << "gradient check failed: max relative error " << format_number(report.max_rel_error)
                  << " exceeds tolerance " << format_number(a.tolerance) << "\n";
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph assessment metrics: homophily and cross-class neighbourhood similarity "
                 "for discrete and weighted graphs"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker thread count (0 = auto)");

    EvaluateArgs ev;
    auto* evaluate = app.add_subcommand("evaluate", "compute metrics per split");
    evaluate->add_option("--graph", ev.graph_path, "graph file")->required();
    evaluate->add_flag("--weighted", ev.weighted, "graph file holds a weighted matrix");
    evaluate->add_option("--layout", ev.layout, "weighted layout: triplets|dense")
        ->check(CLI::IsMember({"triplets", "dense"}));
    evaluate->add_option("--labels", ev.labels_path, "labels file")->required();
    evaluate->add_option("--task", ev.task, "classification|regression")
        ->check(CLI::IsMember({"classification", "regression"}));
    evaluate->add_option("--splits", ev.splits_path, "splits file");
    evaluate->add_option("--k-max", ev.k_max, "evaluate hops 1..k_max (discrete graphs)");
    evaluate->add_option("--format", ev.format, "jsonl|csv")->check(CLI::IsMember({"jsonl", "csv"}));
    evaluate->add_option("--out", ev.out_path, "output file (default stdout)");

    TrajectoryArgs tr;
    auto* trajectory = app.add_subcommand("trajectory", "metrics over training snapshots");
    trajectory->add_option("--manifest", tr.manifest_path, "snapshot manifest")->required();
    trajectory->add_flag("--weighted", tr.weighted, "snapshots hold weighted matrices");
    trajectory->add_option("--layout", tr.layout, "weighted layout: triplets|dense")
        ->check(CLI::IsMember({"triplets", "dense"}));
    trajectory->add_option("--labels", tr.labels_path, "labels file")->required();
    trajectory->add_option("--task", tr.task, "classification|regression")
        ->check(CLI::IsMember({"classification", "regression"}));
    trajectory->add_option("--splits", tr.splits_path, "splits file");
    trajectory->add_option("--split", tr.split, "evaluate on: all|train|val|test");
    trajectory->add_option("--k", tr.hops, "hop count (discrete snapshots)");
    trajectory->add_flag("--lower-is-better", tr.lower_is_better,
                         "performance is error-like; correlate against its negation");
    trajectory->add_flag("--no-ccns", tr.no_ccns, "skip per-step CCNS distance");
    trajectory->add_option("--format", tr.format, "jsonl|csv")->check(CLI::IsMember({"jsonl", "csv"}));
    trajectory->add_option("--out", tr.out_path, "output file (default stdout)");

    SynthArgs sy;
    auto* synth = app.add_subcommand("synth", "generate a synthetic population-graph dataset");
    synth->add_option("--nodes", sy.nodes, "node count")->required();
    synth->add_option("--features", sy.features, "feature count");
    synth->add_option("--informative", sy.informative, "informative feature count");
    synth->add_option("--task", sy.task, "classification|regression")
        ->check(CLI::IsMember({"classification", "regression"}));
    synth->add_option("--classes", sy.classes, "class count (classification)");
    synth->add_option("--knn-k", sy.knn_k, "kNN neighbor count for the graph");
    synth->add_option("--seed", sy.seed, "random seed");
    synth->add_option("--out-prefix", sy.out_prefix, "output path prefix")->required();

    KnnArgs kn;
    auto* knn = app.add_subcommand("knn", "build a kNN graph from a feature table");
    knn->add_option("--features", kn.features_path, "feature table, one row per node")->required();
    knn->add_option("--k", kn.k, "neighbor count");
    knn->add_option("--out", kn.out_path, "output edge list (default stdout)");

    GradcheckArgs gc;
    auto* gradcheck = app.add_subcommand("gradcheck", "verify analytic metric gradients");
    gradcheck->add_option("--graph", gc.graph_path, "weighted graph file")->required();
    gradcheck->add_option("--layout", gc.layout, "weighted layout: triplets|dense")
        ->check(CLI::IsMember({"triplets", "dense"}));
    gradcheck->add_option("--labels", gc.labels_path, "labels file")->required();
    gradcheck->add_option("--task", gc.task, "classification|regression")
        ->check(CLI::IsMember({"classification", "regression"}));
    gradcheck->add_option("--step", gc.step, "finite-difference step");
    gradcheck->add_option("--tol", gc.tolerance, "max relative error tolerance");
    gradcheck->add_option("--out", gc.out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
            return app.exit(e);
        }
        std::cerr << e.what() << "\n";
        return 1;
    }

    try {
        gam::set_num_threads(threads);
        if (evaluate->parsed()) {
            return run_evaluate(ev);
        }
        if (trajectory->parsed()) {
            return run_trajectory(tr);
        }
        if (synth->parsed()) {
            return run_synth(sy);
        }
        if (knn->parsed()) {
            return run_knn(kn);
        }
        if (gradcheck->parsed()) {
            return run_gradcheck(gc);
        }
    } catch (const gam::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

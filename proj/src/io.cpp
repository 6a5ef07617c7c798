#include "gam/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace gam {

namespace {

struct LineReader {
    std::istream& in;
    std::size_t line_number = 0;

    // Next non-blank line split into tokens; false at end of input.
    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_number;
            tokens.clear();
            std::istringstream ss(line);
            std::string tok;
            while (ss >> tok) {
                tokens.push_back(tok);
            }
            if (!tokens.empty()) {
                return true;
            }
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw InputError(what + " at line " + std::to_string(line_number));
    }
};

long long parse_int(const std::string& tok, LineReader& r) {
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        r.fail("expected an integer, got '" + tok + "'");
    }
    return value;
}

double parse_real(const std::string& tok, LineReader& r) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        r.fail("expected a number, got '" + tok + "'");
    }
    if (!std::isfinite(value)) {
        r.fail("non-finite value '" + tok + "'");
    }
    return value;
}

NodeId parse_header_count(LineReader& r) {
    std::vector<std::string> tokens;
    if (!r.next(tokens)) {
        throw InputError("empty input: expected a node count header");
    }
    if (tokens.size() != 1) {
        r.fail("expected a single node count");
    }
    const long long n = parse_int(tokens[0], r);
    if (n < 0 || n > std::numeric_limits<NodeId>::max()) {
        r.fail("invalid node count " + tokens[0]);
    }
    return static_cast<NodeId>(n);
}

NodeId parse_node_id(const std::string& tok, NodeId num_nodes, LineReader& r) {
    const long long id = parse_int(tok, r);
    if (id < 0 || id >= num_nodes) {
        r.fail("node id " + tok + " out of range [0, " + std::to_string(num_nodes) + ")");
    }
    return static_cast<NodeId>(id);
}

} // namespace

DiscreteGraph parse_edge_list(std::istream& in) {
    LineReader r{in};
    const NodeId n = parse_header_count(r);
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::vector<std::string> tokens;
    while (r.next(tokens)) {
        if (tokens.size() != 2) {
            r.fail("expected 'u v'");
        }
        edges.emplace_back(parse_node_id(tokens[0], n, r), parse_node_id(tokens[1], n, r));
    }
    return build_discrete_graph(n, edges);
}

WeightedGraph parse_weighted_matrix(std::istream& in, WeightedLayout layout) {
    LineReader r{in};
    const NodeId n = parse_header_count(r);
    std::vector<std::string> tokens;

    if (layout == WeightedLayout::Triplets) {
        std::vector<WeightedEdge> entries;
        while (r.next(tokens)) {
            if (tokens.size() != 3) {
                r.fail("expected 'u v w'");
            }
            WeightedEdge e;
            e.u = parse_node_id(tokens[0], n, r);
            e.v = parse_node_id(tokens[1], n, r);
            e.weight = parse_real(tokens[2], r);
            if (e.weight < 0.0) {
                r.fail("negative weight " + tokens[2]);
            }
            entries.push_back(e);
        }
        return build_weighted_graph(n, entries);
    }

    constexpr double kSymmetryTolerance = 1e-9;
    std::vector<double> dense(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (NodeId i = 0; i < n; ++i) {
        if (!r.next(tokens)) {
            throw InputError("dense matrix ends early: expected " + std::to_string(n) + " rows");
        }
        if (tokens.size() != static_cast<std::size_t>(n)) {
            r.fail("expected " + std::to_string(n) + " entries in row " + std::to_string(i));
        }
        for (NodeId j = 0; j < n; ++j) {
            const double w = parse_real(tokens[static_cast<std::size_t>(j)], r);
            if (w < 0.0) {
                r.fail("negative entry " + tokens[static_cast<std::size_t>(j)]);
            }
            dense[static_cast<std::size_t>(i) * n + j] = w;
        }
        if (std::abs(dense[static_cast<std::size_t>(i) * n + i]) > kSymmetryTolerance) {
            r.fail("nonzero diagonal entry at row " + std::to_string(i));
        }
    }
    std::vector<WeightedEdge> entries;
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
            const double a = dense[static_cast<std::size_t>(i) * n + j];
            const double b = dense[static_cast<std::size_t>(j) * n + i];
            if (std::abs(a - b) > kSymmetryTolerance) {
                throw InputError("asymmetric entries at (" + std::to_string(i) + ", " + std::to_string(j) +
                                 "): " + format_number(a) + " vs " + format_number(b));
            }
            const double w = (a + b) / 2.0;
            if (w > 0.0) {
                entries.push_back({i, j, w});
            }
        }
    }
    return build_weighted_graph(n, entries);
}

NodeLabels parse_labels(std::istream& in, LabelKind kind) {
    LineReader r{in};
    std::vector<std::string> tokens;
    if (kind == LabelKind::Classification) {
        std::vector<ClassId> ids;
        while (r.next(tokens)) {
            if (tokens.size() != 1) {
                r.fail("expected one class id per line");
            }
            const long long id = parse_int(tokens[0], r);
            if (id < 0 || id > std::numeric_limits<ClassId>::max()) {
                r.fail("invalid class id " + tokens[0]);
            }
            ids.push_back(static_cast<ClassId>(id));
        }
        if (ids.empty()) {
            throw InputError("label file is empty");
        }
        return NodeLabels::classification(std::move(ids));
    }
    std::vector<double> raw;
    while (r.next(tokens)) {
        if (tokens.size() != 1) {
            r.fail("expected one value per line");
        }
        raw.push_back(parse_real(tokens[0], r));
    }
    if (raw.empty()) {
        throw InputError("label file is empty");
    }
    return NodeLabels::regression(std::move(raw));
}

SplitMask parse_splits(std::istream& in) {
    LineReader r{in};
    std::vector<std::string> tokens;
    std::vector<Split> tags;
    while (r.next(tokens)) {
        if (tokens.size() != 1) {
            r.fail("expected one split tag per line");
        }
        const std::string& t = tokens[0];
        if (t == "train") {
            tags.push_back(Split::Train);
        } else if (t == "val") {
            tags.push_back(Split::Val);
        } else if (t == "test") {
            tags.push_back(Split::Test);
        } else if (t == "none") {
            tags.push_back(Split::None);
        } else {
            r.fail("unknown split tag '" + t + "'");
        }
    }
    return SplitMask(std::move(tags));
}

void write_edge_list(std::ostream& out, const DiscreteGraph& g) {
    out << g.num_nodes() << "\n";
    for (const auto& [u, v] : g.edge_list()) {
        out << u << " " << v << "\n";
    }
}

void write_weighted_triplets(std::ostream& out, const WeightedGraph& g) {
    char buf[32];
    out << g.num_nodes() << "\n";
    for (const auto& e : g.edge_list()) {
        std::snprintf(buf, sizeof(buf), "%.17g", e.weight);
        out << e.u << " " << e.v << " " << buf << "\n";
    }
}

void write_labels(std::ostream& out, const NodeLabels& labels) {
    if (labels.kind() == LabelKind::Classification) {
        for (ClassId c : labels.class_ids()) {
            out << c << "\n";
        }
        return;
    }
    char buf[32];
    for (double v : labels.raw_values()) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        out << buf << "\n";
    }
}

SnapshotSequence parse_snapshot_sequence(std::istream& manifest, const std::filesystem::path& base_dir,
                                         SnapshotGraphKind kind) {
    LineReader r{manifest};
    std::vector<std::string> tokens;
    SnapshotSequence seq;
    bool first = true;
    long long prev_step = -1;
    while (r.next(tokens)) {
        if (tokens.size() != 4 && tokens.size() != 6) {
            r.fail("expected 'step <idx> graph <path> [perf <real>]'");
        }
        if (tokens[0] != "step" || tokens[2] != "graph" || (tokens.size() == 6 && tokens[4] != "perf")) {
            r.fail("expected 'step <idx> graph <path> [perf <real>]'");
        }
        const long long step = parse_int(tokens[1], r);
        if (step < 0) {
            r.fail("negative step index");
        }
        if (step == prev_step) {
            r.fail("duplicate step index " + tokens[1]);
        }
        if (step < prev_step) {
            r.fail("step indices must be strictly increasing");
        }
        prev_step = step;

        const std::filesystem::path path = base_dir / tokens[3];
        std::ifstream file(path);
        if (!file) {
            r.fail("cannot open graph file '" + path.string() + "'");
        }
        Snapshot snap;
        snap.step = static_cast<std::size_t>(step);
        NodeId nodes;
        if (kind == SnapshotGraphKind::Discrete) {
            auto g = parse_edge_list(file);
            nodes = g.num_nodes();
            snap.graph = std::move(g);
        } else {
            auto g = parse_weighted_matrix(file, kind == SnapshotGraphKind::WeightedTriplets
                                                     ? WeightedLayout::Triplets
                                                     : WeightedLayout::Dense);
            nodes = g.num_nodes();
            snap.graph = std::move(g);
        }
        if (tokens.size() == 6) {
            snap.performance = parse_real(tokens[5], r);
        }
        if (first) {
            seq.num_nodes = nodes;
            first = false;
        } else if (nodes != seq.num_nodes) {
            r.fail("snapshot node count " + std::to_string(nodes) + " differs from " +
                   std::to_string(seq.num_nodes));
        }
        seq.snapshots.push_back(std::move(snap));
    }
    if (seq.snapshots.empty()) {
        throw InputError("snapshot manifest is empty");
    }
    return seq;
}

std::string format_number(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

namespace {

// Fixed field order shared by both formats.
constexpr const char* kColumns[] = {"step", "metric",  "k",      "split",   "mean",      "std",   "excluded",
                                    "classes", "d_ccns", "perf", "pearson", "direction", "matrix"};

std::string matrix_cell(const std::vector<double>& m, char sep) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i > 0) {
            out += sep;
        }
        out += format_number(m[i]);
    }
    return out;
}

void write_jsonl(std::ostream& out, const MetricRecord& rec) {
    out << '{';
    bool first = true;
    auto emit = [&](const char* key, const std::string& value, bool quoted) {
        if (!first) {
            out << ',';
        }
        first = false;
        out << '"' << key << "\":";
        if (quoted) {
            out << '"' << value << '"';
        } else {
            out << value;
        }
    };
    if (rec.step) {
        emit("step", std::to_string(*rec.step), false);
    }
    emit("metric", rec.metric, true);
    if (rec.k) {
        emit("k", std::to_string(*rec.k), false);
    }
    emit("split", rec.split, true);
    if (rec.mean) {
        emit("mean", format_number(*rec.mean), false);
    }
    if (rec.stddev) {
        emit("std", format_number(*rec.stddev), false);
    }
    if (rec.excluded) {
        emit("excluded", std::to_string(*rec.excluded), false);
    }
    if (rec.num_classes) {
        emit("classes", std::to_string(*rec.num_classes), false);
    }
    if (rec.d_ccns) {
        emit("d_ccns", format_number(*rec.d_ccns), false);
    }
    if (rec.performance) {
        emit("perf", format_number(*rec.performance), false);
    }
    if (rec.has_pearson_slot) {
        emit("pearson", rec.pearson ? format_number(*rec.pearson) : "null", false);
        emit("direction", std::to_string(rec.direction.value_or(0)), false);
    }
    if (rec.matrix) {
        emit("matrix", "[" + matrix_cell(*rec.matrix, ',') + "]", false);
    }
    out << "}\n";
}

void write_csv_row(std::ostream& out, const MetricRecord& rec) {
    auto cell = [](const auto& opt, auto&& fmt) { return opt ? fmt(*opt) : std::string(); };
    const std::string cells[] = {
        cell(rec.step, [](std::size_t s) { return std::to_string(s); }),
        rec.metric,
        cell(rec.k, [](int k) { return std::to_string(k); }),
        rec.split,
        cell(rec.mean, format_number),
        cell(rec.stddev, format_number),
        cell(rec.excluded, [](std::size_t e) { return std::to_string(e); }),
        cell(rec.num_classes, [](int c) { return std::to_string(c); }),
        cell(rec.d_ccns, format_number),
        cell(rec.performance, format_number),
        cell(rec.pearson, format_number),
        rec.has_pearson_slot ? std::to_string(rec.direction.value_or(0)) : std::string(),
        rec.matrix ? matrix_cell(*rec.matrix, ';') : std::string(),
    };
    for (std::size_t i = 0; i < std::size(cells); ++i) {
        if (i > 0) {
            out << ',';
        }
        out << cells[i];
    }
    out << "\n";
}

} // namespace

void write_report(std::ostream& out, std::span<const MetricRecord> records, ReportFormat format) {
    if (format == ReportFormat::Csv) {
        for (std::size_t i = 0; i < std::size(kColumns); ++i) {
            if (i > 0) {
                out << ',';
            }
            out << kColumns[i];
        }
        out << "\n";
    }
    for (const auto& rec : records) {
        if (format == ReportFormat::Csv) {
            write_csv_row(out, rec);
        } else {
            write_jsonl(out, rec);
        }
    }
}

} // namespace gam

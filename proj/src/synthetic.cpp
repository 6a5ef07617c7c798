#include "gam/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "gam/parallel.hpp"

namespace gam {

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) {
        u1 = uniform();
    }
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

void SyntheticSpec::validate() const {
    if (num_nodes < 2) {
        throw InputError("synthetic spec requires at least 2 nodes");
    }
    if (num_features < 1 || num_informative < 1) {
        throw InputError("synthetic spec requires positive feature counts");
    }
    if (num_informative > num_features) {
        throw InputError("num_informative " + std::to_string(num_informative) +
                         " exceeds num_features " + std::to_string(num_features));
    }
    if (!regression && num_classes < 2) {
        throw InputError("classification spec requires at least 2 classes");
    }
    if (!regression && num_classes > num_nodes) {
        throw InputError("more classes than nodes");
    }
    if (knn_k < 1 || knn_k >= num_nodes) {
        throw InputError("knn_k must be in [1, num_nodes)");
    }
}

SyntheticDataset generate_synthetic(const SyntheticSpec& spec) {
    spec.validate();
    Rng rng(spec.seed);
    const std::size_t n = static_cast<std::size_t>(spec.num_nodes);
    const std::size_t f = static_cast<std::size_t>(spec.num_features);
    const std::size_t m = static_cast<std::size_t>(spec.num_informative);

    std::vector<double> features(n * f);

    std::vector<ClassId> class_ids;
    std::vector<double> raw_targets;
    std::vector<double> coeffs;
    double center_step = 0.0;
    if (spec.regression) {
        coeffs.resize(m);
        for (double& c : coeffs) {
            c = rng.normal();
        }
    } else {
        class_ids.resize(n);
        // adjacent class centers sit at Euclidean distance 4 in the
        // informative subspace: center_c = c * (4/sqrt(m)) * ones(m)
        center_step = 4.0 / std::sqrt(static_cast<double>(m));
    }

    for (std::size_t v = 0; v < n; ++v) {
        double* row = features.data() + v * f;
        if (spec.regression) {
            for (std::size_t j = 0; j < f; ++j) {
                row[j] = rng.normal();
            }
            double t = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                t += coeffs[j] * row[j];
            }
            raw_targets.push_back(t + 0.1 * rng.normal());
        } else {
            const ClassId c = static_cast<ClassId>(v % static_cast<std::size_t>(spec.num_classes));
            class_ids[v] = c;
            const double offset = static_cast<double>(c) * center_step;
            for (std::size_t j = 0; j < f; ++j) {
                row[j] = rng.normal() + (j < m ? offset : 0.0);
            }
        }
    }

    SyntheticDataset out{
        std::move(features),
        spec.regression ? NodeLabels::regression(std::move(raw_targets))
                        : NodeLabels::classification(std::move(class_ids), spec.num_classes),
        DiscreteGraph{},
    };
    out.graph = knn_graph(out.features, spec.num_nodes, spec.num_features, spec.knn_k);
    return out;
}

DiscreteGraph knn_graph(std::span<const double> features, NodeId num_nodes, int num_features, int k) {
    if (num_nodes < 2 || k < 1 || k >= num_nodes) {
        throw InputError("knn_graph requires 1 <= k < num_nodes and at least 2 nodes");
    }
    const std::size_t n = static_cast<std::size_t>(num_nodes);
    const std::size_t f = static_cast<std::size_t>(num_features);
    if (features.size() != n * f) {
        throw InputError("feature table size does not match num_nodes x num_features");
    }
    for (double x : features) {
        if (!std::isfinite(x)) {
            throw InputError("feature table contains a non-finite value");
        }
    }

    std::vector<std::pair<NodeId, NodeId>> edges(n * static_cast<std::size_t>(k));
    parallel_chunks(n, 128, [&](std::size_t begin, std::size_t end) {
        std::vector<std::pair<double, NodeId>> dist;
        dist.reserve(n - 1);
        for (std::size_t v = begin; v < end; ++v) {
            dist.clear();
            const double* row_v = features.data() + v * f;
            for (std::size_t u = 0; u < n; ++u) {
                if (u == v) {
                    continue;
                }
                const double* row_u = features.data() + u * f;
                double sq = 0.0;
                for (std::size_t j = 0; j < f; ++j) {
                    const double d = row_v[j] - row_u[j];
                    sq += d * d;
                }
                dist.emplace_back(sq, static_cast<NodeId>(u));
            }
            // (distance, id) ordering makes ties deterministic toward lower ids
            std::nth_element(dist.begin(), dist.begin() + (k - 1), dist.end());
            std::sort(dist.begin(), dist.begin() + k);
            for (int i = 0; i < k; ++i) {
                edges[v * static_cast<std::size_t>(k) + static_cast<std::size_t>(i)] = {
                    static_cast<NodeId>(v), dist[static_cast<std::size_t>(i)].second};
            }
        }
    });
    return build_discrete_graph(num_nodes, edges); // union symmetrization
}

void write_features(std::ostream& out, std::span<const double> features, NodeId num_nodes,
                    int num_features) {
    char buf[32];
    for (std::size_t v = 0; v < static_cast<std::size_t>(num_nodes); ++v) {
        for (std::size_t j = 0; j < static_cast<std::size_t>(num_features); ++j) {
            if (j > 0) {
                out << " ";
            }
            std::snprintf(buf, sizeof(buf), "%.17g",
                          features[v * static_cast<std::size_t>(num_features) + j]);
            out << buf;
        }
        out << "\n";
    }
}

std::vector<double> parse_features(std::istream& in, NodeId& num_nodes, int& num_features) {
    std::vector<double> features;
    std::string line;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        std::istringstream ss(line);
        std::vector<double> row;
        double x;
        while (ss >> x) {
            if (!std::isfinite(x)) {
                throw InputError("non-finite feature at line " + std::to_string(line_number));
            }
            row.push_back(x);
        }
        if (!ss.eof()) {
            throw InputError("malformed feature row at line " + std::to_string(line_number));
        }
        if (row.empty()) {
            continue;
        }
        if (rows == 0) {
            cols = row.size();
        } else if (row.size() != cols) {
            throw InputError("feature row at line " + std::to_string(line_number) + " has " +
                             std::to_string(row.size()) + " entries, expected " + std::to_string(cols));
        }
        features.insert(features.end(), row.begin(), row.end());
        ++rows;
    }
    if (rows == 0) {
        throw InputError("feature table is empty");
    }
    num_nodes = static_cast<NodeId>(rows);
    num_features = static_cast<int>(cols);
    return features;
}

} // namespace gam

#include "gam/labels.hpp"

#include <algorithm>
#include <cmath>

namespace gam {

NodeLabels NodeLabels::classification(std::vector<ClassId> ids) {
    ClassId max_id = -1;
    for (ClassId c : ids) {
        max_id = std::max(max_id, c);
    }
    return classification(std::move(ids), max_id + 1 > 1 ? max_id + 1 : 1);
}

NodeLabels NodeLabels::classification(std::vector<ClassId> ids, ClassId num_classes) {
    if (num_classes < 1) {
        throw InputError("num_classes must be >= 1");
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] < 0 || ids[i] >= num_classes) {
            throw InputError("class id " + std::to_string(ids[i]) + " of node " + std::to_string(i) +
                             " outside [0, " + std::to_string(num_classes) + ")");
        }
    }
    NodeLabels l;
    l.kind_ = LabelKind::Classification;
    l.num_nodes_ = static_cast<NodeId>(ids.size());
    l.num_classes_ = num_classes;
    l.class_ids_ = std::move(ids);
    return l;
}

NodeLabels NodeLabels::regression(std::vector<double> raw) {
    if (raw.empty()) {
        throw InputError("regression labels require at least one node");
    }
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (!std::isfinite(raw[i])) {
            throw InputError("non-finite regression label at node " + std::to_string(i));
        }
    }
    const auto [lo_it, hi_it] = std::minmax_element(raw.begin(), raw.end());
    const double lo = *lo_it, hi = *hi_it;
    NodeLabels l;
    l.kind_ = LabelKind::Regression;
    l.num_nodes_ = static_cast<NodeId>(raw.size());
    l.normalized_.resize(raw.size(), 0.0);
    if (hi > lo) {
        for (std::size_t i = 0; i < raw.size(); ++i) {
            l.normalized_[i] = (raw[i] - lo) / (hi - lo);
        }
    }
    l.raw_ = std::move(raw);
    return l;
}

NodeLabels NodeLabels::regression_prenormalized(std::vector<double> normalized) {
    if (normalized.empty()) {
        throw InputError("regression labels require at least one node");
    }
    for (std::size_t i = 0; i < normalized.size(); ++i) {
        if (!(normalized[i] >= 0.0 && normalized[i] <= 1.0)) {
            throw InputError("normalized label at node " + std::to_string(i) + " outside [0,1]");
        }
    }
    NodeLabels l;
    l.kind_ = LabelKind::Regression;
    l.num_nodes_ = static_cast<NodeId>(normalized.size());
    l.raw_ = normalized;
    l.normalized_ = std::move(normalized);
    return l;
}

ClassId NodeLabels::num_classes() const {
    require_kind(LabelKind::Classification, "num_classes");
    return num_classes_;
}

std::span<const ClassId> NodeLabels::class_ids() const {
    require_kind(LabelKind::Classification, "class_ids");
    return class_ids_;
}

std::span<const double> NodeLabels::raw_values() const {
    require_kind(LabelKind::Regression, "raw_values");
    return raw_;
}

std::span<const double> NodeLabels::normalized_values() const {
    require_kind(LabelKind::Regression, "normalized_values");
    return normalized_;
}

void NodeLabels::require_kind(LabelKind expected, const std::string& op) const {
    if (kind_ != expected) {
        throw InputError(op + " requires " +
                         (expected == LabelKind::Classification ? "classification" : "regression") +
                         " labels");
    }
}

NodeLabels normalize_regression_labels(std::vector<double> raw) {
    return NodeLabels::regression(std::move(raw));
}

const char* split_name(Split s) {
    switch (s) {
    case Split::Train: return "train";
    case Split::Val: return "val";
    case Split::Test: return "test";
    case Split::None: return "none";
    }
    return "?";
}

NodeList SplitMask::members(Split s) const {
    NodeList out;
    for (std::size_t v = 0; v < tags_.size(); ++v) {
        if (tags_[v] == s) {
            out.push_back(static_cast<NodeId>(v));
        }
    }
    return out;
}

std::size_t SplitMask::count(Split s) const {
    return static_cast<std::size_t>(std::count(tags_.begin(), tags_.end(), s));
}

} // namespace gam

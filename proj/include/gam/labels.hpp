#pragma once

#include <span>
#include <string>
#include <vector>

#include "gam/types.hpp"

namespace gam {

enum class LabelKind { Classification, Regression };

// Per-node targets: small-integer class ids, or scalar regression values kept
// both raw and min-max normalized to [0,1]. Immutable after construction.
class NodeLabels {
public:
    // num_classes = 1 + max id. Ids must be nonnegative.
    static NodeLabels classification(std::vector<ClassId> ids);
    static NodeLabels classification(std::vector<ClassId> ids, ClassId num_classes);

    // Min-max normalizes over all nodes; constant vectors map to all zeros.
    // NaN or infinite raw values are input errors.
    static NodeLabels regression(std::vector<double> raw);

    // For values already scaled to [0,1] (e.g. shared normalization across
    // snapshot sequences). Values outside [0,1] are input errors.
    static NodeLabels regression_prenormalized(std::vector<double> normalized);

    LabelKind kind() const { return kind_; }
    NodeId num_nodes() const { return num_nodes_; }

    ClassId num_classes() const;
    ClassId class_of(NodeId v) const { return class_ids_[static_cast<std::size_t>(v)]; }
    std::span<const ClassId> class_ids() const;

    std::span<const double> raw_values() const;
    std::span<const double> normalized_values() const;
    double normalized_of(NodeId v) const { return normalized_[static_cast<std::size_t>(v)]; }

    void require_kind(LabelKind expected, const std::string& op) const;

private:
    LabelKind kind_ = LabelKind::Classification;
    NodeId num_nodes_ = 0;
    ClassId num_classes_ = 0;
    std::vector<ClassId> class_ids_;
    std::vector<double> raw_;
    std::vector<double> normalized_;
};

// The spec's label normalization as a free function; equivalent to
// NodeLabels::regression.
NodeLabels normalize_regression_labels(std::vector<double> raw);

enum class Split : std::uint8_t { Train, Val, Test, None };

const char* split_name(Split s);

// Disjoint train/val/test membership, one tag per node.
class SplitMask {
public:
    SplitMask() = default;
    explicit SplitMask(std::vector<Split> tags) : tags_(std::move(tags)) {}

    NodeId num_nodes() const { return static_cast<NodeId>(tags_.size()); }
    Split tag(NodeId v) const { return tags_[static_cast<std::size_t>(v)]; }

    NodeList members(Split s) const;
    std::size_t count(Split s) const;

private:
    std::vector<Split> tags_;
};

} // namespace gam

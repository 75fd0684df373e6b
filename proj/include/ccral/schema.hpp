#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

namespace ccral {

enum class ColumnKind { continuous, binary, categorical };

const char* to_string(ColumnKind kind);
ColumnKind column_kind_from_string(const std::string& s);

struct ColumnSpec {
    std::string name;
    ColumnKind kind = ColumnKind::continuous;
    // Categorical only. May be empty, in which case levels are discovered at
    // encoder-fit time (sorted lexicographically).
    std::vector<std::string> levels;
};

// Declares the feature columns (treatment included), the label column, and
// which raw text values map to 1. The label is not a feature.
struct FeatureSchema {
    std::vector<ColumnSpec> columns;
    std::string treatment;
    std::string treatment_one;
    std::string label;
    std::string positive_label;

    std::size_t n_features() const { return columns.size(); }
    const ColumnSpec& treatment_spec() const;

    // Structural invariants: treatment exists among columns and is binary,
    // label is not a feature, names are unique, declared levels are unique
    // and non-empty. Throws BadConfig.
    void validate() const;

    static FeatureSchema from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
    static FeatureSchema load(const std::string& path);
    void save(const std::string& path) const;
};

}  // namespace ccral

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ccral/csv.hpp"
#include "ccral/dataset.hpp"
#include "ccral/schema.hpp"

namespace ccral {

// Encoded layout of one feature column: a contiguous coordinate range
// [offset, offset + width).
struct ColumnEncoding {
    std::string name;
    ColumnKind kind = ColumnKind::continuous;
    std::size_t offset = 0;
    std::size_t width = 1;
    double mean = 0.0;    // continuous
    double stddev = 1.0;  // continuous, clamped to >= 1e-8
    // binary: exactly two entries, levels[0] -> 0, levels[1] -> 1;
    // categorical: one one-hot coordinate per entry.
    std::vector<std::string> levels;
};

// Fitted feature encoding. Continuous columns standardize with statistics
// from the fitting table only; categoricals one-hot; the treatment column is
// a single raw 0/1 coordinate (never standardized) so flipping it is exact.
struct Encoder {
    std::vector<ColumnEncoding> columns;  // schema order
    std::size_t width = 0;
    std::size_t treatment_coord = 0;
    std::string treatment_name;
    std::string label_name;
    std::string positive_label;

    const ColumnEncoding* find(const std::string& name) const;
};

// Computes statistics and level maps from `raw`. Deterministic: discovered
// levels are sorted lexicographically. Throws ConstantTreatment when the
// treatment column has a single distinct value, UnknownKind for a binary
// column observing anything but two values (the treatment's pair is fixed by
// schema.treatment_one plus the one other observed value).
Encoder fit_encoder(const RawTable& raw, const FeatureSchema& schema);

// Encodes `raw` with a fitted encoder. Unseen categorical/binary values map
// to an all-zero block for that column and are counted in the result's
// n_unseen_levels. Throws LayoutMismatch when required columns are missing.
Dataset transform(const Encoder& encoder, const RawTable& raw);

}  // namespace ccral

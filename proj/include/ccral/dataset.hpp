#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ccral {

enum class Origin : std::uint8_t { real = 0, counterfactual = 1 };

// Encoded numeric design matrix plus labels, treatment indicators and row
// provenance. Immutable by convention once built; operations return new
// datasets instead of mutating.
struct Dataset {
    std::size_t n = 0;
    std::size_t d = 0;
    std::vector<double> x;        // row-major n*d
    std::vector<std::uint8_t> y;  // {0,1}
    std::vector<std::uint8_t> t;  // {0,1}, mirrors x[i*d + treatment_coord]
    std::vector<std::uint8_t> origin;
    std::size_t treatment_coord = 0;
    std::size_t n_unseen_levels = 0;  // transform-time bookkeeping

    std::span<const double> row(std::size_t i) const { return {x.data() + i * d, d}; }
    std::span<double> row(std::size_t i) { return {x.data() + i * d, d}; }

    void push_row(std::span<const double> values, std::uint8_t label,
                  std::uint8_t treatment, Origin from);

    Dataset subset(const std::vector<std::size_t>& indices) const;

    bool has_both_labels() const;
    bool has_both_treatment_groups() const;

    // Checks the structural invariants (finite X, binary y/t, t mirrors the
    // treatment coordinate). Throws LayoutMismatch on violation.
    void validate() const;
};

struct SplitSpec {
    double train_frac = 0.6;
    double val_frac = 0.2;
    double test_frac = 0.2;
    std::uint64_t seed = 0;
    bool stratify = true;
};

struct SplitIndices {
    std::vector<std::size_t> train;
    std::vector<std::size_t> val;
    std::vector<std::size_t> test;
};

struct SplitResult {
    Dataset train;
    Dataset val;
    Dataset test;
};

// Deterministic index partition: per label group (when stratified), shuffle
// with a child seed of spec.seed, give floor(frac*n) rows to val and test and
// the remainder to train. Output index lists are sorted ascending. Throws
// InfeasibleSplit when a part ends up empty or, under stratification, misses
// a label.
SplitIndices split_indices(const std::vector<std::uint8_t>& labels, const SplitSpec& spec);

SplitResult split(const Dataset& ds, const SplitSpec& spec);

}  // namespace ccral

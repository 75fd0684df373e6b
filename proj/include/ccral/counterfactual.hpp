#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "ccral/dataset.hpp"

namespace ccral {

// One counterfactual per real training row: the treatment-flipped copy, the
// matched label, and which neighbor supplied it.
struct CounterfactualSet {
    std::size_t d = 0;
    std::size_t treatment_coord = 0;
    std::vector<std::size_t> source_index;   // into the training dataset
    std::vector<double> cf_x;                // row-major size()*d
    std::vector<std::uint8_t> cf_label;
    std::vector<std::size_t> matched_index;  // into the training dataset
    std::vector<double> match_distance;

    std::size_t size() const { return source_index.size(); }
    std::span<const double> row(std::size_t i) const { return {cf_x.data() + i * d, d}; }
};

// Copy of x with the treatment coordinate flipped 0 <-> 1. Throws
// NonBinaryTreatmentValue unless x[treatment_coord] is exactly 0 or 1.
std::vector<double> flip_treatment(std::span<const double> x, std::size_t treatment_coord);

// Euclidean distance over every coordinate except the treatment one.
double matching_distance(std::span<const double> a, std::span<const double> b,
                         std::size_t treatment_coord);

struct MatchResult {
    std::uint8_t label = 0;
    std::size_t matched_index = 0;
    double distance = 0.0;
};

// Nearest real row whose treatment equals the counterfactual's treatment
// value, ties broken by smallest row index. Restricting candidates to the
// flipped group is what keeps the source row from matching itself.
MatchResult match_label(std::span<const double> cf, const Dataset& train);

// One counterfactual per real row of `train` (counterfactual-origin rows are
// excluded both as sources and as candidates). Entries are independent, so
// they may be computed on several threads; the result does not depend on the
// schedule. Throws MatchingInfeasible when a treatment group is empty.
CounterfactualSet build_counterfactual_set(const Dataset& train, unsigned n_threads = 1);

// Audit dump: source_index, matched_index, distance, cf_label.
void dump_csv(const CounterfactualSet& cf, std::ostream& out);

}  // namespace ccral

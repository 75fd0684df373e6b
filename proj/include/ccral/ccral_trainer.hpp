#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "json.hpp"

#include "ccral/counterfactual.hpp"
#include "ccral/dataset.hpp"
#include "ccral/linear_model.hpp"

namespace ccral {

// Search grid for the uncertainty-region half-width.
struct MarginGrid {
    std::vector<double> alphas;  // strictly increasing, within [0, 0.5]

    // [0] ++ [0.5*k/K for k=1..K], so K=10 gives 0, 0.05, ..., 0.50. The
    // explicit 0 embeds the standard baseline in the search; 0.5 embeds the
    // all-counterfactuals baseline.
    static MarginGrid make(std::size_t k);

    void validate() const;
};

struct CcralTracePoint {
    double alpha = 0.0;
    std::size_t n_uncertain = 0;
    std::size_t n_train_augmented = 0;
    double val_accuracy = 0.0;
};

struct CcralTrace {
    std::vector<CcralTracePoint> points;  // grid order
    std::size_t selected_k = 0;
    double selected_alpha = 0.0;

    nlohmann::json to_json() const;
};

// Indices whose score lies in [0.5 - alpha, 0.5 + alpha], both bounds
// inclusive. Throws AlphaOutOfRange unless 0 <= alpha <= 0.5.
std::vector<std::size_t> uncertain_indices(std::span<const double> scores, double alpha);

struct CcralResult {
    LinearModel model;
    CcralTrace trace;
};

// The full procedure: train a base model on `train`, build counterfactuals
// for every real row once, score the real rows with the base model once, and
// for each grid alpha retrain from scratch on train plus the counterfactuals
// of the uncertain rows. Returns the model with the highest validation
// accuracy; ties go to the smallest alpha.
CcralResult run_ccral(const Dataset& train, const Dataset& val, const TrainConfig& cfg,
                      const MarginGrid& grid, unsigned n_threads = 1);

// Baseline 1: the classifier trained on the real samples only.
LinearModel run_standard(const Dataset& train, const TrainConfig& cfg);

// Baseline 2: real samples plus counterfactuals of every real row
// (equivalent to fixing alpha = 0.5).
LinearModel run_counterfactual_all(const Dataset& train, const TrainConfig& cfg,
                                   unsigned n_threads = 1);

}  // namespace ccral

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "ccral/dataset.hpp"

namespace ccral {

enum class LossKind { logistic, hinge };

const char* to_string(LossKind kind);
LossKind loss_kind_from_string(const std::string& s);

// Linear probabilistic classifier: score(x) = sigmoid(w.x + b) for both loss
// kinds (for hinge the sigmoid is a monotone squashing of the margin, which
// is all the uncertainty region needs).
struct LinearModel {
    std::vector<double> weights;
    double bias = 0.0;
    LossKind loss_kind = LossKind::logistic;
    std::size_t trained_on = 0;

    std::size_t dim() const { return weights.size(); }

    double predict_score(std::span<const double> x) const;
    std::uint8_t predict_label(std::span<const double> x) const;  // 1 iff score >= 0.5

    // Scores for every row.
    std::vector<double> scores(const Dataset& ds) const;
    std::vector<std::uint8_t> labels(const Dataset& ds) const;

    nlohmann::json to_json() const;
    static LinearModel from_json(const nlohmann::json& j);
    void save(const std::string& path) const;
    static LinearModel load(const std::string& path);
};

struct TrainConfig {
    LossKind loss_kind = LossKind::logistic;
    double l2_lambda = 0.0;      // weights only, bias unregularized
    double learning_rate = 0.1;  // on standardized data
    std::size_t max_epochs = 500;
    double tol = 1e-7;  // stop when loss improvement < tol
    std::uint64_t seed = 0;

    void validate() const;
};

// Average per-sample loss + (l2_lambda/2)*||w||^2 and its gradient over
// (weights, bias); grad.back() is the bias component.
struct LossGrad {
    double loss = 0.0;
    std::vector<double> grad;
};
LossGrad loss_and_gradient(const LinearModel& m, const Dataset& ds, double l2_lambda);

// Deterministic full-batch gradient descent from zero initialization. The
// accepted-loss sequence is non-increasing: a step that would increase the
// loss is rejected and the learning rate halved. Throws SingleClassTraining
// when only one label is present and DivergedLoss on non-finite loss.
LinearModel train(const Dataset& ds, const TrainConfig& cfg);

}  // namespace ccral

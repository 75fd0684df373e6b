#include "ccral/ccral_trainer.hpp"

#include <algorithm>
#include <numeric>

#include "ccral/errors.hpp"
#include "ccral/metrics.hpp"

namespace ccral {

MarginGrid MarginGrid::make(std::size_t k) {
    if (k == 0) throw BadConfig("margin grid needs K >= 1");
    MarginGrid grid;
    grid.alphas.reserve(k + 1);
    grid.alphas.push_back(0.0);
    for (std::size_t i = 1; i <= k; ++i)
        grid.alphas.push_back(0.5 * static_cast<double>(i) / static_cast<double>(k));
    return grid;
}

void MarginGrid::validate() const {
    if (alphas.empty()) throw BadConfig("margin grid is empty");
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (alphas[i] < 0.0 || alphas[i] > 0.5)
            throw AlphaOutOfRange("grid alpha outside [0, 0.5]");
        if (i > 0 && alphas[i] <= alphas[i - 1])
            throw BadConfig("grid alphas must be strictly increasing");
    }
}

nlohmann::json CcralTrace::to_json() const {
    nlohmann::ordered_json j;
    j["grid"] = nlohmann::ordered_json::array();
    for (const auto& p : points) {
        nlohmann::ordered_json jp;
        jp["alpha"] = p.alpha;
        jp["n_uncertain"] = p.n_uncertain;
        jp["n_train_augmented"] = p.n_train_augmented;
        jp["val_accuracy"] = p.val_accuracy;
        j["grid"].push_back(jp);
    }
    j["selected_k"] = selected_k;
    j["selected_alpha"] = selected_alpha;
    return j;
}

std::vector<std::size_t> uncertain_indices(std::span<const double> scores, double alpha) {
    if (alpha < 0.0 || alpha > 0.5) throw AlphaOutOfRange("alpha must lie in [0, 0.5]");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < scores.size(); ++i)
        if (scores[i] >= 0.5 - alpha && scores[i] <= 0.5 + alpha) out.push_back(i);
    return out;
}

namespace {

// Training set plus the counterfactuals of the selected entries, appended in
// ascending entry order so identical selections build identical datasets.
Dataset augment(const Dataset& train_set, const CounterfactualSet& cf,
                const std::vector<std::size_t>& entries) {
    Dataset out = train_set;
    for (std::size_t k : entries) {
        const std::size_t src = cf.source_index[k];
        out.push_row(cf.row(k), cf.cf_label[k], train_set.t[src] ? 0 : 1,
                     Origin::counterfactual);
    }
    return out;
}

}  // namespace

CcralResult run_ccral(const Dataset& train_set, const Dataset& val_set, const TrainConfig& cfg,
                      const MarginGrid& grid, unsigned n_threads) {
    grid.validate();
    if (val_set.n == 0) throw EmptyInput("run_ccral: empty validation set");

    // Base model, counterfactual set and base scores are computed once, before
    // the grid loop; only the selection threshold varies per grid point.
    const LinearModel base = train(train_set, cfg);
    const CounterfactualSet cf = build_counterfactual_set(train_set, n_threads);
    std::vector<double> base_scores(cf.size());
    for (std::size_t k = 0; k < cf.size(); ++k)
        base_scores[k] = base.predict_score(train_set.row(cf.source_index[k]));

    CcralResult result;
    double best_acc = -1.0;
    for (std::size_t k = 0; k < grid.alphas.size(); ++k) {
        const double alpha = grid.alphas[k];
        const auto selected = uncertain_indices(base_scores, alpha);
        const Dataset augmented = augment(train_set, cf, selected);
        LinearModel candidate = train(augmented, cfg);
        const double acc = accuracy(val_set.y, candidate.labels(val_set));

        result.trace.points.push_back({alpha, selected.size(), augmented.n, acc});
        if (acc > best_acc) {
            best_acc = acc;
            result.model = std::move(candidate);
            result.trace.selected_k = k;
            result.trace.selected_alpha = alpha;
        }
    }
    return result;
}

LinearModel run_standard(const Dataset& train_set, const TrainConfig& cfg) {
    return train(train_set, cfg);
}

LinearModel run_counterfactual_all(const Dataset& train_set, const TrainConfig& cfg,
                                   unsigned n_threads) {
    const CounterfactualSet cf = build_counterfactual_set(train_set, n_threads);
    std::vector<std::size_t> all(cf.size());
    std::iota(all.begin(), all.end(), 0);
    return train(augment(train_set, cf, all), cfg);
}

}  // namespace ccral

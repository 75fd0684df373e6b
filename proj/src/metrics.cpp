#include "ccral/metrics.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "ccral/errors.hpp"

namespace ccral {

double accuracy(std::span<const std::uint8_t> y_true, std::span<const std::uint8_t> y_pred) {
    if (y_true.size() != y_pred.size()) throw LengthMismatch("accuracy: length mismatch");
    if (y_true.empty()) throw EmptyInput("accuracy: empty input");
    std::size_t hits = 0;
    for (std::size_t i = 0; i < y_true.size(); ++i)
        if (y_true[i] == y_pred[i]) ++hits;
    return static_cast<double>(hits) / static_cast<double>(y_true.size());
}

double roc_auc(std::span<const std::uint8_t> y_true, std::span<const double> scores) {
    if (y_true.size() != scores.size()) throw LengthMismatch("roc_auc: length mismatch");
    if (y_true.empty()) throw EmptyInput("roc_auc: empty input");

    const std::size_t n = y_true.size();
    std::size_t n_pos = 0;
    for (std::uint8_t v : y_true) n_pos += v ? 1 : 0;
    const std::size_t n_neg = n - n_pos;
    if (n_pos == 0 || n_neg == 0) throw SingleClassInput("roc_auc: needs both classes");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

    // Average ranks within tied blocks (1-based), then the rank-sum statistic.
    double rank_sum_pos = 0.0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && scores[order[j]] == scores[order[i]]) ++j;
        const double avg_rank = 0.5 * static_cast<double>(i + 1 + j);  // mean of i+1 .. j
        for (std::size_t k = i; k < j; ++k)
            if (y_true[order[k]]) rank_sum_pos += avg_rank;
        i = j;
    }
    const double np = static_cast<double>(n_pos);
    const double nn = static_cast<double>(n_neg);
    return (rank_sum_pos - np * (np + 1.0) / 2.0) / (np * nn);
}

EvalResult evaluate(std::span<const std::uint8_t> y_true, std::span<const std::uint8_t> y_pred,
                    std::span<const double> scores) {
    return {accuracy(y_true, y_pred), roc_auc(y_true, scores), y_true.size()};
}

}  // namespace ccral

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace ccral {

struct EvalResult {
    double accuracy = 0.0;
    double auc = 0.0;
    std::size_t n = 0;
};

// Fraction of positions where y_true == y_pred.
double accuracy(std::span<const std::uint8_t> y_true, std::span<const std::uint8_t> y_pred);

// Mann-Whitney AUC, ties counting one half. Sort-based rank statistic,
// O(n log n); the O(n^2) pair count lives in the tests as an oracle.
double roc_auc(std::span<const std::uint8_t> y_true, std::span<const double> scores);

EvalResult evaluate(std::span<const std::uint8_t> y_true, std::span<const std::uint8_t> y_pred,
                    std::span<const double> scores);

}  // namespace ccral

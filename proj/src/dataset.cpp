#include "ccral/dataset.hpp"

#include <algorithm>
#include <cmath>

#include "ccral/errors.hpp"
#include "ccral/rng.hpp"

namespace ccral {

void Dataset::push_row(std::span<const double> values, std::uint8_t label,
                       std::uint8_t treatment, Origin from) {
    if (values.size() != d) throw DimensionMismatch("row width does not match dataset");
    x.insert(x.end(), values.begin(), values.end());
    y.push_back(label);
    t.push_back(treatment);
    origin.push_back(static_cast<std::uint8_t>(from));
    ++n;
}

Dataset Dataset::subset(const std::vector<std::size_t>& indices) const {
    Dataset out;
    out.d = d;
    out.treatment_coord = treatment_coord;
    out.x.reserve(indices.size() * d);
    for (std::size_t i : indices) {
        out.x.insert(out.x.end(), x.begin() + i * d, x.begin() + (i + 1) * d);
        out.y.push_back(y[i]);
        out.t.push_back(t[i]);
        out.origin.push_back(origin[i]);
    }
    out.n = indices.size();
    return out;
}

bool Dataset::has_both_labels() const {
    bool seen0 = false, seen1 = false;
    for (std::uint8_t v : y) (v ? seen1 : seen0) = true;
    return seen0 && seen1;
}

bool Dataset::has_both_treatment_groups() const {
    bool seen0 = false, seen1 = false;
    for (std::uint8_t v : t) (v ? seen1 : seen0) = true;
    return seen0 && seen1;
}

void Dataset::validate() const {
    if (x.size() != n * d || y.size() != n || t.size() != n || origin.size() != n)
        throw LayoutMismatch("dataset buffers disagree on row count");
    if (n > 0 && treatment_coord >= d) throw LayoutMismatch("treatment coordinate out of range");
    for (double v : x)
        if (!std::isfinite(v)) throw LayoutMismatch("non-finite entry in design matrix");
    for (std::size_t i = 0; i < n; ++i) {
        if (y[i] > 1 || t[i] > 1) throw LayoutMismatch("labels/treatments must be 0 or 1");
        if (x[i * d + treatment_coord] != static_cast<double>(t[i]))
            throw LayoutMismatch("treatment indicator does not mirror the treatment coordinate");
    }
}

namespace {

void check_fractions(const SplitSpec& spec) {
    const double sum = spec.train_frac + spec.val_frac + spec.test_frac;
    const bool open = spec.train_frac > 0 && spec.train_frac < 1 && spec.val_frac > 0 &&
                      spec.val_frac < 1 && spec.test_frac > 0 && spec.test_frac < 1;
    if (!open || std::abs(sum - 1.0) > 1e-9)
        throw InfeasibleSplit("split fractions must lie in (0,1) and sum to 1");
}

}  // namespace

SplitIndices split_indices(const std::vector<std::uint8_t>& labels, const SplitSpec& spec) {
    check_fractions(spec);
    if (labels.empty()) throw InfeasibleSplit("nothing to split");

    // Group ids: label value when stratified, a single group otherwise.
    std::vector<std::vector<std::size_t>> groups;
    if (spec.stratify) {
        groups.assign(2, {});
        for (std::size_t i = 0; i < labels.size(); ++i) groups[labels[i] ? 1 : 0].push_back(i);
    } else {
        groups.assign(1, {});
        for (std::size_t i = 0; i < labels.size(); ++i) groups[0].push_back(i);
    }

    SplitIndices out;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        auto& idx = groups[g];
        if (idx.empty()) continue;
        Rng rng(mix_seed(spec.seed, seed_purpose::kSplit, g));
        shuffle(idx, rng);
        // floor for val/test, remainder to train
        const auto sz = static_cast<double>(idx.size());
        const std::size_t n_val = static_cast<std::size_t>(spec.val_frac * sz);
        const std::size_t n_test = static_cast<std::size_t>(spec.test_frac * sz);
        if (n_val + n_test > idx.size()) throw InfeasibleSplit("group too small to split");
        const std::size_t n_train = idx.size() - n_val - n_test;
        out.train.insert(out.train.end(), idx.begin(), idx.begin() + n_train);
        out.val.insert(out.val.end(), idx.begin() + n_train, idx.begin() + n_train + n_val);
        out.test.insert(out.test.end(), idx.begin() + n_train + n_val, idx.end());
    }
    std::sort(out.train.begin(), out.train.end());
    std::sort(out.val.begin(), out.val.end());
    std::sort(out.test.begin(), out.test.end());

    if (out.train.empty() || out.val.empty() || out.test.empty())
        throw InfeasibleSplit("a split part is empty");
    if (spec.stratify) {
        for (const auto* part : {&out.train, &out.val, &out.test}) {
            bool seen0 = false, seen1 = false;
            for (std::size_t i : *part) (labels[i] ? seen1 : seen0) = true;
            if (!seen0 || !seen1)
                throw InfeasibleSplit("a stratified split part lacks one label value");
        }
    }
    return out;
}

SplitResult split(const Dataset& ds, const SplitSpec& spec) {
    const SplitIndices idx = split_indices(ds.y, spec);
    return {ds.subset(idx.train), ds.subset(idx.val), ds.subset(idx.test)};
}

}  // namespace ccral

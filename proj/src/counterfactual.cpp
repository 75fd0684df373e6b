#include "ccral/counterfactual.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <thread>

#include "ccral/errors.hpp"
#include "ccral/kernels.hpp"

namespace ccral {

std::vector<double> flip_treatment(std::span<const double> x, std::size_t treatment_coord) {
    if (treatment_coord >= x.size())
        throw DimensionMismatch("flip_treatment: coordinate out of range");
    const double t = x[treatment_coord];
    if (t != 0.0 && t != 1.0)
        throw NonBinaryTreatmentValue("flip_treatment: treatment value is not 0 or 1");
    std::vector<double> out(x.begin(), x.end());
    out[treatment_coord] = 1.0 - t;
    return out;
}

double matching_distance(std::span<const double> a, std::span<const double> b,
                         std::size_t treatment_coord) {
    if (a.size() != b.size()) throw DimensionMismatch("matching_distance: length mismatch");
    return std::sqrt(
        kernels::active().sqdist_skip(a.data(), b.data(), a.size(), treatment_coord));
}

namespace {

// argmin of the masked squared distance over the given candidate rows;
// candidates are scanned in ascending index order, strict < keeps the first
// (smallest-index) minimizer.
MatchResult scan_candidates(std::span<const double> cf, const Dataset& train,
                            const std::vector<std::size_t>& candidates) {
    const auto& ops = kernels::active();
    const std::size_t d = train.d;
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_idx = 0;
    for (std::size_t j : candidates) {
        const double dist2 = ops.sqdist_skip(cf.data(), train.x.data() + j * d, d,
                                             train.treatment_coord);
        if (dist2 < best) {
            best = dist2;
            best_idx = j;
        }
    }
    return {train.y[best_idx], best_idx, std::sqrt(best)};
}

std::vector<std::size_t> real_rows_with_treatment(const Dataset& train, std::uint8_t t) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < train.n; ++j)
        if (train.origin[j] == static_cast<std::uint8_t>(Origin::real) && train.t[j] == t)
            out.push_back(j);
    return out;
}

}  // namespace

MatchResult match_label(std::span<const double> cf, const Dataset& train) {
    if (cf.size() != train.d) throw DimensionMismatch("match_label: dimension mismatch");
    const double tv = cf[train.treatment_coord];
    if (tv != 0.0 && tv != 1.0)
        throw NonBinaryTreatmentValue("match_label: treatment value is not 0 or 1");
    const auto candidates = real_rows_with_treatment(train, tv == 1.0 ? 1 : 0);
    if (candidates.empty())
        throw MatchingInfeasible("match_label: no real candidate in the flipped treatment group");
    return scan_candidates(cf, train, candidates);
}

CounterfactualSet build_counterfactual_set(const Dataset& train, unsigned n_threads) {
    std::vector<std::size_t> sources;
    for (std::size_t i = 0; i < train.n; ++i)
        if (train.origin[i] == static_cast<std::uint8_t>(Origin::real)) sources.push_back(i);
    if (sources.empty()) throw MatchingInfeasible("build_counterfactual_set: no real rows");

    const std::vector<std::size_t> group[2] = {real_rows_with_treatment(train, 0),
                                               real_rows_with_treatment(train, 1)};
    if (group[0].empty() || group[1].empty())
        throw MatchingInfeasible("build_counterfactual_set: a treatment group is empty");

    CounterfactualSet cf;
    cf.d = train.d;
    cf.treatment_coord = train.treatment_coord;
    cf.source_index = sources;
    cf.cf_x.resize(sources.size() * train.d);
    cf.cf_label.resize(sources.size());
    cf.matched_index.resize(sources.size());
    cf.match_distance.resize(sources.size());

    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            const std::size_t i = sources[k];
            const auto flipped = flip_treatment(train.row(i), train.treatment_coord);
            const std::uint8_t cf_t = train.t[i] ? 0 : 1;
            const MatchResult m = scan_candidates(flipped, train, group[cf_t]);
            std::copy(flipped.begin(), flipped.end(), cf.cf_x.begin() + k * train.d);
            cf.cf_label[k] = m.label;
            cf.matched_index[k] = m.matched_index;
            cf.match_distance[k] = m.distance;
        }
    };

    const std::size_t total = sources.size();
    if (n_threads <= 1 || total < 2 * n_threads) {
        work(0, total);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (total + n_threads - 1) / n_threads;
        for (unsigned w = 0; w < n_threads; ++w) {
            const std::size_t begin = w * chunk;
            if (begin >= total) break;
            pool.emplace_back(work, begin, std::min(begin + chunk, total));
        }
        for (auto& th : pool) th.join();
    }
    return cf;
}

void dump_csv(const CounterfactualSet& cf, std::ostream& out) {
    out << "source_index,matched_index,distance,cf_label\n";
    char buf[32];
    for (std::size_t k = 0; k < cf.size(); ++k) {
        auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), cf.match_distance[k]);
        out << cf.source_index[k] << ',' << cf.matched_index[k] << ','
            << std::string_view(buf, static_cast<std::size_t>(p - buf)) << ','
            << static_cast<int>(cf.cf_label[k]) << '\n';
    }
}

}  // namespace ccral

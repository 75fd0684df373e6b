#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ccral/csv.hpp"
#include "ccral/schema.hpp"

namespace ccral {

// Test-oracle hook: the latent quantities behind a generated table, enough to
// re-evaluate the label rule with the treatment toggled.
struct SyntheticLatents {
    std::vector<double> w;    // fixed seeded unit vector, length d_cont
    std::vector<double> x;    // row-major n*d_cont
    std::vector<std::uint8_t> treatment;
    std::vector<double> eps;  // per-row noise draw
};

// Columns x_1..x_{d_cont} ~ U(-1,1), T ~ Bernoulli(0.5), and
// y = 1 iff w.x + effect*T*sign(x_1) + eps > 0 with eps ~ N(0, noise).
// The treatment interacts with x_1, so flipping T genuinely changes the
// outcome probability. Deterministic in all arguments; draw order per row is
// x_1..x_d, T, eps, after d_cont draws for w.
RawTable generate_synthetic(std::size_t n, std::size_t d_cont, double effect, double noise,
                            std::uint64_t seed, SyntheticLatents* latents = nullptr);

// Schema matching the generated table: treatment column "T" (one == "1"),
// label column "y" (positive == "1").
FeatureSchema synthetic_schema(std::size_t d_cont);

}  // namespace ccral

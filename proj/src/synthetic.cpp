#include "ccral/synthetic.hpp"

#include <charconv>
#include <cmath>

#include "ccral/errors.hpp"
#include "ccral/rng.hpp"

namespace ccral {

namespace {

// Shortest round-trip representation: byte-identical output for identical
// doubles, on any platform with to_chars for floating point.
std::string format_double(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, p);
}

double sign(double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

}  // namespace

RawTable generate_synthetic(std::size_t n, std::size_t d_cont, double effect, double noise,
                            std::uint64_t seed, SyntheticLatents* latents) {
    if (n < 10) throw BadConfig("generate_synthetic: n must be >= 10");
    if (d_cont < 1) throw BadConfig("generate_synthetic: d_cont must be >= 1");
    if (noise < 0) throw BadConfig("generate_synthetic: noise must be >= 0");

    Rng rng(mix_seed(seed, seed_purpose::kSynthetic));

    // Fixed seeded unit vector.
    std::vector<double> w(d_cont);
    double norm2 = 0.0;
    for (auto& wi : w) {
        wi = rng.normal();
        norm2 += wi * wi;
    }
    const double inv_norm = 1.0 / std::sqrt(norm2);
    for (auto& wi : w) wi *= inv_norm;

    RawTable table;
    for (std::size_t j = 1; j <= d_cont; ++j) table.header.push_back("x" + std::to_string(j));
    table.header.push_back("T");
    table.header.push_back("y");

    if (latents) {
        latents->w = w;
        latents->x.reserve(n * d_cont);
        latents->treatment.reserve(n);
        latents->eps.reserve(n);
    }

    std::vector<double> xi(d_cont);
    for (std::size_t i = 0; i < n; ++i) {
        double wx = 0.0;
        for (std::size_t j = 0; j < d_cont; ++j) {
            xi[j] = rng.uniform(-1.0, 1.0);
            wx += w[j] * xi[j];
        }
        const bool treated = rng.bernoulli(0.5);
        const double eps = rng.normal(0.0, noise);
        const bool label = wx + effect * (treated ? 1.0 : 0.0) * sign(xi[0]) + eps > 0;

        std::vector<std::string> row;
        row.reserve(d_cont + 2);
        for (double v : xi) row.push_back(format_double(v));
        row.push_back(treated ? "1" : "0");
        row.push_back(label ? "1" : "0");
        table.rows.push_back(std::move(row));

        if (latents) {
            latents->x.insert(latents->x.end(), xi.begin(), xi.end());
            latents->treatment.push_back(treated ? 1 : 0);
            latents->eps.push_back(eps);
        }
    }
    return table;
}

FeatureSchema synthetic_schema(std::size_t d_cont) {
    FeatureSchema s;
    for (std::size_t j = 1; j <= d_cont; ++j)
        s.columns.push_back({"x" + std::to_string(j), ColumnKind::continuous, {}});
    s.columns.push_back({"T", ColumnKind::binary, {}});
    s.treatment = "T";
    s.treatment_one = "1";
    s.label = "y";
    s.positive_label = "1";
    s.validate();
    return s;
}

}  // namespace ccral

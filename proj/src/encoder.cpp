#include "ccral/encoder.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <unordered_map>

#include "ccral/errors.hpp"

namespace ccral {

namespace {

double parse_double(const std::string& s, const std::string& col) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw LayoutMismatch("column '" + col + "': cell '" + s + "' is not numeric");
    return v;
}

}  // namespace

const ColumnEncoding* Encoder::find(const std::string& name) const {
    for (const auto& col : columns)
        if (col.name == name) return &col;
    return nullptr;
}

Encoder fit_encoder(const RawTable& raw, const FeatureSchema& schema) {
    if (raw.n_rows() == 0) throw EmptyTable("cannot fit encoder on an empty table");
    schema.validate();

    Encoder enc;
    enc.treatment_name = schema.treatment;
    enc.label_name = schema.label;
    enc.positive_label = schema.positive_label;

    std::size_t offset = 0;
    for (const auto& spec : schema.columns) {
        const std::size_t ci = raw.column_index(spec.name);
        if (ci == RawTable::npos)
            throw LayoutMismatch("table lacks feature column '" + spec.name + "'");

        ColumnEncoding col;
        col.name = spec.name;
        col.kind = spec.kind;
        col.offset = offset;

        switch (spec.kind) {
            case ColumnKind::continuous: {
                double sum = 0.0;
                for (const auto& row : raw.rows) sum += parse_double(row[ci], spec.name);
                const double mean = sum / static_cast<double>(raw.n_rows());
                double ss = 0.0;
                for (const auto& row : raw.rows) {
                    const double dv = parse_double(row[ci], spec.name) - mean;
                    ss += dv * dv;
                }
                col.mean = mean;
                col.stddev = std::max(std::sqrt(ss / static_cast<double>(raw.n_rows())), 1e-8);
                col.width = 1;
                break;
            }
            case ColumnKind::binary: {
                std::set<std::string> seen;
                for (const auto& row : raw.rows) seen.insert(row[ci]);
                const bool is_treatment = spec.name == schema.treatment;
                if (seen.size() < 2) {
                    if (is_treatment)
                        throw ConstantTreatment("treatment column '" + spec.name +
                                                "' has a single distinct value");
                    // A constant plain binary column is tolerated: the one
                    // observed value maps to 0.
                    col.levels = {*seen.begin(), ""};
                } else if (seen.size() > 2) {
                    throw BadConfig("binary column '" + spec.name + "' has " +
                                    std::to_string(seen.size()) + " distinct values");
                } else if (is_treatment) {
                    if (!seen.count(schema.treatment_one))
                        throw BadConfig("treatment_one '" + schema.treatment_one +
                                        "' never observed in column '" + spec.name + "'");
                    seen.erase(schema.treatment_one);
                    col.levels = {*seen.begin(), schema.treatment_one};
                } else {
                    col.levels = {*seen.begin(), *std::next(seen.begin())};  // sorted
                }
                col.width = 1;
                break;
            }
            case ColumnKind::categorical: {
                if (!spec.levels.empty()) {
                    col.levels = spec.levels;
                } else {
                    std::set<std::string> seen;
                    for (const auto& row : raw.rows) seen.insert(row[ci]);
                    col.levels.assign(seen.begin(), seen.end());
                }
                col.width = col.levels.size();
                break;
            }
        }
        if (spec.name == schema.treatment) enc.treatment_coord = col.offset;
        offset += col.width;
        enc.columns.push_back(std::move(col));
    }
    enc.width = offset;
    return enc;
}

Dataset transform(const Encoder& encoder, const RawTable& raw) {
    const std::size_t label_ci = raw.column_index(encoder.label_name);
    if (label_ci == RawTable::npos)
        throw LayoutMismatch("table lacks label column '" + encoder.label_name + "'");

    std::vector<std::size_t> col_index(encoder.columns.size());
    for (std::size_t k = 0; k < encoder.columns.size(); ++k) {
        const std::size_t ci = raw.column_index(encoder.columns[k].name);
        if (ci == RawTable::npos)
            throw LayoutMismatch("table lacks feature column '" + encoder.columns[k].name + "'");
        col_index[k] = ci;
    }

    Dataset ds;
    ds.d = encoder.width;
    ds.treatment_coord = encoder.treatment_coord;
    ds.x.reserve(raw.n_rows() * ds.d);
    std::vector<double> coords(ds.d);

    for (const auto& row : raw.rows) {
        std::fill(coords.begin(), coords.end(), 0.0);
        std::uint8_t t = 0;
        for (std::size_t k = 0; k < encoder.columns.size(); ++k) {
            const ColumnEncoding& col = encoder.columns[k];
            const std::string& cell = row[col_index[k]];
            switch (col.kind) {
                case ColumnKind::continuous:
                    coords[col.offset] = (parse_double(cell, col.name) - col.mean) / col.stddev;
                    break;
                case ColumnKind::binary:
                    if (cell == col.levels[1]) {
                        coords[col.offset] = 1.0;
                    } else if (cell != col.levels[0]) {
                        ++ds.n_unseen_levels;  // encodes as 0
                    }
                    if (col.offset == encoder.treatment_coord)
                        t = coords[col.offset] == 1.0 ? 1 : 0;
                    break;
                case ColumnKind::categorical: {
                    const auto it = std::find(col.levels.begin(), col.levels.end(), cell);
                    if (it != col.levels.end())
                        coords[col.offset + static_cast<std::size_t>(it - col.levels.begin())] = 1.0;
                    else
                        ++ds.n_unseen_levels;
                    break;
                }
            }
        }
        ds.push_row(coords, row[label_ci] == encoder.positive_label ? 1 : 0, t, Origin::real);
    }
    ds.validate();
    return ds;
}

}  // namespace ccral

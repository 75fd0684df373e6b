#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace ccral {

struct FeatureSchema;

// A parsed CSV: header plus text-valued records. Every stored row has exactly
// header.size() cells; rows dropped during loading are only counted.
struct RawTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::size_t n_dropped = 0;

    std::size_t n_rows() const { return rows.size(); }
    std::size_t n_cols() const { return header.size(); }

    // Column position by name, or npos.
    std::size_t column_index(const std::string& name) const;

    RawTable subset(const std::vector<std::size_t>& row_indices) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

// RFC-4180-style parse: comma separated, double-quote escaping, quoted fields
// may contain commas and newlines.
RawTable read_csv(std::istream& in);

// Loads and validates against the schema: the header must contain every
// feature column and the label (order-insensitive). Rows with the wrong cell
// count, empty cells, "?" cells, or a continuous cell that does not parse as
// a number are dropped and counted.
RawTable load_csv(const std::string& path, const FeatureSchema& schema);

void write_csv(std::ostream& out, const RawTable& table);
void write_csv(const std::string& path, const RawTable& table);

}  // namespace ccral

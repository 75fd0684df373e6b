#include "ccral/csv.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "ccral/errors.hpp"
#include "ccral/schema.hpp"

namespace ccral {

std::size_t RawTable::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return i;
    return npos;
}

RawTable RawTable::subset(const std::vector<std::size_t>& row_indices) const {
    RawTable out;
    out.header = header;
    out.rows.reserve(row_indices.size());
    for (std::size_t i : row_indices) out.rows.push_back(rows[i]);
    return out;
}

namespace {

// One record, honoring quotes. Returns false at end of stream.
bool read_record(std::istream& in, std::vector<std::string>& cells) {
    cells.clear();
    std::string cell;
    bool in_quotes = false;
    bool any = false;
    int c;
    while ((c = in.get()) != EOF) {
        any = true;
        if (in_quotes) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get();
                    cell.push_back('"');
                } else {
                    in_quotes = false;
                }
            } else {
                cell.push_back(static_cast<char>(c));
            }
        } else if (c == '"') {
            in_quotes = true;
        } else if (c == ',') {
            cells.push_back(std::move(cell));
            cell.clear();
        } else if (c == '\n') {
            break;
        } else if (c == '\r') {
            if (in.peek() == '\n') in.get();
            break;
        } else {
            cell.push_back(static_cast<char>(c));
        }
    }
    if (!any) return false;
    cells.push_back(std::move(cell));
    return true;
}

bool parses_as_double(const std::string& s) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    while (first != last && (*first == ' ' || *first == '\t')) ++first;
    auto [p, ec] = std::from_chars(first, last, v);
    return ec == std::errc{} && p == last;
}

bool is_missing(const std::string& s) { return s.empty() || s == "?"; }

void quote_if_needed(std::ostream& out, const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) {
        out << s;
        return;
    }
    out << '"';
    for (char ch : s) {
        if (ch == '"') out << '"';
        out << ch;
    }
    out << '"';
}

}  // namespace

RawTable read_csv(std::istream& in) {
    RawTable table;
    std::vector<std::string> cells;
    if (!read_record(in, cells)) throw EmptyTable("csv has no header row");
    table.header = cells;
    while (read_record(in, cells)) {
        if (cells.size() == 1 && cells[0].empty()) continue;  // blank line
        table.rows.push_back(cells);
    }
    return table;
}

RawTable load_csv(const std::string& path, const FeatureSchema& schema) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileUnreadable("cannot open " + path);
    RawTable table = read_csv(in);

    std::unordered_set<std::string> have(table.header.begin(), table.header.end());
    std::string missing;
    for (const auto& col : schema.columns) {
        if (!have.count(col.name)) missing += (missing.empty() ? "" : ", ") + col.name;
    }
    if (!have.count(schema.label)) missing += (missing.empty() ? "" : ", ") + schema.label;
    if (!missing.empty())
        throw HeaderMismatch(path + ": header lacks column(s): " + missing);

    // Columns that must hold parseable numbers.
    std::vector<std::size_t> numeric_cols;
    std::vector<std::size_t> used_cols;
    for (const auto& col : schema.columns) {
        const std::size_t idx = table.column_index(col.name);
        used_cols.push_back(idx);
        if (col.kind == ColumnKind::continuous) numeric_cols.push_back(idx);
    }
    used_cols.push_back(table.column_index(schema.label));

    RawTable out;
    out.header = table.header;
    out.rows.reserve(table.rows.size());
    for (auto& row : table.rows) {
        bool ok = row.size() == table.header.size();
        if (ok) {
            for (std::size_t idx : used_cols) {
                if (is_missing(row[idx])) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            for (std::size_t idx : numeric_cols) {
                if (!parses_as_double(row[idx])) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok)
            out.rows.push_back(std::move(row));
        else
            ++out.n_dropped;
    }
    if (out.rows.empty()) throw EmptyTable(path + ": no usable rows");
    return out;
}

void write_csv(std::ostream& out, const RawTable& table) {
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (i) out << ',';
        quote_if_needed(out, table.header[i]);
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            quote_if_needed(out, row[i]);
        }
        out << '\n';
    }
}

void write_csv(const std::string& path, const RawTable& table) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FileUnreadable("cannot write " + path);
    write_csv(out, table);
}

}  // namespace ccral

#include "ccral/schema.hpp"

#include <fstream>
#include <unordered_set>

#include "ccral/errors.hpp"

namespace ccral {

const char* to_string(ColumnKind kind) {
    switch (kind) {
        case ColumnKind::continuous: return "continuous";
        case ColumnKind::binary: return "binary";
        case ColumnKind::categorical: return "categorical";
    }
    return "unknown";
}

ColumnKind column_kind_from_string(const std::string& s) {
    if (s == "continuous") return ColumnKind::continuous;
    if (s == "binary") return ColumnKind::binary;
    if (s == "categorical") return ColumnKind::categorical;
    throw UnknownKind("unknown column kind: " + s);
}

const ColumnSpec& FeatureSchema::treatment_spec() const {
    for (const auto& col : columns)
        if (col.name == treatment) return col;
    throw BadConfig("treatment column '" + treatment + "' not among feature columns");
}

void FeatureSchema::validate() const {
    if (columns.empty()) throw BadConfig("schema declares no feature columns");
    if (label.empty()) throw BadConfig("schema declares no label column");

    std::unordered_set<std::string> names;
    for (const auto& col : columns) {
        if (col.name.empty()) throw BadConfig("feature column with empty name");
        if (!names.insert(col.name).second)
            throw BadConfig("duplicate feature column: " + col.name);
        if (col.kind == ColumnKind::categorical) {
            std::unordered_set<std::string> lev;
            for (const auto& l : col.levels) {
                if (l.empty()) throw BadConfig(col.name + ": empty categorical level");
                if (!lev.insert(l).second)
                    throw BadConfig(col.name + ": duplicate level '" + l + "'");
            }
        }
    }
    if (names.count(label)) throw BadConfig("label column '" + label + "' listed as a feature");
    if (label == treatment) throw BadConfig("label and treatment are the same column");

    const ColumnSpec& t = treatment_spec();  // throws if absent
    if (t.kind != ColumnKind::binary)
        throw BadConfig("treatment column '" + treatment + "' must have kind binary");
    if (treatment_one.empty()) throw BadConfig("schema lacks treatment_one");
    if (positive_label.empty()) throw BadConfig("schema lacks positive_label");
}

FeatureSchema FeatureSchema::from_json(const nlohmann::json& j) {
    FeatureSchema s;
    try {
        for (const auto& jc : j.at("columns")) {
            ColumnSpec col;
            col.name = jc.at("name").get<std::string>();
            col.kind = column_kind_from_string(jc.at("kind").get<std::string>());
            if (jc.contains("levels")) col.levels = jc["levels"].get<std::vector<std::string>>();
            s.columns.push_back(std::move(col));
        }
        s.treatment = j.at("treatment").get<std::string>();
        s.treatment_one = j.at("treatment_one").get<std::string>();
        s.label = j.at("label").get<std::string>();
        s.positive_label = j.at("positive_label").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw BadConfig(std::string("malformed schema json: ") + e.what());
    }
    s.validate();
    return s;
}

nlohmann::json FeatureSchema::to_json() const {
    nlohmann::ordered_json j;
    j["columns"] = nlohmann::ordered_json::array();
    for (const auto& col : columns) {
        nlohmann::ordered_json jc;
        jc["name"] = col.name;
        jc["kind"] = to_string(col.kind);
        if (!col.levels.empty()) jc["levels"] = col.levels;
        j["columns"].push_back(jc);
    }
    j["treatment"] = treatment;
    j["treatment_one"] = treatment_one;
    j["label"] = label;
    j["positive_label"] = positive_label;
    return j;
}

FeatureSchema FeatureSchema::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileUnreadable("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw BadConfig(path + ": " + e.what());
    }
    return from_json(j);
}

void FeatureSchema::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw FileUnreadable("cannot write " + path);
    out << to_json().dump(2) << '\n';
}

}  // namespace ccral

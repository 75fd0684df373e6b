#include "ccral/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "ccral/ccral_trainer.hpp"
#include "ccral/csv.hpp"
#include "ccral/encoder.hpp"
#include "ccral/errors.hpp"
#include "ccral/metrics.hpp"
#include "ccral/rng.hpp"
#include "ccral/schema.hpp"
#include "ccral/version.hpp"

namespace ccral {

const char* to_string(Method m) {
    switch (m) {
        case Method::standard: return "standard";
        case Method::counterfactual: return "counterfactual";
        case Method::ccral: return "ccral";
    }
    return "unknown";
}

Method method_from_string(const std::string& s) {
    if (s == "standard") return Method::standard;
    if (s == "counterfactual") return Method::counterfactual;
    if (s == "ccral") return Method::ccral;
    throw BadConfig("unknown method: " + s);
}

void ExperimentConfig::validate() const {
    if (methods.empty()) throw BadConfig("no methods requested");
    if (repeats == 0) throw BadConfig("repeats must be >= 1");
    if (k == 0) throw BadConfig("k must be >= 1");
    const double sum = train_frac + val_frac + test_frac;
    if (train_frac <= 0 || val_frac <= 0 || test_frac <= 0 || std::abs(sum - 1.0) > 1e-9)
        throw BadConfig("split fractions must be positive and sum to 1");
    if (classifier.svm_c <= 0) throw BadConfig("svm_c must be > 0");
    if (classifier.l2_lambda && *classifier.l2_lambda < 0)
        throw BadConfig("l2_lambda must be >= 0");
    if (classifier.learning_rate <= 0) throw BadConfig("learning_rate must be > 0");
    if (classifier.max_epochs == 0) throw BadConfig("max_epochs must be >= 1");
    if (classifier.tol <= 0) throw BadConfig("tol must be > 0");
    if (threads == 0) throw BadConfig("threads must be >= 1");
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
    ExperimentConfig cfg;
    try {
        if (j.contains("data")) cfg.data_path = j["data"].get<std::string>();
        if (j.contains("schema")) cfg.schema_path = j["schema"].get<std::string>();
        if (j.contains("methods")) {
            cfg.methods.clear();
            for (const auto& m : j["methods"]) cfg.methods.push_back(method_from_string(m));
        }
        if (j.contains("k")) cfg.k = j["k"].get<std::size_t>();
        if (j.contains("repeats")) cfg.repeats = j["repeats"].get<std::size_t>();
        if (j.contains("split")) {
            cfg.train_frac = j["split"].at("train").get<double>();
            cfg.val_frac = j["split"].at("val").get<double>();
            cfg.test_frac = j["split"].at("test").get<double>();
        }
        if (j.contains("seed")) cfg.master_seed = j["seed"].get<std::uint64_t>();
        if (j.contains("classifier")) {
            const auto& jc = j["classifier"];
            if (jc.contains("loss"))
                cfg.classifier.loss_kind = loss_kind_from_string(jc["loss"].get<std::string>());
            if (jc.contains("svm_c")) cfg.classifier.svm_c = jc["svm_c"].get<double>();
            if (jc.contains("l2_lambda") && !jc["l2_lambda"].is_null())
                cfg.classifier.l2_lambda = jc["l2_lambda"].get<double>();
            if (jc.contains("learning_rate"))
                cfg.classifier.learning_rate = jc["learning_rate"].get<double>();
            if (jc.contains("max_epochs"))
                cfg.classifier.max_epochs = jc["max_epochs"].get<std::size_t>();
            if (jc.contains("tol")) cfg.classifier.tol = jc["tol"].get<double>();
        }
        if (j.contains("out")) cfg.output_path = j["out"].get<std::string>();
        if (j.contains("threads")) cfg.threads = j["threads"].get<unsigned>();
    } catch (const nlohmann::json::exception& e) {
        throw BadConfig(std::string("malformed experiment config: ") + e.what());
    }
    return cfg;
}

nlohmann::json ExperimentConfig::to_json() const {
    nlohmann::ordered_json j;
    j["data"] = data_path;
    j["schema"] = schema_path;
    j["methods"] = nlohmann::ordered_json::array();
    for (Method m : methods) j["methods"].push_back(to_string(m));
    j["k"] = k;
    j["repeats"] = repeats;
    j["split"] = {{"train", train_frac}, {"val", val_frac}, {"test", test_frac}};
    j["seed"] = master_seed;
    nlohmann::ordered_json jc;
    jc["loss"] = to_string(classifier.loss_kind);
    jc["svm_c"] = classifier.svm_c;
    jc["l2_lambda"] = classifier.l2_lambda ? nlohmann::json(*classifier.l2_lambda)
                                           : nlohmann::json(nullptr);
    jc["learning_rate"] = classifier.learning_rate;
    jc["max_epochs"] = classifier.max_epochs;
    jc["tol"] = classifier.tol;
    j["classifier"] = jc;
    j["out"] = output_path;
    j["threads"] = threads;
    return j;
}

std::pair<double, double> mean_std(const std::vector<double>& v) {
    if (v.empty()) return {0.0, 0.0};
    double sum = 0.0;
    for (double x : v) sum += x;
    const double mean = sum / static_cast<double>(v.size());
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / static_cast<double>(v.size()))};
}

namespace {

void recompute_aggregates(MethodReport& mr) {
    std::vector<double> accs, aucs;
    for (const auto& e : mr.entries) {
        accs.push_back(e.test_accuracy);
        aucs.push_back(e.test_auc);
    }
    std::tie(mr.mean_accuracy, mr.std_accuracy) = mean_std(accs);
    std::tie(mr.mean_auc, mr.std_auc) = mean_std(aucs);
}

}  // namespace

nlohmann::json ExperimentReport::to_json() const {
    nlohmann::ordered_json j;
    j["tool"] = "ccral";
    j["version"] = tool_version;
    nlohmann::ordered_json jd;
    jd["path"] = dataset.path;
    jd["n_rows"] = dataset.n_rows;
    jd["n_features"] = dataset.n_features;
    jd["n_dropped"] = dataset.n_dropped;
    jd["treatment"] = dataset.treatment;
    jd["label"] = dataset.label;
    j["dataset"] = jd;
    j["config"] = config.to_json();
    j["methods"] = nlohmann::ordered_json::array();
    for (const auto& mr : methods) {
        nlohmann::ordered_json jm;
        jm["method"] = to_string(mr.method);
        jm["repeats"] = nlohmann::ordered_json::array();
        for (const auto& e : mr.entries) {
            nlohmann::ordered_json je;
            je["repeat"] = e.repeat;
            je["seed"] = e.repeat_seed;
            je["test_accuracy"] = e.test_accuracy;
            je["test_auc"] = e.test_auc;
            if (e.selected_alpha) je["selected_alpha"] = *e.selected_alpha;
            jm["repeats"].push_back(je);
        }
        jm["mean_accuracy"] = mr.mean_accuracy;
        jm["std_accuracy"] = mr.std_accuracy;
        jm["mean_auc"] = mr.mean_auc;
        jm["std_auc"] = mr.std_auc;
        j["methods"].push_back(jm);
    }
    j["errors"] = repeat_errors;
    return j;
}

ExperimentReport ExperimentReport::from_json(const nlohmann::json& j) {
    ExperimentReport r;
    try {
        r.tool_version = j.at("version").get<std::string>();
        const auto& jd = j.at("dataset");
        r.dataset.path = jd.at("path").get<std::string>();
        r.dataset.n_rows = jd.at("n_rows").get<std::size_t>();
        r.dataset.n_features = jd.at("n_features").get<std::size_t>();
        r.dataset.n_dropped = jd.at("n_dropped").get<std::size_t>();
        r.dataset.treatment = jd.at("treatment").get<std::string>();
        r.dataset.label = jd.at("label").get<std::string>();
        r.config = ExperimentConfig::from_json(j.at("config"));
        for (const auto& jm : j.at("methods")) {
            MethodReport mr;
            mr.method = method_from_string(jm.at("method").get<std::string>());
            for (const auto& je : jm.at("repeats")) {
                RepeatEntry e;
                e.repeat = je.at("repeat").get<std::size_t>();
                e.repeat_seed = je.at("seed").get<std::uint64_t>();
                e.test_accuracy = je.at("test_accuracy").get<double>();
                e.test_auc = je.at("test_auc").get<double>();
                if (je.contains("selected_alpha"))
                    e.selected_alpha = je["selected_alpha"].get<double>();
                mr.entries.push_back(e);
            }
            mr.mean_accuracy = jm.at("mean_accuracy").get<double>();
            mr.std_accuracy = jm.at("std_accuracy").get<double>();
            mr.mean_auc = jm.at("mean_auc").get<double>();
            mr.std_auc = jm.at("std_auc").get<double>();
            r.methods.push_back(std::move(mr));
        }
        if (j.contains("errors"))
            r.repeat_errors = j["errors"].get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
        throw MalformedReport(std::string("malformed report: ") + e.what());
    }
    return r;
}

void ExperimentReport::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FileUnreadable("cannot write " + path);
    out << to_json().dump(2) << '\n';
}

ExperimentReport ExperimentReport::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileUnreadable("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw MalformedReport(path + ": " + e.what());
    }
    return from_json(j);
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const FeatureSchema schema = FeatureSchema::load(cfg.schema_path);
    const RawTable raw = load_csv(cfg.data_path, schema);

    ExperimentReport report;
    report.tool_version = kVersion;
    report.config = cfg;
    report.dataset = {cfg.data_path, raw.n_rows(),      schema.n_features(),
                      raw.n_dropped, schema.treatment,  schema.label};

    // Raw labels drive the stratified split; encoding happens afterwards,
    // fitted on the training part only.
    const std::size_t label_ci = raw.column_index(schema.label);
    std::vector<std::uint8_t> raw_labels(raw.n_rows());
    for (std::size_t i = 0; i < raw.n_rows(); ++i)
        raw_labels[i] = raw.rows[i][label_ci] == schema.positive_label ? 1 : 0;

    for (Method m : cfg.methods) report.methods.push_back({m, {}, 0, 0, 0, 0});

    for (std::size_t r = 0; r < cfg.repeats; ++r) {
        const std::uint64_t seed_r = mix_seed(cfg.master_seed, seed_purpose::kSplit, r);
        try {
            SplitSpec spec;
            spec.train_frac = cfg.train_frac;
            spec.val_frac = cfg.val_frac;
            spec.test_frac = cfg.test_frac;
            spec.seed = seed_r;
            spec.stratify = true;
            const SplitIndices idx = split_indices(raw_labels, spec);

            const Encoder enc = fit_encoder(raw.subset(idx.train), schema);
            const Dataset ds_train = transform(enc, raw.subset(idx.train));
            const Dataset ds_val = transform(enc, raw.subset(idx.val));
            const Dataset ds_test = transform(enc, raw.subset(idx.test));

            TrainConfig tc;
            tc.loss_kind = cfg.classifier.loss_kind;
            tc.l2_lambda = cfg.classifier.l2_lambda
                               ? *cfg.classifier.l2_lambda
                               : 1.0 / (cfg.classifier.svm_c * static_cast<double>(ds_train.n));
            tc.learning_rate = cfg.classifier.learning_rate;
            tc.max_epochs = cfg.classifier.max_epochs;
            tc.tol = cfg.classifier.tol;
            tc.seed = seed_r;

            for (auto& mr : report.methods) {
                LinearModel model;
                RepeatEntry entry;
                entry.repeat = r;
                entry.repeat_seed = seed_r;
                switch (mr.method) {
                    case Method::standard:
                        model = run_standard(ds_train, tc);
                        break;
                    case Method::counterfactual:
                        model = run_counterfactual_all(ds_train, tc, cfg.threads);
                        break;
                    case Method::ccral: {
                        CcralResult res = run_ccral(ds_train, ds_val, tc,
                                                    MarginGrid::make(cfg.k), cfg.threads);
                        model = std::move(res.model);
                        entry.selected_alpha = res.trace.selected_alpha;
                        break;
                    }
                }
                const EvalResult ev =
                    evaluate(ds_test.y, model.labels(ds_test), model.scores(ds_test));
                entry.test_accuracy = ev.accuracy;
                entry.test_auc = ev.auc;
                mr.entries.push_back(entry);
            }
        } catch (const Error& e) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "repeat %zu: ", r);
            report.repeat_errors.push_back(buf + std::string(e.what()));
        }
    }

    for (auto& mr : report.methods) recompute_aggregates(mr);
    return report;
}

void render_report(const ExperimentReport& report, std::ostream& out) {
    out << "dataset: " << report.dataset.path << "  (N=" << report.dataset.n_rows
        << ", M=" << report.dataset.n_features << ", T=" << report.dataset.treatment
        << ", y=" << report.dataset.label << ")\n";
    out << "repeats: " << report.config.repeats << "  seed: " << report.config.master_seed
        << "\n\n";

    char line[160];
    std::snprintf(line, sizeof(line), "%-16s %-20s %-20s %s\n", "method", "accuracy",
                  "auc", "selected_alpha");
    out << line;
    for (const auto& mr : report.methods) {
        MethodReport check = mr;
        recompute_aggregates(check);
        const auto close = [](double a, double b) { return std::abs(a - b) <= 1e-12; };
        if (!close(check.mean_accuracy, mr.mean_accuracy) ||
            !close(check.std_accuracy, mr.std_accuracy) ||
            !close(check.mean_auc, mr.mean_auc) || !close(check.std_auc, mr.std_auc))
            throw MalformedReport("stored aggregates disagree with per-repeat entries");

        std::string alphas;
        for (const auto& e : mr.entries) {
            if (!e.selected_alpha) continue;
            char a[16];
            std::snprintf(a, sizeof(a), "%.2f", *e.selected_alpha);
            alphas += (alphas.empty() ? "" : ",") + std::string(a);
        }
        std::snprintf(line, sizeof(line), "%-16s %.4f +/- %.4f     %.4f +/- %.4f     %s\n",
                      to_string(mr.method), mr.mean_accuracy, mr.std_accuracy, mr.mean_auc,
                      mr.std_auc, alphas.empty() ? "-" : alphas.c_str());
        out << line;
    }
    if (!report.repeat_errors.empty()) {
        out << "\nerrors:\n";
        for (const auto& e : report.repeat_errors) out << "  " << e << '\n';
    }
}

}  // namespace ccral

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ccral/linear_model.hpp"

namespace ccral {

enum class Method { standard, counterfactual, ccral };

const char* to_string(Method m);
Method method_from_string(const std::string& s);

struct ClassifierConfig {
    LossKind loss_kind = LossKind::logistic;
    double svm_c = 1.0;  // maps to l2_lambda = 1/(svm_c * n_train) when l2_lambda is unset
    std::optional<double> l2_lambda;
    double learning_rate = 0.1;
    std::size_t max_epochs = 500;
    double tol = 1e-7;
};

struct ExperimentConfig {
    std::string data_path;
    std::string schema_path;
    std::vector<Method> methods = {Method::standard, Method::counterfactual, Method::ccral};
    std::size_t k = 10;        // margin-grid iterations
    std::size_t repeats = 5;   // independent train-test splits
    double train_frac = 0.6;
    double val_frac = 0.2;
    double test_frac = 0.2;
    std::uint64_t master_seed = 0;
    ClassifierConfig classifier;
    std::string output_path;
    unsigned threads = 1;

    void validate() const;
    static ExperimentConfig from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

struct RepeatEntry {
    std::size_t repeat = 0;
    std::uint64_t repeat_seed = 0;
    double test_accuracy = 0.0;
    double test_auc = 0.0;
    std::optional<double> selected_alpha;  // ccral only
};

struct MethodReport {
    Method method = Method::standard;
    std::vector<RepeatEntry> entries;
    double mean_accuracy = 0.0;
    double std_accuracy = 0.0;
    double mean_auc = 0.0;
    double std_auc = 0.0;
};

struct DatasetDescriptor {
    std::string path;
    std::size_t n_rows = 0;      // usable rows after load
    std::size_t n_features = 0;  // schema feature columns, treatment included
    std::size_t n_dropped = 0;
    std::string treatment;
    std::string label;
};

struct ExperimentReport {
    std::string tool_version;
    DatasetDescriptor dataset;
    ExperimentConfig config;
    std::vector<MethodReport> methods;
    std::vector<std::string> repeat_errors;  // per-repeat failures, run continued

    nlohmann::json to_json() const;
    static ExperimentReport from_json(const nlohmann::json& j);
    void save(const std::string& path) const;
    static ExperimentReport load(const std::string& path);
};

// The full protocol: for each repeat, derive a child seed from the master
// seed, split the raw rows, fit the encoder on the training part only, run
// every requested method on identical splits, and evaluate on the held-out
// test part. Identical config (and input files) produces a byte-identical
// report. A failing repeat is recorded in repeat_errors and the remaining
// repeats still run.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

// Text rendering with aggregates recomputed from the per-repeat entries;
// throws MalformedReport when they disagree with the stored values.
void render_report(const ExperimentReport& report, std::ostream& out);

// Population mean/std over v (std = 0 for a single entry).
std::pair<double, double> mean_std(const std::vector<double>& v);

}  // namespace ccral

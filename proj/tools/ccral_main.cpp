// ccral command line: run experiments, generate synthetic tables, render
// reports. Exit codes: 0 success, 1 usage error, 2 data error, 3 training
// error.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ccral/csv.hpp"
#include "ccral/errors.hpp"
#include "ccral/experiment.hpp"
#include "ccral/schema.hpp"
#include "ccral/synthetic.hpp"
#include "ccral/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitTraining = 3;

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

int classify_error(const ccral::Error& e) {
    using namespace ccral;
    if (dynamic_cast<const BadConfig*>(&e) || dynamic_cast<const AlphaOutOfRange*>(&e))
        return kExitUsage;
    if (dynamic_cast<const FileUnreadable*>(&e) || dynamic_cast<const HeaderMismatch*>(&e) ||
        dynamic_cast<const EmptyTable*>(&e) || dynamic_cast<const LayoutMismatch*>(&e) ||
        dynamic_cast<const UnknownKind*>(&e) || dynamic_cast<const MalformedReport*>(&e) ||
        dynamic_cast<const ConstantTreatment*>(&e))
        return kExitData;
    return kExitTraining;
}

std::string schema_path_for(const std::string& csv_path) {
    const auto dot = csv_path.rfind('.');
    const auto base = dot == std::string::npos ? csv_path : csv_path.substr(0, dot);
    return base + ".schema.json";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"CCRAL: counterfactual data augmentation with active learning"};
    app.set_version_flag("--version", std::string("ccral ") + ccral::kVersion);
    app.require_subcommand(1);

    // --- run ---
    auto* run = app.add_subcommand("run", "run an experiment and write a JSON report");
    std::string config_path, data_path, schema_path, methods_str, split_str, loss_str, out_path;
    std::uint64_t seed = 0;
    std::size_t k = 0, repeats = 0;
    unsigned threads = 0;
    run->add_option("--config", config_path, "JSON config; flags override its values");
    run->add_option("--data", data_path, "input CSV");
    run->add_option("--schema", schema_path, "schema JSON");
    run->add_option("--methods", methods_str, "comma list of standard,counterfactual,ccral");
    run->add_option("--k", k, "margin grid iterations (default 10)");
    run->add_option("--repeats", repeats, "number of train-test splits (default 5)");
    run->add_option("--seed", seed, "64-bit master seed");
    run->add_option("--split", split_str, "train,val,test fractions, e.g. 0.6,0.2,0.2");
    run->add_option("--classifier", loss_str, "loss kind: logistic or hinge");
    run->add_option("--out", out_path, "report output path");
    run->add_option("--threads", threads, "worker threads for matching (default 1)");

    // --- gen-synth ---
    auto* gen = app.add_subcommand("gen-synth", "generate a synthetic CSV plus schema");
    std::size_t g_n = 1000, g_dims = 5;
    double g_effect = 2.0, g_noise = 0.1;
    std::uint64_t g_seed = 0;
    std::string g_out;
    gen->add_option("--n", g_n, "number of rows");
    gen->add_option("--dims", g_dims, "continuous feature count");
    gen->add_option("--effect", g_effect, "treatment interaction strength");
    gen->add_option("--noise", g_noise, "label noise stddev");
    gen->add_option("--seed", g_seed, "generator seed");
    gen->add_option("--out", g_out, "output CSV path")->required();

    // --- report ---
    auto* rep = app.add_subcommand("report", "render a report as a text table");
    std::string in_path;
    rep->add_option("--in", in_path, "report JSON path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (run->parsed()) {
            ccral::ExperimentConfig cfg;
            if (!config_path.empty()) {
                std::ifstream in(config_path);
                if (!in) throw ccral::FileUnreadable("cannot open " + config_path);
                nlohmann::json j;
                try {
                    in >> j;
                } catch (const nlohmann::json::exception& e) {
                    throw ccral::BadConfig(config_path + ": " + e.what());
                }
                cfg = ccral::ExperimentConfig::from_json(j);
            }
            if (run->count("--data")) cfg.data_path = data_path;
            if (run->count("--schema")) cfg.schema_path = schema_path;
            if (run->count("--methods")) {
                cfg.methods.clear();
                for (const auto& m : split_commas(methods_str))
                    cfg.methods.push_back(ccral::method_from_string(m));
            }
            if (run->count("--k")) cfg.k = k;
            if (run->count("--repeats")) cfg.repeats = repeats;
            if (run->count("--seed")) cfg.master_seed = seed;
            if (run->count("--split")) {
                const auto parts = split_commas(split_str);
                if (parts.size() != 3)
                    throw ccral::BadConfig("--split expects three comma-separated fractions");
                cfg.train_frac = std::stod(parts[0]);
                cfg.val_frac = std::stod(parts[1]);
                cfg.test_frac = std::stod(parts[2]);
            }
            if (run->count("--classifier"))
                cfg.classifier.loss_kind = ccral::loss_kind_from_string(loss_str);
            if (run->count("--out")) cfg.output_path = out_path;
            if (run->count("--threads")) cfg.threads = threads;
            if (cfg.data_path.empty() || cfg.schema_path.empty())
                throw ccral::BadConfig("run requires --data and --schema (or a config file)");

            const ccral::ExperimentReport report = ccral::run_experiment(cfg);
            if (!cfg.output_path.empty()) report.save(cfg.output_path);
            ccral::render_report(report, std::cout);

            bool any_success = false;
            for (const auto& mr : report.methods) any_success |= !mr.entries.empty();
            if (!any_success) {
                std::cerr << "every repeat failed\n";
                return kExitTraining;
            }
            return kExitOk;
        }

        if (gen->parsed()) {
            const ccral::RawTable table =
                ccral::generate_synthetic(g_n, g_dims, g_effect, g_noise, g_seed);
            ccral::write_csv(g_out, table);
            const std::string sp = schema_path_for(g_out);
            ccral::synthetic_schema(g_dims).save(sp);
            std::cout << "wrote " << g_out << " (" << table.n_rows() << " rows) and " << sp
                      << '\n';
            return kExitOk;
        }

        if (rep->parsed()) {
            ccral::render_report(ccral::ExperimentReport::load(in_path), std::cout);
            return kExitOk;
        }
    } catch (const ccral::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return classify_error(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

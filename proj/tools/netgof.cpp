#include "netgof/config.hpp"
#include "netgof/error.hpp"
#include "netgof/estimators.hpp"
#include "netgof/gof.hpp"
#include "netgof/graph.hpp"
#include "netgof/harness.hpp"
#include "netgof/models.hpp"
#include "netgof/table.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitDataset = 3;

struct InputOptions {
    std::string path;
    std::string indexing = "zero";
};

struct ModelOptions {
    std::string model;
    int k = 0;
    int d = 1;
    std::string signature;
};

netgof::Indexing parse_indexing(const std::string& s) {
    if (s == "zero") return netgof::Indexing::ZeroBased;
    if (s == "one") return netgof::Indexing::OneBased;
    throw netgof::ConfigError("--indexing must be zero or one");
}

netgof::AdjacencyMatrix load_input(const InputOptions& in) {
    auto loaded = netgof::load_edge_list_file(in.path, parse_indexing(in.indexing));
    if (loaded.stats.self_loops > 0 || loaded.stats.duplicates > 0)
        std::cerr << "note: dropped " << loaded.stats.self_loops << " self-loop(s) and " << loaded.stats.duplicates
                  << " duplicate edge(s)\n";
    return std::move(loaded.adjacency);
}

netgof::CandidateModel candidate_from(const ModelOptions& m) {
    std::string text = m.model;
    if (text.find(':') == std::string::npos) {
        if (text == "sbm" || text == "dcsbm" || text == "dcmm") {
            if (m.k < 1) throw netgof::ConfigError("--model " + text + " needs --k");
            text += ":" + std::to_string(m.k);
        } else if (text == "lsm") {
            text += ":" + std::to_string(m.d);
            if (!m.signature.empty()) text += ":" + m.signature;
        }
    }
    try {
        return netgof::parse_candidate(text);
    } catch (const netgof::InvalidArgument& err) {
        throw netgof::ConfigError(err.what());
    }
}

void add_input(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("--input,-i", in.path, "Edge list file")->required();
    cmd->add_option("--indexing", in.indexing, "Node ids are zero- or one-based")
        ->check(CLI::IsMember({"zero", "one"}));
}

void add_model(CLI::App* cmd, ModelOptions& m) {
    cmd->add_option("--model,-m", m.model, "er, beta, sbm, dcsbm, dcmm, lsm (or e.g. sbm:3)")->required();
    cmd->add_option("--k", m.k, "Number of communities");
    cmd->add_option("--d", m.d, "Latent dimension for lsm");
    cmd->add_option("--signature", m.signature, "Eigenvalue signature a,b for lsm");
}

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json to_json(const Eigen::VectorXd& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(number(v(i)));
    return out;
}

json to_json(const Eigen::MatrixXd& m) {
    json out = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(to_json(Eigen::VectorXd(m.row(i).transpose())));
    return out;
}

json parameters_json(const netgof::EstimatedParameters& p) {
    return std::visit(
        [](const auto& e) -> json {
            using T = std::decay_t<decltype(e)>;
            namespace est = netgof::estimate;
            if constexpr (std::is_same_v<T, est::ErdosRenyi>) return {{"p", e.p}};
            else if constexpr (std::is_same_v<T, est::Beta>) return {{"beta", to_json(e.beta)}};
            else if constexpr (std::is_same_v<T, est::Block>)
                return {{"labels", e.labels}, {"block_probs", to_json(e.block_probs)}};
            else if constexpr (std::is_same_v<T, est::DegreeCorrectedBlock>)
                return {{"labels", e.labels}, {"theta", to_json(e.theta)}, {"block_edges", to_json(e.block_edges)}};
            else if constexpr (std::is_same_v<T, est::MixedMembership>)
                return {{"memberships", to_json(e.memberships)},
                        {"theta", to_json(e.theta)},
                        {"block_probs", to_json(e.block_probs)},
                        {"corners", e.corners}};
            else
                return {{"positions", to_json(e.positions)},
                        {"signature", {e.signature.positive, e.signature.negative}},
                        {"eigenvalues", to_json(e.eigenvalues)}};
        },
        p);
}

json diagnostics_json(const netgof::FittedModel& f) {
    return {{"family", std::string(netgof::family_name(f.family))},
            {"iterations", f.diagnostics.iterations},
            {"residual", number(f.diagnostics.residual)},
            {"warnings", f.diagnostics.warnings}};
}

json truth_json(const netgof::GroundTruthModel& model) {
    json out = {{"family", netgof::family_name(model)}, {"n", netgof::node_count(model)}};
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, netgof::ErdosRenyiModel>) {
                out["p"] = m.p;
            } else if constexpr (std::is_same_v<T, netgof::BetaModel>) {
                out["beta"] = to_json(m.beta);
            } else if constexpr (std::is_same_v<T, netgof::BlockModel>) {
                out["block_probs"] = to_json(m.block_probs);
                out["labels"] = m.labels;
            } else if constexpr (std::is_same_v<T, netgof::DegreeCorrectedBlockModel>) {
                out["block_probs"] = to_json(m.block_probs);
                out["labels"] = m.labels;
                out["theta"] = to_json(m.theta);
            } else if constexpr (std::is_same_v<T, netgof::MixedMembershipModel>) {
                out["block_probs"] = to_json(m.block_probs);
                out["memberships"] = to_json(m.memberships.dense());
                out["theta"] = to_json(m.theta);
            } else {
                out["positions"] = to_json(m.positions);
                out["signature"] = {m.positive, m.negative};
            }
        },
        model);
    return out;
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw netgof::Error("cannot open '" + path + "' for writing");
    return file;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Goodness-of-fit testing for network models"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "Sample a graph from a simulation preset");
    std::string preset = "er", gen_out, spread = "0";
    int gen_n = 400;
    std::uint64_t gen_seed = 1;
    netgof::PresetParams params;
    gen->add_option("--preset", preset, "er, beta_linear, sbm_planted, dcsbm_zhao, lsm_sine, dcmm_table11");
    gen->add_option("--n", gen_n, "Number of nodes");
    gen->add_option("--rho", params.rho, "Sparsity / scale");
    gen->add_option("--k", params.k, "Communities");
    gen->add_option("--ln", spread, "beta_linear spread: number, log^a or loglog^a");
    gen->add_option("--x", params.x, "dcmm_table11 mixing weight");
    gen->add_option("--n0", params.n0, "dcmm_table11 pure nodes per community");
    gen->add_option("--z", params.z, "dcmm_table11 degree spread");
    gen->add_option("--seed", gen_seed, "Base seed");
    gen->add_option("--out,-o", gen_out, "Output edge list (default stdout)");

    // fit
    auto* fitc = app.add_subcommand("fit", "Fit a candidate model");
    InputOptions fit_in;
    ModelOptions fit_model;
    std::uint64_t fit_seed = 1;
    add_input(fitc, fit_in);
    add_model(fitc, fit_model);
    fitc->add_option("--seed", fit_seed, "Seed for clustering");

    // test
    auto* testc = app.add_subcommand("test", "Goodness-of-fit test of a candidate model");
    InputOptions test_in;
    ModelOptions test_model;
    double test_alpha = 0.05;
    std::uint64_t test_seed = 1;
    std::string test_format = "json";
    add_input(testc, test_in);
    add_model(testc, test_model);
    testc->add_option("--alpha", test_alpha, "Significance level");
    testc->add_option("--seed", test_seed, "Seed for clustering");
    testc->add_option("--format", test_format, "json or text")->check(CLI::IsMember({"json", "text"}));

    // select-k
    auto* selc = app.add_subcommand("select-k", "Sequential estimate of the number of communities");
    InputOptions sel_in;
    int sel_kmax = 10;
    double sel_alpha = 0.001;
    std::uint64_t sel_seed = 1;
    bool sel_all = false;
    add_input(selc, sel_in);
    selc->add_option("--kmax", sel_kmax, "Largest K0 tried");
    selc->add_option("--alpha", sel_alpha, "Significance level");
    selc->add_option("--seed", sel_seed, "Seed for clustering");
    selc->add_flag("--exhaustive", sel_all, "Evaluate every K0 up to kmax");

    // simulate
    auto* simc = app.add_subcommand("simulate", "Run a Monte-Carlo or real-data experiment");
    std::string sim_kind, sim_config, sim_out, sim_format = "csv", sim_qq;
    std::optional<std::uint64_t> sim_seed;
    std::optional<int> sim_reps;
    int sim_jobs = 1;
    simc->add_option("--experiment,-e", sim_kind, "null, size, power, kest or real");
    simc->add_option("--config,-c", sim_config, "Experiment config file");
    simc->add_option("--seed", sim_seed, "Override the base seed");
    simc->add_option("--reps", sim_reps, "Override the replication count");
    simc->add_option("--out,-o", sim_out, "Result table path (default stdout)");
    simc->add_option("--format", sim_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    simc->add_option("--qq-out", sim_qq, "Q-Q point file for the null experiment");
    simc->add_option("--jobs,-j", sim_jobs, "Worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (gen->parsed()) {
            netgof::SeededStream stream(gen_seed, 0);
            params.ln = netgof::parse_spread(spread).resolve(gen_n);
            netgof::Preset p;
            try {
                p = netgof::parse_preset(preset);
            } catch (const netgof::InvalidArgument& err) {
                throw netgof::ConfigError(err.what());
            }
            netgof::Setting s;
            s.n = gen_n;
            s.params = params;
            const auto r = [&] {
                try {
                    return netgof::draw_replicate(p, s, stream);
                } catch (const netgof::InvalidArgument& err) {
                    throw netgof::ConfigError(err.what());
                }
            }();
            std::ofstream file;
            netgof::write_edge_list(open_output(gen_out, file), r.a);
            if (!gen_out.empty() && gen_out != "-") {
                json sidecar = {{"preset", preset}, {"seed", gen_seed}, {"ln", spread}, {"model", truth_json(r.model)}};
                std::ofstream side(gen_out + ".json", std::ios::binary);
                if (!side) throw netgof::Error("cannot open '" + gen_out + ".json' for writing");
                side << sidecar.dump(2) << '\n';
            }
        } else if (fitc->parsed()) {
            const auto a = load_input(fit_in);
            netgof::SeededStream stream(fit_seed, 0);
            const auto f = netgof::fit(a, candidate_from(fit_model), stream);
            json out = diagnostics_json(f);
            out["parameters"] = parameters_json(f.parameters);
            std::cout << out.dump(2) << '\n';
        } else if (testc->parsed()) {
            const auto a = load_input(test_in);
            const auto candidate = candidate_from(test_model);
            netgof::SeededStream stream(test_seed, 0);
            const auto t = netgof::gof_test(a, candidate, test_alpha, stream);
            const bool reject = t.decision == netgof::Decision::Reject;
            if (test_format == "json") {
                json out = {{"candidate", netgof::to_string(candidate)},
                            {"statistic", t.statistic},
                            {"p_value", t.p_value},
                            {"alpha", t.alpha},
                            {"decision", reject ? "reject" : "accept"},
                            {"fit", diagnostics_json(t.fit)}};
                std::cout << out.dump(2) << '\n';
            } else {
                std::cout << netgof::to_string(candidate) << ": T = " << t.statistic << ", p = " << t.p_value << ", "
                          << (reject ? "reject" : "accept") << " at alpha = " << t.alpha << '\n';
            }
        } else if (selc->parsed()) {
            const auto a = load_input(sel_in);
            netgof::SeededStream stream(sel_seed, 0);
            netgof::SelectOptions opts;
            opts.exhaustive = sel_all;
            const auto r = netgof::select_k_dcmm(a, sel_kmax, sel_alpha, stream, opts);
            json trace = json::array();
            for (const auto& s : r.trace) {
                json step = {{"k", s.k},
                             {"statistic", s.statistic ? json(*s.statistic) : json(nullptr)},
                             {"p_value", s.p_value ? json(*s.p_value) : json(nullptr)},
                             {"accepted", s.accepted}};
                if (!s.warning.empty()) step["warning"] = s.warning;
                trace.push_back(std::move(step));
            }
            json out = {{"k_hat", r.k_hat ? json(*r.k_hat) : json(nullptr)},
                        {"k_max", r.k_max},
                        {"alpha", r.alpha},
                        {"trace", std::move(trace)}};
            std::cout << out.dump(2) << '\n';
        } else if (simc->parsed()) {
            netgof::ExperimentConfig config;
            if (!sim_config.empty()) {
                config = netgof::parse_config_file(sim_config);
                if (!sim_kind.empty()) {
                    const auto kind = netgof::parse_experiment_kind(sim_kind);
                    if (kind != config.kind)
                        throw netgof::ConfigError("--experiment " + sim_kind + " contradicts the config file");
                }
            } else if (!sim_kind.empty()) {
                config = netgof::default_config(netgof::parse_experiment_kind(sim_kind));
            } else {
                throw netgof::ConfigError("simulate needs --experiment or --config");
            }
            if (sim_seed) config.base_seed = *sim_seed;
            if (sim_reps) config.replications = *sim_reps;
            if (!sim_out.empty()) config.output = sim_out;
            config.validate();
            const auto format = netgof::parse_table_format(sim_format);

            netgof::ResultTable table;
            switch (config.kind) {
                case netgof::ExperimentKind::NullQq: {
                    const auto report = netgof::run_null_qq(config, sim_jobs);
                    table = report.table;
                    if (!sim_qq.empty()) {
                        std::ofstream qq(sim_qq, std::ios::binary);
                        if (!qq) throw netgof::Error("cannot open '" + sim_qq + "' for writing");
                        netgof::write_qq_points(report, qq);
                    }
                    break;
                }
                case netgof::ExperimentKind::Size: table = netgof::run_size(config, sim_jobs); break;
                case netgof::ExperimentKind::Power: table = netgof::run_power(config, sim_jobs); break;
                case netgof::ExperimentKind::KEstimation: table = netgof::run_kest(config, sim_jobs); break;
                case netgof::ExperimentKind::Real: {
                    std::vector<std::string> notices;
                    table = netgof::run_real(config, &notices);
                    for (const auto& n : notices) std::cerr << "notice: " << n << '\n';
                    std::size_t missing = 0;
                    for (const auto& n : notices)
                        if (n.rfind("skipping dataset", 0) == 0) ++missing;
                    if (missing == config.datasets.size())
                        throw netgof::DatasetMissing("no dataset file could be found");
                    break;
                }
            }
            if (config.output.empty() || config.output == "-")
                netgof::emit(table, format, std::cout);
            else
                netgof::emit_file(table, format, config.output);
        }
    } catch (const netgof::ConfigError& err) {
        std::cerr << "configuration error: " << err.what() << '\n';
        return kExitConfig;
    } catch (const netgof::DatasetMissing& err) {
        std::cerr << "dataset missing: " << err.what() << '\n';
        return kExitDataset;
    } catch (const netgof::ParseError& err) {
        std::cerr << "parse error: " << err.what() << '\n';
        return kExitConfig;
    } catch (const netgof::UntestableCandidate& err) {
        std::cerr << err.what() << '\n';
        return kExitFailure;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

#include "netgof/harness.hpp"

#include "netgof/error.hpp"
#include "netgof/normal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <optional>
#include <ostream>

namespace netgof {

void parallel_for(int count, int jobs, const std::function<void(int)>& body) {
    if (count <= 0) return;
    if (jobs <= 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    jobs = std::min(jobs, count);
    if (jobs == 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::mutex error_mutex;
    int error_index = std::numeric_limits<int>::max();
    std::exception_ptr error;
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            try {
                body(i);
            } catch (...) {
                // Keep the failure with the lowest index so the reported error
                // does not depend on scheduling.
                std::lock_guard lock(error_mutex);
                if (i < error_index) {
                    error_index = i;
                    error = std::current_exception();
                }
            }
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

bool uses_rho(Preset p) { return p != Preset::BetaLinear; }
bool uses_k(Preset p) { return p == Preset::SbmPlanted || p == Preset::DcsbmZhao || p == Preset::DcmmTable11; }

}  // namespace

std::string Setting::key(Preset truth) const {
    std::string k = "truth=" + std::string(preset_name(truth)) + ";n=" + std::to_string(n);
    if (uses_rho(truth)) k += ";rho=" + num(params.rho);
    if (truth == Preset::BetaLinear) k += ";ln=" + spread_label;
    if (uses_k(truth)) k += ";k=" + std::to_string(params.k);
    if (truth == Preset::DcmmTable11)
        k += ";x=" + num(params.x) + ";n0=" + std::to_string(params.n0) + ";z=" + num(params.z);
    return k;
}

std::vector<Setting> expand_grid(const ExperimentConfig& config) {
    const Preset truth = config.truth;
    const bool dcmm = truth == Preset::DcmmTable11;
    // Grids a preset ignores collapse to their first value.
    const std::vector<double> rho = uses_rho(truth) ? config.rho : std::vector<double>{config.rho.front()};
    const std::vector<SpreadSpec> ln =
        truth == Preset::BetaLinear ? config.ln : std::vector<SpreadSpec>{config.ln.front()};
    const std::vector<double> xs = dcmm ? config.x : std::vector<double>{config.x.front()};
    const std::vector<int> n0s = dcmm ? config.n0 : std::vector<int>{config.n0.front()};
    const std::vector<double> zs = dcmm ? config.z : std::vector<double>{config.z.front()};

    std::vector<Setting> out;
    for (int n : config.n)
        for (double r : rho)
            for (const auto& spread : ln)
                for (double x : xs)
                    for (int n0 : n0s)
                        for (double z : zs) {
                            Setting s;
                            s.n = n;
                            s.params.rho = r;
                            s.params.k = config.k;
                            s.params.ln = spread.resolve(n);
                            s.params.x = x;
                            s.params.n0 = n0;
                            s.params.z = z;
                            s.spread_label = spread.label;
                            out.push_back(std::move(s));
                        }
    return out;
}

Replicate draw_replicate(Preset truth, const Setting& setting, SeededStream& stream) {
    SeededStream model_stream = stream.split(1);
    SeededStream edge_stream = stream.split(2);
    GroundTruthModel model = make_preset(truth, setting.n, setting.params, model_stream);
    ProbabilityMatrix p = build_probability_matrix(model);
    AdjacencyMatrix a = sample_adjacency(p, edge_stream);
    return Replicate{std::move(model), std::move(p), std::move(a)};
}

SeededStream replication_stream(std::uint64_t base_seed, Preset truth, const Setting& setting, int rep) {
    return derive_stream(base_seed, fnv1a64(setting.key(truth)), static_cast<std::uint64_t>(rep));
}

double ks_distance_normal(std::vector<double> sample) {
    if (sample.empty()) throw InvalidArgument("KS distance of an empty sample");
    std::sort(sample.begin(), sample.end());
    const double m = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = normal_cdf(sample[i]);
        d = std::max({d, (static_cast<double>(i) + 1.0) / m - f, f - static_cast<double>(i) / m});
    }
    return d;
}

namespace {

// Outcome of one candidate on one replication; nullopt when untestable.
using Outcomes = std::vector<std::vector<std::optional<double>>>;  // [candidate][rep]

SeededStream fit_stream(SeededStream& rep_stream) { return rep_stream.split(3); }

Outcomes run_statistics(const ExperimentConfig& config, const Setting& setting, int jobs) {
    const std::size_t nc = config.candidates.size();
    std::vector<std::optional<CandidateModel>> parsed;
    for (const auto& c : config.candidates) {
        if (c == "oracle") parsed.emplace_back(std::nullopt);
        else parsed.emplace_back(parse_candidate(c));
    }
    Outcomes out(nc, std::vector<std::optional<double>>(static_cast<std::size_t>(config.replications)));
    parallel_for(config.replications, jobs, [&](int rep) {
        SeededStream stream = replication_stream(config.base_seed, config.truth, setting, rep);
        const Replicate r = draw_replicate(config.truth, setting, stream);
        for (std::size_t c = 0; c < nc; ++c) {
            if (!parsed[c]) {
                out[c][rep] = statistic(normalize_true(r.a, r.p));
                continue;
            }
            SeededStream fs = fit_stream(stream);
            try {
                out[c][rep] = gof_test(r.a, *parsed[c], config.alpha, fs).statistic;
            } catch (const UntestableCandidate&) {
                out[c][rep] = std::nullopt;
            }
        }
    });
    return out;
}

std::string setting_key(const ExperimentConfig& config, const Setting& s, const std::string& candidate) {
    return s.key(config.truth) + ";candidate=" + candidate;
}

ResultTable rejection_table(const ExperimentConfig& config, int jobs, const std::string& metric) {
    config.validate();
    ResultTable table;
    const double threshold = normal_quantile(1.0 - config.alpha / 2.0);
    for (const auto& s : expand_grid(config)) {
        const Outcomes out = run_statistics(config, s, jobs);
        for (std::size_t c = 0; c < config.candidates.size(); ++c) {
            std::int64_t tested = 0, rejected = 0, excluded = 0;
            for (const auto& t : out[c]) {
                if (!t) {
                    ++excluded;
                    continue;
                }
                ++tested;
                if (std::abs(*t) >= threshold) ++rejected;
            }
            ResultRow row;
            row.setting = setting_key(config, s, config.candidates[c]);
            row.metric = metric;
            row.replications = tested;
            row.excluded = excluded;
            if (tested > 0) {
                row.estimate = static_cast<double>(rejected) / static_cast<double>(tested);
                row.std_error = std::sqrt(row.estimate * (1.0 - row.estimate) / static_cast<double>(tested));
            } else {
                row.estimate = row.std_error = std::numeric_limits<double>::quiet_NaN();
            }
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

struct Moments {
    double mean = 0.0;
    double variance = 0.0;  // m - 1 denominator
};

Moments moments(const std::vector<double>& v) {
    Moments m;
    if (v.empty()) return {std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()};
    for (double x : v) m.mean += x;
    m.mean /= static_cast<double>(v.size());
    if (v.size() < 2) {
        m.variance = std::numeric_limits<double>::quiet_NaN();
        return m;
    }
    for (double x : v) m.variance += (x - m.mean) * (x - m.mean);
    m.variance /= static_cast<double>(v.size() - 1);
    return m;
}

}  // namespace

QqReport run_null_qq(const ExperimentConfig& config, int jobs) {
    config.validate();
    QqReport report;
    for (const auto& s : expand_grid(config)) {
        const Outcomes out = run_statistics(config, s, jobs);
        for (std::size_t c = 0; c < config.candidates.size(); ++c) {
            QqSeries series;
            series.setting = setting_key(config, s, config.candidates[c]);
            for (const auto& t : out[c]) {
                if (t) series.sample.push_back(*t);
                else ++series.excluded;
            }
            std::sort(series.sample.begin(), series.sample.end());
            const std::size_t m = series.sample.size();
            for (std::size_t i = 0; i < m; ++i)
                series.theoretical.push_back(normal_quantile((static_cast<double>(i) + 0.5) / static_cast<double>(m)));

            const auto reps = static_cast<std::int64_t>(m);
            const Moments mo = moments(series.sample);
            const double nan = std::numeric_limits<double>::quiet_NaN();
            series.ks = m > 0 ? ks_distance_normal(series.sample) : nan;
            const double md = static_cast<double>(m);
            report.table.rows.push_back({series.setting, "ks", series.ks, 0.0, reps, series.excluded});
            report.table.rows.push_back(
                {series.setting, "mean", mo.mean, m > 1 ? std::sqrt(mo.variance / md) : nan, reps, series.excluded});
            report.table.rows.push_back({series.setting, "variance", mo.variance,
                                         m > 1 ? mo.variance * std::sqrt(2.0 / (md - 1.0)) : nan, reps,
                                         series.excluded});
            report.series.push_back(std::move(series));
        }
    }
    return report;
}

ResultTable run_size(const ExperimentConfig& config, int jobs) { return rejection_table(config, jobs, "size"); }

ResultTable run_power(const ExperimentConfig& config, int jobs) { return rejection_table(config, jobs, "power"); }

ResultTable run_kest(const ExperimentConfig& config, int jobs) {
    config.validate();
    ResultTable table;
    for (const auto& s : expand_grid(config)) {
        std::vector<std::optional<int>> k_hat(static_cast<std::size_t>(config.replications));
        parallel_for(config.replications, jobs, [&](int rep) {
            SeededStream stream = replication_stream(config.base_seed, config.truth, s, rep);
            const Replicate r = draw_replicate(config.truth, s, stream);
            SeededStream fs = fit_stream(stream);
            k_hat[rep] = select_k_dcmm(r.a, config.k_max, config.alpha, fs).k_hat;
        });

        const auto reps = static_cast<std::int64_t>(k_hat.size());
        std::vector<double> found;
        std::int64_t correct = 0;
        for (const auto& k : k_hat) {
            if (!k) continue;
            found.push_back(*k);
            if (*k == s.params.k) ++correct;
        }
        const auto none = reps - static_cast<std::int64_t>(found.size());
        const double p = static_cast<double>(correct) / static_cast<double>(reps);
        const double none_rate = static_cast<double>(none) / static_cast<double>(reps);
        const Moments mo = moments(found);
        const auto key = s.key(config.truth);
        const auto m = static_cast<std::int64_t>(found.size());
        const double nan = std::numeric_limits<double>::quiet_NaN();
        table.rows.push_back({key, "p_correct", p, std::sqrt(p * (1 - p) / static_cast<double>(reps)), reps, 0});
        table.rows.push_back(
            {key, "mean_k", mo.mean, m > 1 ? std::sqrt(mo.variance / static_cast<double>(m)) : nan, m, none});
        table.rows.push_back({key, "var_k", mo.variance, nan, m, none});
        table.rows.push_back(
            {key, "none_rate", none_rate, std::sqrt(none_rate * (1 - none_rate) / static_cast<double>(reps)), reps, 0});
    }
    return table;
}

namespace {

bool needs_k(const std::string& c) { return c == "sbm" || c == "dcsbm" || c == "dcmm"; }

AdjacencyMatrix load_dataset(const DatasetSpec& spec) {
    if (!spec.trade_matrix) return load_edge_list_file(spec.path, spec.indexing).adjacency;
    std::ifstream in(spec.path);
    if (!in) throw DatasetMissing("dataset file '" + spec.path + "' not found");
    return threshold_weights(load_dense_matrix(in));
}

}  // namespace

ResultTable run_real(const ExperimentConfig& config, std::vector<std::string>* notices) {
    config.validate();
    ResultTable table;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (const auto& ds : config.datasets) {
        if (!std::filesystem::exists(ds.path)) {
            if (notices) notices->push_back("skipping dataset " + ds.name + ": file '" + ds.path + "' not found");
            continue;
        }
        const AdjacencyMatrix a = load_dataset(ds);
        for (const auto& c : config.candidates) {
            std::string name = c;
            if (needs_k(c)) {
                if (!ds.k) throw ConfigError("candidate " + c + " needs k= on dataset " + ds.name);
                name += ":" + std::to_string(*ds.k);
            }
            const CandidateModel candidate = parse_candidate(name);
            const std::string key = "dataset=" + ds.name + ";candidate=" + name;
            SeededStream stream = derive_stream(config.base_seed, fnv1a64(key), 0);
            try {
                const TestResult t = gof_test(a, candidate, config.alpha, stream);
                table.rows.push_back({key, "statistic", t.statistic, 0.0, 1, 0});
                table.rows.push_back({key, "p_value", t.p_value, 0.0, 1, 0});
            } catch (const UntestableCandidate& err) {
                if (notices) notices->push_back(err.what());
                table.rows.push_back({key, "statistic", nan, nan, 0, 1});
                table.rows.push_back({key, "p_value", nan, nan, 0, 1});
            }
        }
    }
    return table;
}

void write_qq_points(const QqReport& report, std::ostream& out) {
    out << "setting,theoretical,sample\n";
    char buf[64];
    for (const auto& s : report.series)
        for (std::size_t i = 0; i < s.sample.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.10f,%.10f", s.theoretical[i], s.sample[i]);
            out << s.setting << ',' << buf << '\n';
        }
}

}  // namespace netgof

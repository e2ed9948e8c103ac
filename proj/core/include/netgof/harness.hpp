#pragma once

#include "netgof/config.hpp"
#include "netgof/estimators.hpp"
#include "netgof/gof.hpp"
#include "netgof/models.hpp"
#include "netgof/table.hpp"

#include <atomic>
#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace netgof {

/// Runs body(i) for i in [0, count) on up to `jobs` threads. Work is pulled
/// from a shared counter; callers write results by index so the output does
/// not depend on scheduling.
void parallel_for(int count, int jobs, const std::function<void(int)>& body);

/// A point in a parameter grid.
struct Setting {
    int n = 0;
    PresetParams params;
    std::string spread_label;

    /// Canonical "truth=...;n=...;..." key listing the parameters the preset
    /// uses. Doubles as the seed material for experiment ids.
    std::string key(Preset truth) const;
};

std::vector<Setting> expand_grid(const ExperimentConfig& config);

/// Sampled ground truth for one replication of one setting.
struct Replicate {
    GroundTruthModel model;
    ProbabilityMatrix p;
    AdjacencyMatrix a;
};

Replicate draw_replicate(Preset truth, const Setting& setting, SeededStream& stream);

/// Stream for replication `rep` of a setting; independent of the candidate so
/// every candidate is tested on the same graphs.
SeededStream replication_stream(std::uint64_t base_seed, Preset truth, const Setting& setting,
                                int rep);

struct QqSeries {
    std::string setting;
    std::vector<double> sample;       // sorted statistics
    std::vector<double> theoretical;  // N(0,1) quantiles at (i - 1/2) / m
    double ks = 0.0;
    std::int64_t excluded = 0;
};

struct QqReport {
    std::vector<QqSeries> series;
    ResultTable table;  // ks, mean and variance rows per series
};

/// One-sample Kolmogorov-Smirnov distance of `sample` against N(0,1).
double ks_distance_normal(std::vector<double> sample);

/// Candidate "oracle" normalises with the true probabilities.
QqReport run_null_qq(const ExperimentConfig& config, int jobs);
ResultTable run_size(const ExperimentConfig& config, int jobs);
ResultTable run_power(const ExperimentConfig& config, int jobs);
ResultTable run_kest(const ExperimentConfig& config, int jobs);

/// p-value per (dataset, candidate). Missing files are skipped with a notice
/// written to `notices`.
ResultTable run_real(const ExperimentConfig& config, std::vector<std::string>* notices = nullptr);

void write_qq_points(const QqReport& report, std::ostream& out);

}  // namespace netgof

#pragma once

#include "netgof/graph.hpp"
#include "netgof/models.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace netgof {

enum class ExperimentKind { NullQq, Size, Power, KEstimation, Real };

ExperimentKind parse_experiment_kind(std::string_view text);
std::string_view experiment_kind_name(ExperimentKind kind);

/// Beta-model spread, either a constant or a power of log n / log log n.
struct SpreadSpec {
    enum class Base { Constant, Log, LogLog };

    Base base = Base::Constant;
    double value = 0.0;     // constant value, or exponent for Log/LogLog
    std::string label = "0";

    double resolve(int n) const;
};

/// Parses "0", "1.5", "log^1/2", "loglog^1/3" or "loglog".
SpreadSpec parse_spread(std::string_view text);

struct DatasetSpec {
    std::string name;
    std::string path;
    std::optional<int> k;
    Indexing indexing = Indexing::ZeroBased;
    bool trade_matrix = false;  // dense export matrix, thresholded at the median weight
};

/// One experiment. Parameter grids multiply out into settings; the
/// candidate list applies to every setting.
struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::Size;
    Preset truth = Preset::ErdosRenyi;
    std::vector<int> n{400};
    std::vector<double> rho{0.05};
    std::vector<SpreadSpec> ln{SpreadSpec{}};
    std::vector<double> x{0.4};
    std::vector<int> n0{80};
    std::vector<double> z{1.0};
    int k = 3;
    std::vector<std::string> candidates;
    int replications = 200;
    double alpha = 0.05;
    std::uint64_t base_seed = 1;
    int k_max = 10;
    std::vector<DatasetSpec> datasets;
    std::string output;

    /// Throws ConfigError when an invariant is broken.
    void validate() const;
};

/// Key-value text format, one `key = value` per line, '#' comments.
/// Lists are comma separated. Keys: experiment, truth, n, rho, ln, x, n0,
/// z, k, candidates, reps, alpha, seed, kmax, output, dataset (repeatable:
/// `dataset = name path [k=K] [indexing=zero|one] [format=edges|trade]`).
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config_file(const std::string& path);

/// Defaults for an experiment kind (alpha 0.001 and 100 reps for kest, etc.).
ExperimentConfig default_config(ExperimentKind kind);

}  // namespace netgof

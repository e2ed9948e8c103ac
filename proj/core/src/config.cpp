#include "netgof/config.hpp"

#include "netgof/error.hpp"
#include "netgof/estimators.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

namespace netgof {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(',', start);
        const auto item = trim(s.substr(start, pos - start));
        if (!item.empty()) out.push_back(item);
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

template <typename T>
T parse_number(std::string_view text, std::string_view key) {
    T value{};
    const auto t = trim(text);
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
        throw ConfigError("'" + std::string(key) + "': cannot parse '" + std::string(text) + "'");
    return value;
}

template <typename T>
std::vector<T> parse_numbers(std::string_view value, std::string_view key) {
    std::vector<T> out;
    for (auto item : split_list(value)) out.push_back(parse_number<T>(item, key));
    return out;
}

double parse_fraction(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return parse_number<double>(text, "ln");
    const double num = parse_number<double>(text.substr(0, slash), "ln");
    const double den = parse_number<double>(text.substr(slash + 1), "ln");
    if (den == 0) throw ConfigError("'ln': zero denominator in '" + std::string(text) + "'");
    return num / den;
}

DatasetSpec parse_dataset(std::string_view value) {
    std::istringstream in{std::string(value)};
    DatasetSpec spec;
    if (!(in >> spec.name >> spec.path)) throw ConfigError("'dataset' needs a name and a path");
    std::string opt;
    while (in >> opt) {
        const auto eq = opt.find('=');
        if (eq == std::string::npos) throw ConfigError("dataset option '" + opt + "' is not key=value");
        const std::string k = opt.substr(0, eq);
        const std::string v = opt.substr(eq + 1);
        if (k == "k") {
            spec.k = parse_number<int>(v, "dataset k");
        } else if (k == "indexing") {
            if (v == "zero") spec.indexing = Indexing::ZeroBased;
            else if (v == "one") spec.indexing = Indexing::OneBased;
            else throw ConfigError("dataset indexing must be zero or one, got '" + v + "'");
        } else if (k == "format") {
            if (v == "edges") spec.trade_matrix = false;
            else if (v == "trade") spec.trade_matrix = true;
            else throw ConfigError("dataset format must be edges or trade, got '" + v + "'");
        } else {
            throw ConfigError("unknown dataset option '" + k + "'");
        }
    }
    return spec;
}

}  // namespace

ExperimentKind parse_experiment_kind(std::string_view text) {
    if (text == "null" || text == "null_qq") return ExperimentKind::NullQq;
    if (text == "size") return ExperimentKind::Size;
    if (text == "power") return ExperimentKind::Power;
    if (text == "kest") return ExperimentKind::KEstimation;
    if (text == "real") return ExperimentKind::Real;
    throw ConfigError("unknown experiment '" + std::string(text) + "' (expected null, size, power, kest or real)");
}

std::string_view experiment_kind_name(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::NullQq: return "null";
        case ExperimentKind::Size: return "size";
        case ExperimentKind::Power: return "power";
        case ExperimentKind::KEstimation: return "kest";
        case ExperimentKind::Real: return "real";
    }
    return "?";
}

double SpreadSpec::resolve(int n) const {
    const double ln_n = std::log(static_cast<double>(n));
    switch (base) {
        case Base::Constant: return value;
        case Base::Log: return std::pow(ln_n, value);
        case Base::LogLog: return std::pow(std::log(ln_n), value);
    }
    return value;
}

SpreadSpec parse_spread(std::string_view text) {
    const auto t = trim(text);
    SpreadSpec spec;
    spec.label = std::string(t);
    auto power_of = [&](std::string_view prefix, SpreadSpec::Base base) -> bool {
        if (t.substr(0, prefix.size()) != prefix) return false;
        const auto rest = t.substr(prefix.size());
        spec.base = base;
        if (rest.empty()) {
            spec.value = 1.0;
        } else if (rest[0] == '^') {
            spec.value = parse_fraction(rest.substr(1));
        } else {
            return false;
        }
        return true;
    };
    if (power_of("loglog", SpreadSpec::Base::LogLog)) return spec;
    if (power_of("log", SpreadSpec::Base::Log)) return spec;
    spec.base = SpreadSpec::Base::Constant;
    spec.value = parse_number<double>(t, "ln");
    return spec;
}

void ExperimentConfig::validate() const {
    if (replications < 1) throw ConfigError("reps must be at least 1");
    if (!(alpha > 0 && alpha < 1)) throw ConfigError("alpha must lie in (0, 1)");
    if (n.empty() || rho.empty() || ln.empty() || x.empty() || n0.empty() || z.empty())
        throw ConfigError("parameter grids must be non-empty");
    for (int v : n)
        if (v < 2) throw ConfigError("every n must be at least 2");
    if (k < 1) throw ConfigError("k must be at least 1");
    if (k_max < 1) throw ConfigError("kmax must be at least 1");

    if (kind == ExperimentKind::Real) {
        if (datasets.empty()) throw ConfigError("real experiment needs at least one dataset");
    }
    if (kind != ExperimentKind::KEstimation && candidates.empty())
        throw ConfigError("at least one candidate is required");

    int n_min = n.front();
    for (int v : n) n_min = std::min(n_min, v);
    for (const auto& c : candidates) {
        if (c == "oracle") {
            if (kind != ExperimentKind::NullQq) throw ConfigError("candidate 'oracle' is only valid for null");
            continue;
        }
        if (kind == ExperimentKind::Real && (c == "sbm" || c == "dcsbm" || c == "dcmm")) continue;
        CandidateModel parsed;
        try {
            parsed = parse_candidate(c);
        } catch (const InvalidArgument& err) {
            throw ConfigError(err.what());
        }
        if (kind == ExperimentKind::Real) continue;
        const int dim = std::visit(
            [](const auto& m) -> int {
                using T = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<T, candidate::Lsm>) return m.d;
                else if constexpr (requires { m.k; }) return m.k;
                else return 1;
            },
            parsed);
        if (dim > n_min)
            throw ConfigError("candidate " + c + " needs more communities or dimensions than nodes");
    }

    if (kind != ExperimentKind::Real) {
        for (double r : rho)
            if (!(r > 0 && r <= 1)) throw ConfigError("rho must lie in (0, 1]");
        if (truth == Preset::SbmPlanted || truth == Preset::DcsbmZhao)
            for (double r : rho)
                if (5 * r > 1) throw ConfigError("planted block presets need 5 rho <= 1");
        if (truth == Preset::DcmmTable11) {
            if (k < 2) throw ConfigError("dcmm_table11 needs k >= 2");
            for (double v : x)
                if (!(v > 0 && v < 1.0 / (k - 1))) throw ConfigError("x must lie in (0, 1/(k-1))");
            for (double v : z)
                if (v < 1) throw ConfigError("z must be at least 1");
            for (int v : n0)
                for (int nv : n)
                    if (v < 0 || static_cast<long long>(v) * k > nv) throw ConfigError("k * n0 exceeds n");
            for (double r : rho)
                if (r >= 1) throw ConfigError("dcmm_table11 needs rho < 1");
        }
    }
}

ExperimentConfig parse_config(std::istream& in) {
    ExperimentConfig config;
    bool reps_set = false, alpha_set = false;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::string_view view = line;
        if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
        view = trim(view);
        if (view.empty()) continue;
        const auto eq = view.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("line " + std::to_string(number) + ": expected 'key = value'");
        const std::string key(trim(view.substr(0, eq)));
        const std::string_view value = trim(view.substr(eq + 1));
        try {
            if (key == "experiment") {
                config.kind = parse_experiment_kind(value);
            } else if (key == "truth") {
                try {
                    config.truth = parse_preset(value);
                } catch (const InvalidArgument& err) {
                    throw ConfigError(err.what());
                }
            } else if (key == "n") {
                config.n = parse_numbers<int>(value, key);
            } else if (key == "rho") {
                config.rho = parse_numbers<double>(value, key);
            } else if (key == "ln") {
                config.ln.clear();
                for (auto item : split_list(value)) config.ln.push_back(parse_spread(item));
            } else if (key == "x") {
                config.x = parse_numbers<double>(value, key);
            } else if (key == "n0") {
                config.n0 = parse_numbers<int>(value, key);
            } else if (key == "z") {
                config.z = parse_numbers<double>(value, key);
            } else if (key == "k") {
                config.k = parse_number<int>(value, key);
            } else if (key == "candidates") {
                config.candidates.clear();
                for (auto item : split_list(value)) config.candidates.emplace_back(item);
            } else if (key == "reps") {
                config.replications = parse_number<int>(value, key);
                reps_set = true;
            } else if (key == "alpha") {
                config.alpha = parse_number<double>(value, key);
                alpha_set = true;
            } else if (key == "seed") {
                config.base_seed = parse_number<std::uint64_t>(value, key);
            } else if (key == "kmax") {
                config.k_max = parse_number<int>(value, key);
            } else if (key == "output") {
                config.output = std::string(value);
            } else if (key == "dataset") {
                config.datasets.push_back(parse_dataset(value));
            } else {
                throw ConfigError("unknown key '" + key + "'");
            }
        } catch (const ConfigError& err) {
            throw ConfigError("line " + std::to_string(number) + ": " + err.what());
        }
    }
    // Kind-specific defaults apply to keys the file leaves out.
    const ExperimentConfig defaults = default_config(config.kind);
    if (!reps_set) config.replications = defaults.replications;
    if (!alpha_set) config.alpha = defaults.alpha;
    return config;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    return parse_config(in);
}

ExperimentConfig default_config(ExperimentKind kind) {
    ExperimentConfig config;
    config.kind = kind;
    switch (kind) {
        case ExperimentKind::NullQq:
            config.replications = 1000;
            config.n = {500};
            config.candidates = {"er"};
            break;
        case ExperimentKind::Size:
        case ExperimentKind::Power:
            config.replications = 200;
            config.candidates = {"er"};
            break;
        case ExperimentKind::KEstimation:
            config.replications = 100;
            config.alpha = 0.001;
            config.truth = Preset::DcmmTable11;
            config.n = {500};
            config.rho = {0.1};
            break;
        case ExperimentKind::Real:
            config.replications = 1;
            config.candidates = {"er", "beta"};
            break;
    }
    return config;
}

}  // namespace netgof

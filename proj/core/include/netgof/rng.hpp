#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace netgof {

/// SplitMix64 finalizer. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// 64-bit FNV-1a, used to turn setting keys into experiment ids.
std::uint64_t fnv1a64(std::string_view text) noexcept;

/// Deterministic random stream identified by (base_seed, stream_id).
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard; the variates below are derived from raw engine words only, so
/// a stream yields identical values on every conforming implementation.
/// Not thread-safe: a stream belongs to exactly one replication.
class SeededStream {
public:
    SeededStream(std::uint64_t base_seed, std::uint64_t stream_id);

    std::uint64_t base_seed() const noexcept { return base_seed_; }
    std::uint64_t stream_id() const noexcept { return stream_id_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    bool bernoulli(double p) { return uniform() < p; }

    /// Uniform integer in [0, bound) by rejection (no modulo bias).
    std::uint64_t below(std::uint64_t bound);

    /// Independent child stream; children with different tags never share
    /// a seed with each other or with the parent.
    SeededStream split(std::uint64_t tag) const;

    std::mt19937_64& engine() noexcept { return engine_; }

private:
    std::uint64_t base_seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
};

/// Stream for one Monte-Carlo replication.
///
///   stream_id = mix64(mix64(experiment_id) ^ mix64(replication ^ 0xD1B54A32D192ED03))
///   engine seed = mix64(base_seed ^ mix64(stream_id))
///
/// Depends only on the triple, so replications can run in any order.
SeededStream derive_stream(std::uint64_t base_seed, std::uint64_t experiment_id,
                           std::uint64_t replication);

}  // namespace netgof

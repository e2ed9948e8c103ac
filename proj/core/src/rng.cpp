#include "netgof/rng.hpp"

namespace netgof {

std::uint64_t fnv1a64(std::string_view text) noexcept {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

SeededStream::SeededStream(std::uint64_t base_seed, std::uint64_t stream_id)
    : base_seed_(base_seed), stream_id_(stream_id), engine_(mix64(base_seed ^ mix64(stream_id))) {}

std::uint64_t SeededStream::below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t r;
    do {
        r = engine_();
    } while (r >= limit);
    return r % bound;
}

SeededStream SeededStream::split(std::uint64_t tag) const {
    return SeededStream(base_seed_, mix64(stream_id_ ^ mix64(tag ^ 0xA0761D6478BD642FULL)));
}

SeededStream derive_stream(std::uint64_t base_seed, std::uint64_t experiment_id,
                           std::uint64_t replication) {
    const std::uint64_t id = mix64(mix64(experiment_id) ^ mix64(replication ^ 0xD1B54A32D192ED03ULL));
    return SeededStream(base_seed, id);
}

}  // namespace netgof

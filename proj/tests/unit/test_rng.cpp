#include "netgof/rng.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <unordered_set>
#include <vector>

using namespace netgof;

namespace {

std::vector<std::uint64_t> first_words(SeededStream s, int count) {
    std::vector<std::uint64_t> out;
    for (int i = 0; i < count; ++i) out.push_back(s.next_u64());
    return out;
}

}  // namespace

TEST(DeriveStream, SameTripleSameVariates) {
    EXPECT_EQ(first_words(derive_stream(42, 7, 3), 100), first_words(derive_stream(42, 7, 3), 100));
}

TEST(DeriveStream, ReplicationsDiffer) {
    const auto a = first_words(derive_stream(42, 7, 0), 100);
    const auto b = first_words(derive_stream(42, 7, 1), 100);
    for (int i = 0; i < 100; ++i) EXPECT_NE(a[i], b[i]);
}

TEST(DeriveStream, NoCollisionsAcrossTenThousandStreams) {
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t rep = 0; rep < 10'000; ++rep) seen.insert(derive_stream(1, 99, rep).next_u64());
    EXPECT_EQ(seen.size(), 10'000u);
}

TEST(DeriveStream, ExperimentAndSeedMatter) {
    EXPECT_NE(derive_stream(1, 2, 0).next_u64(), derive_stream(1, 3, 0).next_u64());
    EXPECT_NE(derive_stream(1, 2, 0).next_u64(), derive_stream(2, 2, 0).next_u64());
}

TEST(DeriveStream, MatchesDocumentedMixing) {
    const std::uint64_t exp = 0x1234, rep = 5, base = 77;
    const std::uint64_t id = mix64(mix64(exp) ^ mix64(rep ^ 0xD1B54A32D192ED03ULL));
    std::mt19937_64 engine(mix64(base ^ mix64(id)));
    auto s = derive_stream(base, exp, rep);
    EXPECT_EQ(s.stream_id(), id);
    for (int i = 0; i < 10; ++i) EXPECT_EQ(s.next_u64(), engine());
}

TEST(SeededStream, SplitChildrenAreDistinct) {
    const SeededStream parent(5, 11);
    std::unordered_set<std::uint64_t> firsts{SeededStream(parent).next_u64()};
    for (std::uint64_t tag = 0; tag < 1000; ++tag) firsts.insert(parent.split(tag).next_u64());
    EXPECT_EQ(firsts.size(), 1001u);
    EXPECT_EQ(parent.split(4).next_u64(), parent.split(4).next_u64());
}

TEST(SeededStream, UniformAndBelowRanges) {
    SeededStream s(9, 0);
    std::vector<int> counts(7, 0);
    for (int i = 0; i < 70'000; ++i) {
        const double u = s.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        const auto b = s.below(7);
        ASSERT_LT(b, 7u);
        ++counts[b];
    }
    for (int c : counts) EXPECT_NEAR(c, 10'000, 400);
    EXPECT_EQ(s.below(1), 0u);
}

TEST(Fnv1a, KnownVectors) {
    EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
    EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}

TEST(Mix64, Bijective) {
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 5000; ++i) seen.insert(mix64(i));
    EXPECT_EQ(seen.size(), 5000u);
}

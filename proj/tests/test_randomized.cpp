#include <gtest/gtest.h>

#include <cmath>

#include "mcolor/generators.hpp"
#include "mcolor/randomized.hpp"
#include "mcolor/verifier.hpp"

using namespace mcolor;

namespace {

RandDraws draws(NodeId id, std::vector<std::uint64_t> values) {
    RandDraws d{id, {}};
    for (const auto v : values) d.draws.push_back(v);
    return d;
}

}  // namespace

TEST(RandK, Examples) {
    EXPECT_EQ(rand_k(100, 4, 0.5), 553u);
    EXPECT_EQ(rand_k(std::exp(2.0), 0, 1.0), 12u);
    EXPECT_EQ(rand_k(200, 8, 0.5), 1145u);
}

TEST(RandK, DomainErrors) {
    EXPECT_THROW(rand_k(1, 4, 0.5), Error);
    EXPECT_THROW(rand_k(100, -1, 0.5), Error);
    EXPECT_THROW(rand_k(100, 4, 0.0), Error);
    EXPECT_THROW(rand_k(100, 4, 1.5), Error);
}

TEST(RandDrawsTest, DeterministicPerSeedAndId) {
    EXPECT_EQ(rand_draws(17, 50, 100, 5), rand_draws(17, 50, 100, 5));
    EXPECT_NE(rand_draws(17, 50, 100, 5), rand_draws(18, 50, 100, 5));
    EXPECT_NE(rand_draws(17, 50, 100, 5), rand_draws(17, 50, 100, 6));
}

TEST(RandDrawsTest, SingleDrawRange) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto d = rand_draws(3, 1, 7, seed);
        ASSERT_EQ(d.draws.size(), 1u);
        EXPECT_GE(d.draws[0], u128{1});
        EXPECT_LE(d.draws[0], u128{7 * 7 * 7 * 7});
    }
}

TEST(RandDrawsTest, MeanMatchesUniformRange) {
    const std::uint64_t k = 10000, n = 10;
    const auto d = rand_draws(1, k, n, 2024);
    long double sum = 0;
    for (const auto v : d.draws) {
        ASSERT_GE(v, u128{1});
        ASSERT_LE(v, u128{k} * 10000);
        sum += static_cast<long double>(v);
    }
    const long double mean = sum / k;
    const long double expected = (1.0L + static_cast<long double>(k) * 10000.0L) / 2.0L;
    EXPECT_LT(std::fabs(mean - expected) / expected, 0.05L);
}

TEST(RandDrawsTest, WideRangeUses128Bits) {
    // k n^4 with n = 2^20 exceeds 64 bits.
    const auto d = rand_draws(9, 64, std::uint64_t{1} << 20, 1);
    bool wide = false;
    for (const auto v : d.draws) wide |= (v >> 64) != 0;
    EXPECT_TRUE(wide);
}

TEST(RandSelect, StrictMinimumRule) {
    const auto own = draws(1, {2, 9, 4});
    const std::vector<RandDraws> nbrs{draws(2, {5, 1, 7}), draws(3, {3, 8, 8})};
    EXPECT_EQ(rand_select(own, nbrs), (ColorSet{1, 3}));
}

TEST(RandSelect, NoNeighborsTakesEverything) {
    EXPECT_EQ(rand_select(draws(1, {4, 4, 4, 4}), {}), (ColorSet{1, 2, 3, 4}));
}

TEST(RandSelect, TiesAreLostByBoth) {
    const auto a = draws(1, {5});
    const auto b = draws(2, {5});
    EXPECT_TRUE(rand_select(a, std::vector{b}).empty());
    EXPECT_TRUE(rand_select(b, std::vector{a}).empty());
}

TEST(RandSelect, TieBreakGivesColorToSmallerId) {
    const auto a = draws(1, {5, 3});
    const auto b = draws(2, {5, 4});
    EXPECT_EQ(rand_select(a, std::vector{b}, true), (ColorSet{1, 2}));
    EXPECT_TRUE(rand_select(b, std::vector{a}, true).empty());
}

TEST(RandSelect, MismatchedLengthIsInvalid) {
    EXPECT_THROW(rand_select(draws(1, {1, 2}), std::vector{draws(2, {1})}), Error);
}

TEST(RandSelect, MonotoneUnderNeighborRemoval) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto own = rand_draws(1, 64, 3, seed);
        std::vector<RandDraws> nbrs;
        for (NodeId y = 2; y <= 6; ++y) nbrs.push_back(rand_draws(y, 64, 3, seed));
        auto prev = rand_select(own, nbrs);
        while (!nbrs.empty()) {
            nbrs.erase(nbrs.begin() + static_cast<long>(seed % nbrs.size()));
            const auto next = rand_select(own, nbrs);
            EXPECT_TRUE(std::includes(next.begin(), next.end(), prev.begin(), prev.end()));
            prev = next;
        }
    }
}

TEST(RunRandomized, TwoNodesSplitNonTiedColors) {
    // Tiny n makes ties likely: the range is k * 2^4.
    const Graph g(2, {1, 2}, {{1, 2}});
    std::size_t seen_ties = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto run = run_randomized(g, 1.0, seed);
        const auto k = run.coloring.palette_size;
        const auto a = rand_draws(1, k, 2, seed);
        const auto b = rand_draws(2, k, 2, seed);
        std::size_t ties = 0;
        for (std::size_t i = 0; i < k; ++i) ties += a.draws[i] == b.draws[i];
        seen_ties += ties;
        const auto& su = run.coloring.colors_of(1);
        const auto& sv = run.coloring.colors_of(2);
        EXPECT_EQ(intersection_size(su, sv), 0u);
        EXPECT_EQ(su.size() + sv.size(), k - ties);
    }
    EXPECT_GT(seen_ties, 0u);
}

TEST(RunRandomized, EdgelessGraphTakesFullPalette) {
    const auto g = gen_gnp(10, 0.0, 20, 1);
    const auto run = run_randomized(g, 0.5, 3);
    for (const auto& [id, colors] : run.coloring.assignment) EXPECT_EQ(colors.size(), run.coloring.palette_size);
}

TEST(RunRandomized, DisjointOnRandomGraphs) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto g = gen_gnp(60, 0.08, 200, seed);
        const auto run = run_randomized(g, 0.5, seed * 31 + 1);
        EXPECT_TRUE(verify(g, run.coloring, 0.5).valid);
        EXPECT_EQ(run.coloring.palette_size, rand_k(60, static_cast<double>(g.max_degree()), 0.5));
    }
}

TEST(RunRandomized, DegreeBoundOverride) {
    const auto g = gen_stars(3, 2, 20, 1);
    const auto run = run_randomized(g, 0.5, 1, RandomizedOptions{8});
    EXPECT_EQ(run.coloring.palette_size, rand_k(9, 8, 0.5));
    EXPECT_EQ(run.coloring.params.max_degree, 8u);
    EXPECT_THROW(run_randomized(g, 0.5, 1, RandomizedOptions{1}), Error);
}

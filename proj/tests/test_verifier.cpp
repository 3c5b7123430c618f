#include <gtest/gtest.h>

#include <set>

#include "mcolor/generators.hpp"
#include "mcolor/randomized.hpp"
#include "mcolor/verifier.hpp"

using namespace mcolor;

namespace {

Multicoloring coloring(std::uint64_t k, std::map<NodeId, ColorSet> sets, double eps = 0.5) {
    Multicoloring m;
    m.palette_size = k;
    m.assignment = std::move(sets);
    m.params.epsilon = eps;
    return m;
}

}  // namespace

TEST(Verify, DisjointEdge) {
    const Graph g(2, {1, 2}, {{1, 2}});
    const auto r = verify(g, coloring(4, {{1, {1, 2}}, {2, {3}}}), 0.5);
    EXPECT_TRUE(r.valid);
    EXPECT_TRUE(r.fractions_met);
    EXPECT_EQ(r.violation_count, 0u);
    EXPECT_DOUBLE_EQ(r.worst_ratio, 0.5);
    EXPECT_EQ(r.worst_node, 2u);
    ASSERT_EQ(r.degree_classes.size(), 1u);
    EXPECT_EQ(r.degree_classes[0].required_colors, 1u);
    EXPECT_EQ(r.degree_classes[0].min_colors, 1u);
}

TEST(Verify, SharedColorIsViolation) {
    const Graph g(2, {1, 2}, {{1, 2}});
    const auto r = verify(g, coloring(4, {{1, {1, 2}}, {2, {2, 3}}}), 0.5);
    EXPECT_FALSE(r.valid);
    ASSERT_EQ(r.violations.size(), 1u);
    EXPECT_EQ(r.violations[0], (Violation{1, 2, 1}));
}

TEST(Verify, OutOfPaletteColor) {
    const Graph g(2, {1, 2}, {});
    const auto r = verify(g, coloring(4, {{1, {1, 5}}, {2, {0}}}), 0.5);
    EXPECT_FALSE(r.valid);
    EXPECT_EQ(r.violation_count, 2u);
    EXPECT_EQ(r.violations[0], (Violation{1, 0, 1}));
}

TEST(Verify, FractionShortfallDoesNotInvalidate) {
    const Graph g(3, {1, 2, 3}, {{1, 2}, {2, 3}});
    // Ends need ceil(0.5 * 12 / 2) = 3 colors, the middle needs 2.
    const auto r = verify(g, coloring(12, {{1, {1, 2, 3}}, {2, {4}}, {3, {5, 6, 7}}}), 0.5);
    EXPECT_TRUE(r.valid);
    EXPECT_FALSE(r.fractions_met);
    EXPECT_EQ(r.fraction_shortfalls, 1u);
    EXPECT_EQ(r.worst_node, 2u);
}

TEST(Verify, ExactBoundaryCountsAsMet) {
    // (1 - 0.5) * 8 / 2 = 2 exactly.
    const Graph g(2, {1, 2}, {{1, 2}});
    EXPECT_TRUE(verify(g, coloring(8, {{1, {1, 2}}, {2, {3, 4}}}), 0.5).fractions_met);
    EXPECT_FALSE(verify(g, coloring(8, {{1, {1}}, {2, {3, 4}}}), 0.5).fractions_met);
}

TEST(Verify, MissingNodeIsIncomplete) {
    const Graph g(3, {1, 2, 3}, {{1, 2}});
    try {
        verify(g, coloring(4, {{1, {1}}, {2, {2}}}), 0.5);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Incomplete);
    }
}

TEST(Verify, ViolationListIsCapped) {
    const auto g = gen_gnp(60, 0.5, 60, 1);
    std::map<NodeId, ColorSet> sets;
    for (const auto id : g.ids()) sets[id] = {1};
    const auto r = verify(g, coloring(1, sets), 0.5);
    EXPECT_EQ(r.violation_count, g.edge_count());
    EXPECT_EQ(r.violations.size(), kMaxReportedViolations);
}

// Against a set-based recount of shared colors per edge.
TEST(Verify, PipelineAgreesWithRecount) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto g = gen_gnp(20 + seed % 30, 0.1, 200, seed);
        const auto run = run_randomized(g, 0.5, seed);
        const auto r = verify(g, run.coloring, 0.5);
        std::size_t clashes = 0;
        for (const auto& [a, b] : g.edges()) {
            const auto& sa = run.coloring.colors_of(a);
            const auto& sb = run.coloring.colors_of(b);
            const std::set<Color> both(sa.begin(), sa.end());
            for (const auto c : sb) clashes += both.count(c);
        }
        EXPECT_EQ(clashes, 0u);
        EXPECT_TRUE(r.valid);
        EXPECT_EQ(r.nodes.size(), g.size());
    }
}

#include <gtest/gtest.h>

#include <set>

#include "mcolor/edge_list.hpp"
#include "mcolor/generators.hpp"
#include "mcolor/graph.hpp"

using namespace mcolor;

namespace {

void expect_well_formed(const Graph& g) {
    std::set<NodeId> ids(g.ids().begin(), g.ids().end());
    EXPECT_EQ(ids.size(), g.size());
    for (const auto x : ids) {
        EXPECT_GE(x, 1u);
        EXPECT_LE(x, g.id_space());
    }
    EXPECT_LE(g.max_degree() + 1, std::max<std::size_t>(g.size(), 1));
    for (std::size_t v = 0; v < g.size(); ++v) {
        for (const auto u : g.neighbors(v)) {
            EXPECT_NE(u, v);
            const auto back = g.neighbors(u);
            EXPECT_TRUE(std::binary_search(back.begin(), back.end(), static_cast<std::uint32_t>(v)));
        }
    }
}

}  // namespace

TEST(ViewOf, Triangle) {
    const Graph g(3, {1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}});
    const auto view = view_of(g, 1);
    EXPECT_EQ(view.id, 1u);
    EXPECT_EQ(view.neighbors, (std::vector<NodeId>{2, 3}));
}

TEST(ViewOf, IsolatedNode) {
    const Graph g(9, {5, 1, 2}, {{1, 2}});
    const auto view = view_of(g, 5);
    EXPECT_EQ(view.id, 5u);
    EXPECT_TRUE(view.neighbors.empty());
}

TEST(ViewOf, PathMiddle) {
    const Graph g(3, {1, 2, 3}, {{1, 2}, {2, 3}});
    EXPECT_EQ(view_of(g, 2), OneHopView(2, {1, 3}));
}

TEST(ViewOf, UnknownNodeIsNotFound) {
    const Graph g(3, {1, 2, 3}, {{1, 2}});
    try {
        view_of(g, 7);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotFound);
    }
}

TEST(GraphConstruction, RejectsBadInput) {
    EXPECT_THROW(Graph(3, {1, 1}, {}), Error);
    EXPECT_THROW(Graph(3, {1, 4}, {}), Error);
    EXPECT_THROW(Graph(3, {1, 2}, {{1, 1}}), Error);
    EXPECT_THROW(Graph(3, {1, 2}, {{1, 2}, {2, 1}}), Error);
    EXPECT_THROW(Graph(1, {1, 2}, {}), Error);
    EXPECT_THROW(OneHopView(3, {3, 4}), Error);
}

TEST(GenGnp, ExtremeProbabilities) {
    const auto empty = gen_gnp(4, 0.0, 4, 99);
    EXPECT_EQ(empty.size(), 4u);
    EXPECT_EQ(empty.edge_count(), 0u);
    const auto full = gen_gnp(4, 1.0, 4, 99);
    EXPECT_EQ(full.edge_count(), 6u);
    EXPECT_EQ(full.max_degree(), 3u);
    EXPECT_EQ(full.sorted_ids(), (std::vector<NodeId>{1, 2, 3, 4}));
}

TEST(GenGnp, DeterministicAndInSupport) {
    const auto a = gen_gnp(100, 0.05, 1000, 7);
    const auto b = gen_gnp(100, 0.05, 1000, 7);
    EXPECT_EQ(a, b);
    EXPECT_EQ(save_edge_list(a), save_edge_list(b));
    EXPECT_LE(a.edge_count(), 4950u);
    expect_well_formed(a);
    EXPECT_NE(save_edge_list(a), save_edge_list(gen_gnp(100, 0.05, 1000, 8)));
}

TEST(GenGnp, InvalidParams) {
    EXPECT_THROW(gen_gnp(5, 0.5, 4, 1), Error);
    EXPECT_THROW(gen_gnp(5, 1.5, 10, 1), Error);
}

TEST(GenStars, SmallShapes) {
    const auto one = gen_stars(1, 2, 3, 5);
    EXPECT_EQ(one.size(), 3u);
    EXPECT_EQ(one.edge_count(), 2u);
    EXPECT_EQ(one.max_degree(), 2u);
    const auto matching = gen_stars(2, 1, 4, 5);
    EXPECT_EQ(matching.edge_count(), 2u);
    EXPECT_EQ(matching.max_degree(), 1u);
    EXPECT_EQ(component_count(matching), 2u);
}

TEST(GenStars, CountsAndCapacity) {
    const auto g = gen_stars(3, 4, 100, 1);
    EXPECT_EQ(g.size(), 15u);
    EXPECT_EQ(g.edge_count(), 12u);
    EXPECT_EQ(component_count(g), 3u);
    expect_well_formed(g);
    EXPECT_THROW(gen_stars(3, 4, 14, 1), Error);
}

TEST(GenUdg, RadiusExtremes) {
    EXPECT_EQ(gen_udg(30, 0.0, 30, 2).edge_count(), 0u);
    const auto complete = gen_udg(30, std::sqrt(2.0), 30, 2);
    EXPECT_EQ(complete.edge_count(), 30u * 29u / 2u);
}

TEST(GenUdg, Deterministic) {
    const auto a = gen_udg(50, 0.2, 50, 3);
    EXPECT_EQ(a.edges(), gen_udg(50, 0.2, 50, 3).edges());
    expect_well_formed(a);
    EXPECT_THROW(gen_udg(5, 0.2, 4, 3), Error);
}

TEST(CapDegree, RespectsBound) {
    const auto g = gen_gnp(80, 0.3, 200, 4);
    const auto capped = cap_degree(g, 5);
    EXPECT_LE(capped.max_degree(), 5u);
    EXPECT_EQ(capped.sorted_ids(), g.sorted_ids());
    for (const auto& e : capped.edges()) {
        const auto all = g.edges();
        EXPECT_TRUE(std::binary_search(all.begin(), all.end(), e));
    }
}

TEST(EdgeList, LoadsHeaderAndEdges) {
    const auto g = load_edge_list("# N=4\n1 2\n2 3");
    EXPECT_EQ(g.id_space(), 4u);
    EXPECT_EQ(g.sorted_ids(), (std::vector<NodeId>{1, 2, 3}));
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 2}, {2, 3}}));
}

TEST(EdgeList, DefaultIdSpaceIsMaxId) {
    const auto g = load_edge_list("# a comment\n7 3\n\n3 5\n");
    EXPECT_EQ(g.id_space(), 7u);
    EXPECT_EQ(g.edge_count(), 2u);
}

TEST(EdgeList, ParseErrorsCarryLineNumbers) {
    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            load_edge_list(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    EXPECT_EQ(line_of("1 1"), 1u);
    EXPECT_EQ(line_of("1 2\n2 1"), 2u);
    EXPECT_EQ(line_of("# N=3\n1 2\n2 5"), 3u);
    EXPECT_EQ(line_of("1 2\nfoo bar"), 2u);
    EXPECT_EQ(line_of("1 2 3"), 1u);
    EXPECT_EQ(line_of("# N=x"), 1u);
}

TEST(EdgeList, RoundTripProperty) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const auto g = cap_degree(gen_gnp(40 + seed, 0.08, 500, seed), 6);
        const auto text = save_edge_list(g);
        const auto back = load_edge_list(text);
        EXPECT_EQ(back, g);
        EXPECT_EQ(save_edge_list(back), text);
    }
}

TEST(EdgeList, HundredEdgeFileCanonicalizes) {
    std::string text = "# N=300\n";
    const auto g = gen_gnp(120, 0.02, 300, 17);
    auto edges = g.edges();
    ASSERT_GE(edges.size(), 100u);
    edges.resize(100);
    auto canonical = edges;
    std::reverse(edges.begin(), edges.end());
    for (const auto& [a, b] : edges) text += std::to_string(b) + " " + std::to_string(a) + "\n";
    const auto loaded = load_edge_list(text);
    EXPECT_EQ(loaded.edges(), canonical);
    EXPECT_EQ(load_edge_list(save_edge_list(loaded)), loaded);
}

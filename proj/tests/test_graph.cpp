#include <gtest/gtest.h>

#include <random>

#include "ptfree/graph.hpp"
#include "ptfree/instance_io.hpp"
#include "support/graphs.hpp"

namespace ptfree {
namespace {

using testing::cycle;
using testing::star;

TEST(ParseGraph, SingleEdgeShiftsToZeroBased) {
    Graph g = parse_graph("p edge 2 1\ne 1 2\n");
    EXPECT_EQ(g.vertex_count(), 2u);
    EXPECT_EQ(g.edge_count(), 1u);
    EXPECT_TRUE(g.adjacent(0, 1));
}

TEST(ParseGraph, EmptyEdgeSet) {
    Graph g = parse_graph("p edge 3 0");
    EXPECT_EQ(g.vertex_count(), 3u);
    EXPECT_EQ(g.edge_count(), 0u);
}

TEST(ParseGraph, DuplicateEdgesAreIdempotent) {
    Graph g = parse_graph("c dup\np edge 3 3\ne 1 2\ne 2 1\ne 1 2\n");
    EXPECT_EQ(g.edge_count(), 1u);
}

TEST(ParseGraph, SelfLoopIsRejectedWithLineNumber) {
    try {
        parse_graph("p edge 2 1\ne 1 1\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
}

TEST(ParseGraph, Errors) {
    EXPECT_THROW(parse_graph("e 1 2\n"), ParseError);
    EXPECT_THROW(parse_graph("p edge 2 1\ne 1 3\n"), ParseError);
    EXPECT_THROW(parse_graph("p edge 2 1\ne 1\n"), ParseError);
    EXPECT_THROW(parse_graph("p edge 2 1\ne 1 x\n"), ParseError);
    EXPECT_THROW(parse_graph("p edge 2 1\nq 1 2\n"), ParseError);
    EXPECT_THROW(parse_graph("p edge 2 1\np edge 2 1\n"), ParseError);
    EXPECT_THROW(parse_graph(""), ParseError);
    EXPECT_THROW(parse_graph("p edge 2 1\ne 0 1\n"), ParseError);
}

TEST(ParseInstance, Annotations) {
    Instance inst = parse_instance(
        "p edge 3 2\ne 1 2\ne 2 3\nw 2 -4\nl 1 13\nk 3 2 9\new 2 3 7\n");
    EXPECT_EQ(inst.weights, (WeightMap{1, -4, 1}));
    EXPECT_EQ(inst.lists[0], color_bit(1) | color_bit(3));
    EXPECT_EQ(inst.lists[1], all_colors);
    EXPECT_EQ(inst.costs(2, 2), 9);
    EXPECT_EQ(inst.costs(2, 1), 0);
    EXPECT_EQ(edge_weight(inst.edge_weights, 2, 1), 7);
    EXPECT_EQ(edge_weight(inst.edge_weights, 0, 1), 1);
}

TEST(ParseInstance, AnnotationErrors) {
    EXPECT_THROW(parse_instance("p edge 2 0\nl 1 14\n"), ParseError);
    EXPECT_THROW(parse_instance("p edge 2 0\nk 1 4 1\n"), ParseError);
    EXPECT_THROW(parse_instance("p edge 2 0\nk 1 1 -1\n"), ParseError);
    EXPECT_THROW(parse_instance("p edge 2 0\new 1 2 5\n"), ParseError);
}

TEST(Components, CycleIsOnePiece) {
    Graph c5 = cycle(5);
    auto comps = components(c5, c5.all_vertices());
    ASSERT_EQ(comps.size(), 1u);
    EXPECT_EQ(comps[0].size(), 5u);
}

TEST(Components, TwoDisjointEdges) {
    Graph g(4, {{0, 1}, {2, 3}});
    auto comps = components(g, g.all_vertices());
    ASSERT_EQ(comps.size(), 2u);
    EXPECT_EQ(comps[0], VertexSet(4, {0, 1}));
    EXPECT_EQ(comps[1], VertexSet(4, {2, 3}));
}

TEST(Components, InducedSubgraphOfCycle) {
    Graph c5 = cycle(5);
    auto comps = components(c5, VertexSet(5, {0, 1, 3}));
    ASSERT_EQ(comps.size(), 2u);
    EXPECT_EQ(comps[0], VertexSet(5, {0, 1}));
    EXPECT_EQ(comps[1], VertexSet(5, {3}));
}

TEST(ClosedNeighborhood, Examples) {
    Graph c5 = cycle(5);
    EXPECT_EQ(closed_neighborhood(c5, VertexSet(5, {0})), VertexSet(5, {4, 0, 1}));
    EXPECT_TRUE(closed_neighborhood(c5, c5.empty_set()).empty());
    Graph s = star(5);
    EXPECT_EQ(closed_neighborhood(s, VertexSet(6, {0})), s.all_vertices());
}

TEST(WriteGraph, CanonicalText) {
    EXPECT_EQ(write_graph(Graph(1, {})), "p edge 1 0\n");
    EXPECT_EQ(write_graph(Graph(2, {{1, 0}})), "p edge 2 1\ne 1 2\n");
    EXPECT_EQ(write_graph(cycle(5)), "p edge 5 5\ne 1 2\ne 1 5\ne 2 3\ne 3 4\ne 4 5\n");
}

TEST(VertexSetOps, BasicAlgebra) {
    VertexSet a(130, {0, 64, 129});
    VertexSet b(130, {64, 100});
    EXPECT_EQ((a | b).size(), 4u);
    EXPECT_EQ((a & b), VertexSet(130, {64}));
    EXPECT_EQ((a - b), VertexSet(130, {0, 129}));
    EXPECT_EQ(a.next(1), 64u);
    EXPECT_EQ(a.next(130), 130u);
    EXPECT_EQ(VertexSet::full(130).size(), 130u);
    EXPECT_TRUE(VertexSet(130, {64}).is_subset_of(a));
}

// Properties over random graphs and random active sets.
TEST(GraphProperties, RandomInstances) {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 300; ++iter) {
        const std::size_t n = 1 + rng() % 40;
        Graph g = testing::random_graph(n, 0.05 + 0.5 * static_cast<double>(rng() % 100) / 100.0, rng);

        EXPECT_EQ(parse_graph(write_graph(g)), g);

        VertexSet active(n);
        for (VertexId v = 0; v < n; ++v)
            if (rng() % 3 != 0) active.insert(v);

        EXPECT_TRUE(active.is_subset_of(closed_neighborhood(g, active)));

        auto comps = components(g, active);
        VertexSet seen(n);
        VertexId last_min = 0;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            const auto& c = comps[i];
            EXPECT_FALSE(c.intersects(seen));
            seen |= c;
            EXPECT_EQ(components(g, c).size(), 1u);
            EXPECT_EQ(closed_neighborhood(g, c) & active, c);
            if (i > 0) EXPECT_GT(c.first(), last_min);
            last_min = c.first();
        }
        EXPECT_EQ(seen, active);
    }
}

}  // namespace
}  // namespace ptfree

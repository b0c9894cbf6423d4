#include <gtest/gtest.h>

#include <random>

#include "ptfree/mwis.hpp"
#include "support/corpus.hpp"
#include "support/graphs.hpp"

namespace ptfree {
namespace {

using testing::complete;
using testing::cycle;
using testing::star;

void expect_valid(const Graph& g, const VertexSet& active, const WeightMap& w, const MwisSolution& s) {
    EXPECT_TRUE(s.chosen.is_subset_of(active));
    EXPECT_TRUE(is_independent(g, s.chosen));
    EXPECT_EQ(total_weight(w, s.chosen), s.weight);
}

TEST(FindMis, C5) {
    Graph c5 = cycle(5);
    auto r = find_mis(c5, c5.all_vertices(), unit_weights(5), 5);
    EXPECT_EQ(r.solution.weight, 2);
    expect_valid(c5, c5.all_vertices(), unit_weights(5), r.solution);
}

TEST(FindMis, StarTakesLeaves) {
    Graph s = star(5);
    auto r = find_mis(s, s.all_vertices(), unit_weights(6), 5);
    EXPECT_EQ(r.solution.weight, 5);
    EXPECT_EQ(r.solution.chosen, VertexSet(6, {1, 2, 3, 4, 5}));
}

TEST(FindMis, NegativeSingleVertex) {
    Graph g(1, {});
    auto r = find_mis(g, g.all_vertices(), WeightMap{-3}, 5);
    EXPECT_EQ(r.solution.weight, 0);
    EXPECT_TRUE(r.solution.chosen.empty());
}

TEST(FindMis, EmptyActive) {
    Graph c5 = cycle(5);
    auto r = find_mis(c5, c5.empty_set(), unit_weights(5), 5);
    EXPECT_EQ(r.solution.weight, 0);
    EXPECT_EQ(r.stats.calls, 1u);
}

TEST(FindMis, C5PlusK2) {
    Graph g(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 6}});
    auto r = find_mis(g, g.all_vertices(), unit_weights(7), 5);
    EXPECT_EQ(r.solution.weight, 3);
    EXPECT_GE(r.stats.component_splits, 1u);
}

TEST(FindMis, PropagatesNotPtFree) {
    Graph p6 = testing::path_graph(6);
    EXPECT_THROW(find_mis(p6, p6.all_vertices(), unit_weights(6), 5), NotPtFree);
    // t below 5 is lifted to 5, so P4 and C5 pass with t = 3.
    Graph c5 = cycle(5);
    EXPECT_EQ(find_mis(c5, c5.all_vertices(), unit_weights(5), 3).solution.weight, 2);
}

TEST(FindMis, OverflowIsDetected) {
    Graph g(2, {});
    WeightMap w{std::numeric_limits<Weight>::max(), 1};
    EXPECT_THROW(find_mis(g, g.all_vertices(), w, 5), std::overflow_error);
}

TEST(BruteForceMis, Examples) {
    Graph c5 = cycle(5);
    EXPECT_EQ(brute_force_mis(c5, c5.all_vertices(), unit_weights(5)).weight, 2);
    EXPECT_EQ(brute_force_mis(c5, c5.all_vertices(), unit_weights(5)).chosen, VertexSet(5, {0, 2}));
    Graph k4 = complete(4);
    EXPECT_EQ(brute_force_mis(k4, k4.all_vertices(), unit_weights(4)).weight, 1);
    Graph e6 = testing::edgeless(6);
    auto s = brute_force_mis(e6, e6.all_vertices(), WeightMap{1, 2, 3, 4, 5, 6});
    EXPECT_EQ(s.weight, 21);
    EXPECT_EQ(s.chosen, e6.all_vertices());
    Graph big = testing::edgeless(31);
    EXPECT_THROW(brute_force_mis(big, big.all_vertices(), unit_weights(31)), SizeGuardExceeded);
}

TEST(MwisProperties, OracleAndStats) {
    std::mt19937_64 rng(3);
    for (const auto& entry : testing::pt_free_corpus(150, 1, 22, 5, 77, false)) {
        const Graph& g = entry.graph;
        const std::size_t n = g.vertex_count();
        const WeightMap w = testing::random_weights(n, -5, 20, rng);
        MwisOptions opt;
        opt.verify_progress = true;
        auto r = find_mis(g, g.all_vertices(), w, 5, opt);
        EXPECT_EQ(r.solution.weight, brute_force_mis(g, g.all_vertices(), w).weight);
        expect_valid(g, g.all_vertices(), w, r.solution);
        EXPECT_EQ(r.stats.progress_failures, 0u);
        EXPECT_LE(r.stats.success_branches + r.stats.failure_branches, r.stats.calls);
        EXPECT_LE(r.stats.max_depth, n);

        // Component additivity.
        Weight sum = 0;
        for (const auto& c : components(g, g.all_vertices())) sum += find_mis(g, c, w, 5).solution.weight;
        EXPECT_EQ(sum, r.solution.weight);

        MwisOptions cached;
        cached.cache = true;
        auto rc = find_mis(g, g.all_vertices(), w, 5, cached);
        EXPECT_EQ(rc.solution.weight, r.solution.weight);
        EXPECT_LE(rc.stats.calls, r.stats.calls);

        auto again = find_mis(g, g.all_vertices(), w, 5);
        EXPECT_EQ(again.stats.calls, r.stats.calls);
        EXPECT_EQ(again.solution.chosen, r.solution.chosen);
    }
}

TEST(MwisProperties, PotentialSamples) {
    Graph c5 = cycle(5);
    MwisOptions opt;
    opt.sample_potential = true;
    auto r = find_mis(c5, c5.all_vertices(), unit_weights(5), 5, opt);
    ASSERT_FALSE(r.stats.potential_by_depth.empty());
    EXPECT_NEAR(r.stats.potential_by_depth[0], 85.03, 0.01);
}

}  // namespace
}  // namespace ptfree

#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "instance_io.hpp"
#include "mwis.hpp"
#include "path_space.hpp"

namespace ptfree {

/// L^2(G): one vertex per edge of g[active]; two are adjacent iff the edges
/// intersect or an endpoint of one is adjacent to an endpoint of the other.
struct SquaredLineGraph {
    Graph h;
    /// Source edge of each L^2 vertex, lexicographic.
    std::vector<Edge> edge_of;
};

inline SquaredLineGraph squared_line_graph(const Graph& g, const VertexSet& active) {
    std::vector<Edge> es = g.edges_within(active);
    std::vector<VertexSet> reach;
    reach.reserve(es.size());
    for (auto [a, b] : es) reach.push_back(g.closed_neighbors(a) | g.closed_neighbors(b));

    std::vector<Edge> adjacency;
    for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            if (reach[i].contains(es[j].first) || reach[i].contains(es[j].second)) {
                adjacency.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
            }
        }
    }
    return {Graph(es.size(), adjacency), std::move(es)};
}

struct MatchingSolution {
    std::vector<Edge> edges;
    Weight weight = 0;
};

struct MatchingResult {
    MatchingSolution solution;
    BranchStats stats;
};

/// Pairwise disjoint edges of g with no edge of g joining two of them.
inline bool is_induced_matching(const Graph& g, const std::vector<Edge>& edges) {
    for (auto [a, b] : edges) {
        if (!g.adjacent(a, b)) return false;
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const VertexSet reach = g.closed_neighbors(edges[i].first) | g.closed_neighbors(edges[i].second);
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (reach.contains(edges[j].first) || reach.contains(edges[j].second)) return false;
        }
    }
    return true;
}

/// Maximum weight induced matching of a P_t-free g[active] (t >= 4) as a maximum
/// weight independent set of L^2(G), which is P_t-free as well.
inline MatchingResult solve_induced_matching(const Graph& g, const VertexSet& active, const EdgeWeights& edge_weights,
                                             int t, MwisOptions opt = {}) {
    if (t < 4) throw std::invalid_argument("induced matching reduction needs t >= 4");
    if (auto check = is_pt_free(g, active, t); !check.pt_free) throw NotPtFree(t, check.witness);

    SquaredLineGraph l2 = squared_line_graph(g, active);
    WeightMap weights(l2.edge_of.size());
    for (std::size_t i = 0; i < l2.edge_of.size(); ++i) {
        weights[i] = edge_weight(edge_weights, l2.edge_of[i].first, l2.edge_of[i].second);
    }

    MwisResult inner;
    try {
        inner = find_mis(l2.h, l2.h.all_vertices(), weights, t, opt);
    } catch (const NotPtFree& e) {
        throw InvariantViolation(std::string("squared line graph of a P_t-free graph is not P_t-free: ") + e.what());
    }

    MatchingResult out;
    out.stats = std::move(inner.stats);
    out.solution.weight = inner.solution.weight;
    inner.solution.chosen.for_each([&](VertexId i) { out.solution.edges.push_back(l2.edge_of[i]); });
    return out;
}

/// Exact oracle over all edge subsets; ties go to the first subset in binary-counter order.
inline MatchingSolution brute_force_induced_matching(const Graph& g, const VertexSet& active,
                                                     const EdgeWeights& edge_weights) {
    const std::vector<Edge> es = g.edges_within(active);
    if (es.size() > 20) throw SizeGuardExceeded("brute_force_induced_matching supports at most 20 edges");
    MatchingSolution best;
    const std::uint32_t limit = 1U << es.size();
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        std::vector<Edge> pick;
        Weight w = 0;
        for (std::size_t i = 0; i < es.size(); ++i) {
            if ((mask >> i) & 1U) {
                pick.push_back(es[i]);
                w = detail::checked_add(w, edge_weight(edge_weights, es[i].first, es[i].second));
            }
        }
        if (w > best.weight && is_induced_matching(g, pick)) {
            best.weight = w;
            best.edges = std::move(pick);
        }
    }
    return best;
}

}  // namespace ptfree

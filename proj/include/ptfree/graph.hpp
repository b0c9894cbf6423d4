#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "vertex_set.hpp"

namespace ptfree {

using Weight = std::int64_t;
using Edge = std::pair<VertexId, VertexId>;

/// Per-vertex weights. May be indexed by any vertex id of the root graph, so it
/// stays valid while solvers shrink the active set.
using WeightMap = std::vector<Weight>;

/// Immutable simple undirected graph on vertices 0..n-1 with bit-set adjacency.
class Graph {
public:
    Graph() = default;

    Graph(std::size_t n, const std::vector<Edge>& edges) : adj_(n, VertexSet(n)), lists_(n) {
        for (auto [u, v] : edges) {
            if (u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
            if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
            adj_[u].insert(v);
            adj_[v].insert(u);
        }
        closed_.reserve(n);
        for (VertexId v = 0; v < n; ++v) {
            lists_[v] = adj_[v].to_vector();
            VertexSet c = adj_[v];
            c.insert(v);
            closed_.push_back(std::move(c));
        }
    }

    std::size_t vertex_count() const noexcept { return adj_.size(); }
    std::size_t edge_count() const noexcept {
        std::size_t deg = 0;
        for (const auto& l : lists_) deg += l.size();
        return deg / 2;
    }

    bool adjacent(VertexId u, VertexId v) const noexcept { return adj_[u].contains(v); }
    const VertexSet& neighbors(VertexId v) const noexcept { return adj_[v]; }
    const VertexSet& closed_neighbors(VertexId v) const noexcept { return closed_[v]; }
    const std::vector<VertexId>& neighbor_list(VertexId v) const noexcept { return lists_[v]; }

    VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }
    VertexSet empty_set() const { return VertexSet(vertex_count()); }

    /// Edges {u,v} with u < v, in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (VertexId u = 0; u < vertex_count(); ++u) {
            for (VertexId v : lists_[u]) {
                if (u < v) out.emplace_back(u, v);
            }
        }
        return out;
    }

    /// Edges with both endpoints in `active`, lexicographic.
    std::vector<Edge> edges_within(const VertexSet& active) const {
        std::vector<Edge> out;
        active.for_each([&](VertexId u) {
            for (VertexId v : lists_[u]) {
                if (u < v && active.contains(v)) out.emplace_back(u, v);
            }
        });
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<VertexSet> adj_;
    std::vector<VertexSet> closed_;
    std::vector<std::vector<VertexId>> lists_;
};

/// s together with every neighbor of a member of s.
inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet out = s;
    s.for_each([&](VertexId v) { out |= g.neighbors(v); });
    return out;
}

/// Connected components of g[active], ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g, const VertexSet& active) {
    std::vector<VertexSet> out;
    VertexSet unseen = active;
    std::vector<VertexId> stack;
    for (VertexId root = unseen.first(); root < unseen.universe(); root = unseen.next(root)) {
        VertexSet comp(g.vertex_count());
        comp.insert(root);
        unseen.erase(root);
        stack.assign(1, root);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId u : g.neighbor_list(v)) {
                if (unseen.contains(u)) {
                    unseen.erase(u);
                    comp.insert(u);
                    stack.push_back(u);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

inline bool is_connected(const Graph& g, const VertexSet& active) {
    return components(g, active).size() <= 1;
}

inline bool is_independent(const Graph& g, const VertexSet& s) {
    bool ok = true;
    s.for_each([&](VertexId v) { ok = ok && !g.neighbors(v).intersects(s); });
    return ok;
}

inline Weight total_weight(const WeightMap& weights, const VertexSet& s) {
    Weight sum = 0;
    s.for_each([&](VertexId v) { sum = detail::checked_add(sum, weights.at(v)); });
    return sum;
}

inline WeightMap unit_weights(std::size_t n) { return WeightMap(n, 1); }

}  // namespace ptfree

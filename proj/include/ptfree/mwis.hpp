#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "decomposition.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "path_space.hpp"
#include "stack.hpp"
#include "vertex_set.hpp"

namespace ptfree {

/// Solvers run with max(t, 5): a P_t-free graph is also P_t'-free for t' >= t.
inline int effective_t(int t) {
    detail::require_t(t);
    return std::max(t, 5);
}

struct MwisSolution {
    Weight weight = 0;
    VertexSet chosen;
};

/// Recursion-tree telemetry shared by the branching solvers.
struct BranchStats {
    std::uint64_t calls = 0;
    std::uint64_t leaves = 0;
    std::uint64_t max_depth = 0;
    std::uint64_t success_branches = 0;
    std::uint64_t failure_branches = 0;
    std::uint64_t component_splits = 0;
    std::uint64_t cache_hits = 0;
    /// Connected calls whose successful child was re-enumerated and compared bucket by bucket.
    std::uint64_t progress_checks = 0;
    /// Of those, calls where fewer than C(n,2)/(2t) buckets lost a 1/(2t) fraction.
    std::uint64_t progress_failures = 0;
    /// Largest potential seen at each depth (filled when sampling is enabled).
    std::vector<double> potential_by_depth;
};

struct MwisOptions {
    /// Memoize results by active set. Off by default so the tree matches the plain recursion.
    bool cache = false;
    /// Re-enumerate the successful child at every connected call and check bucket shrinkage.
    bool verify_progress = false;
    bool sample_potential = false;
};

struct MwisResult {
    MwisSolution solution;
    BranchStats stats;
};

namespace detail {

class MwisSolver {
public:
    MwisSolver(const Graph& g, const WeightMap& weights, int t, MwisOptions opt)
        : g_(g), weights_(weights), t_(t), opt_(opt) {}

    MwisSolution solve(const VertexSet& active, std::uint64_t depth) {
        ++stats_.calls;
        stats_.max_depth = std::max(stats_.max_depth, depth);

        const std::size_t n = active.size();
        if (n <= 1) {
            ++stats_.leaves;
            MwisSolution s{0, g_.empty_set()};
            if (n == 1 && weights_.at(active.first()) > 0) {
                s.weight = weights_[active.first()];
                s.chosen.insert(active.first());
            }
            return s;
        }
        if (opt_.cache) {
            if (auto it = cache_.find(active); it != cache_.end()) {
                ++stats_.cache_hits;
                return it->second;
            }
        }

        MwisSolution result = solve_uncached(active, n, depth);
        if (opt_.cache) cache_.emplace(active, result);
        return result;
    }

    BranchStats& stats() { return stats_; }

private:
    MwisSolution solve_uncached(const VertexSet& active, std::size_t n, std::uint64_t depth) {
        auto comps = components(g_, active);
        if (comps.size() > 1) {
            ++stats_.component_splits;
            MwisSolution total{0, g_.empty_set()};
            for (const auto& c : comps) {
                MwisSolution part = solve(c, depth + 1);
                total.weight = checked_add(total.weight, part.weight);
                total.chosen |= part.chosen;
            }
            return total;
        }

        VertexId w = 0;
        VertexSet success_child;
        {
            const PathIndex idx = enumerate_induced_paths(g_, active, t_);
            w = find_heavy_vertex(g_, active, idx, t_).w;
            success_child = active - g_.closed_neighbors(w);
            if (opt_.sample_potential) {
                if (stats_.potential_by_depth.size() <= depth) stats_.potential_by_depth.resize(depth + 1, 0.0);
                stats_.potential_by_depth[depth] = std::max(stats_.potential_by_depth[depth], potential(idx, t_));
            }
            if (opt_.verify_progress) {
                const PathIndex child = enumerate_induced_paths(g_, success_child, t_);
                ++stats_.progress_checks;
                if (2 * static_cast<std::uint64_t>(t_) * shrunk_buckets(idx, child, t_) < pair_count(n)) {
                    ++stats_.progress_failures;
                }
            }
        }

        VertexSet failure_child = active;
        failure_child.erase(w);

        ++stats_.success_branches;
        MwisSolution take = solve(success_child, depth + 1);
        take.weight = checked_add(take.weight, weights_.at(w));
        take.chosen.insert(w);

        ++stats_.failure_branches;
        MwisSolution skip = solve(failure_child, depth + 1);

        return skip.weight > take.weight ? skip : take;
    }

    static Weight checked_add(Weight a, Weight b) { return detail::checked_add(a, b); }

    const Graph& g_;
    const WeightMap& weights_;
    int t_;
    MwisOptions opt_;
    BranchStats stats_;
    std::unordered_map<VertexSet, MwisSolution, VertexSetHash> cache_;
};

}  // namespace detail

/// Exact maximum weight independent set of g[active] for P_t-free inputs, by
/// branching on a 1/(2t)-heavy vertex and splitting into components.
///
/// Negative weights are allowed; the empty set is always feasible. Throws
/// NotPtFree when path enumeration meets an induced P_max(t,5).
inline MwisResult find_mis(const Graph& g, const VertexSet& active, const WeightMap& weights, int t,
                           MwisOptions opt = {}) {
    const int te = effective_t(t);
    if (weights.size() < g.vertex_count()) throw std::invalid_argument("weight map smaller than graph");
    MwisResult result;
    detail::run_with_stack(detail::solver_stack_bytes, [&] {
        detail::MwisSolver solver(g, weights, te, opt);
        result.solution = solver.solve(active, 0);
        result.stats = std::move(solver.stats());
    });
    return result;
}

/// Exact oracle: include/exclude search in increasing id order. Among optimal
/// sets returns the lexicographically smallest sorted id sequence.
inline MwisSolution brute_force_mis(const Graph& g, const VertexSet& active, const WeightMap& weights) {
    if (active.size() > 30) throw SizeGuardExceeded("brute_force_mis supports at most 30 active vertices");
    const std::vector<VertexId> order = active.to_vector();
    const std::size_t k = order.size();
    std::vector<Weight> positive_suffix(k + 1, 0);
    for (std::size_t i = k; i-- > 0;) {
        positive_suffix[i] = positive_suffix[i + 1] + std::max<Weight>(0, weights.at(order[i]));
    }

    Weight best = 0;
    std::vector<VertexId> best_set;
    std::vector<VertexId> current;
    auto rec = [&](auto&& self, std::size_t i, Weight weight, const VertexSet& blocked) -> void {
        if (weight + positive_suffix[i] < best) return;
        if (i == k) {
            if (weight > best || (weight == best && current < best_set)) {
                best = weight;
                best_set = current;
            }
            return;
        }
        const VertexId v = order[i];
        if (!blocked.contains(v)) {
            current.push_back(v);
            self(self, i + 1, weight + weights[v], blocked | g.closed_neighbors(v));
            current.pop_back();
        }
        self(self, i + 1, weight, blocked);
    };
    rec(rec, 0, 0, g.empty_set());
    return {best, VertexSet::from(g.vertex_count(), best_set)};
}

}  // namespace ptfree

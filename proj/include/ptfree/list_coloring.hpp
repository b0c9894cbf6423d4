#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "decomposition.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "lists.hpp"
#include "mwis.hpp"
#include "path_space.hpp"
#include "stack.hpp"
#include "vertex_set.hpp"

namespace ptfree {

inline constexpr int max_coloring_t = 8;

/// A list-coloring instance over the root graph. Vertices leave `active` once
/// their color is committed in `fixed` (0 = not fixed).
struct ColoringInstance {
    VertexSet active;
    ListAssignment lists;
    std::vector<Color> fixed;
};

inline ColoringInstance make_coloring_instance(const Graph& g, const VertexSet& active, const ListAssignment& lists) {
    if (lists.size() < g.vertex_count()) throw std::invalid_argument("list assignment smaller than graph");
    return {active, lists, std::vector<Color>(g.vertex_count(), 0)};
}

struct ColoringSolution {
    /// Color per root-graph vertex; 0 outside the solved vertex set.
    std::vector<Color> assignment;
    /// Set by the min-cost solvers.
    std::optional<Cost> cost;
};

/// An empty `solution` means INFEASIBLE.
struct ColoringResult {
    std::optional<ColoringSolution> solution;
    BranchStats stats;

    bool feasible() const noexcept { return solution.has_value(); }
};

namespace detail {

/// Calls visit(members) for every connected vertex set of g[active] with at most
/// max_size vertices, each exactly once (extension by exclusive neighborhoods,
/// smallest member as root).
template <typename Visit>
void for_each_connected_set(const Graph& g, const VertexSet& active, std::size_t max_size, Visit&& visit) {
    if (max_size == 0) return;
    std::vector<VertexId> members;
    auto extend = [&](auto&& self, VertexId root, const VertexSet& halo, VertexSet ext) -> void {
        visit(static_cast<const std::vector<VertexId>&>(members));
        if (members.size() == max_size) return;
        for (VertexId w = ext.first(); w < ext.universe(); w = ext.first()) {
            ext.erase(w);
            VertexSet next_ext = ext;
            VertexSet fresh = g.neighbors(w) & active;
            fresh -= halo;
            fresh.for_each([&](VertexId u) {
                if (u > root) next_ext.insert(u);
            });
            members.push_back(w);
            self(self, root, halo | g.closed_neighbors(w), std::move(next_ext));
            members.pop_back();
        }
    };
    active.for_each([&](VertexId root) {
        VertexSet ext(g.vertex_count());
        (g.neighbors(root) & active).for_each([&](VertexId u) {
            if (u > root) ext.insert(u);
        });
        members.assign(1, root);
        extend(extend, root, g.closed_neighbors(root), std::move(ext));
    });
}

/// For each member of s, the colors it takes in some proper list coloring of g[s].
/// Returns false when g[s] has no proper list coloring.
inline bool achievable_colors(const Graph& g, const std::vector<VertexId>& s, const ListAssignment& lists,
                              std::vector<ColorMask>& achievable) {
    const std::size_t k = s.size();
    achievable.assign(k, 0);
    std::vector<Color> color(k, 0);
    bool any = false;
    bool saturated = false;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (saturated) return;
        if (i == k) {
            any = true;
            saturated = true;
            for (std::size_t j = 0; j < k; ++j) {
                achievable[j] |= color_bit(color[j]);
                saturated = saturated && achievable[j] == lists[s[j]];
            }
            return;
        }
        for (Color c = 1; c <= 3; ++c) {
            if (!has_color(lists[s[i]], c)) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) ok = !(color[j] == c && g.adjacent(s[i], s[j]));
            if (!ok) continue;
            color[i] = c;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return any;
}

}  // namespace detail

/// Exhaustive reduction to a fixpoint of:
///   an empty list makes the instance INFEASIBLE;
///   a singleton list {c} fixes the vertex to c, deletes it, and removes c from its neighbors' lists;
///   for every vertex set S of at most t-1 vertices, a color c is dropped from L(v), v in S,
///   when no proper list coloring of G[S] colors v with c, and an uncolorable G[S] is INFEASIBLE.
///
/// Only connected sets S are enumerated: colorings of G[S] are products of colorings
/// of its components, so the connected sets decide every rule instance.
/// Returns nullopt for INFEASIBLE. The result has lists of size 2 or 3 on every
/// active vertex, and each (vertex, color) choice extends to every small S.
inline std::optional<ColoringInstance> preprocess(const Graph& g, ColoringInstance inst, int t) {
    detail::require_t(t);
    const auto max_size = static_cast<std::size_t>(t - 1);
    std::vector<ColorMask> achievable;
    while (true) {
        bool infeasible = false;
        bool progress = true;
        while (progress && !infeasible) {
            progress = false;
            inst.active.for_each([&](VertexId v) {
                if (infeasible || !inst.active.contains(v)) return;
                const int size = color_count(inst.lists[v]);
                if (size == 0) {
                    infeasible = true;
                } else if (size == 1) {
                    const Color c = single_color(inst.lists[v]);
                    inst.fixed[v] = c;
                    inst.active.erase(v);
                    for (VertexId u : g.neighbor_list(v)) {
                        if (inst.active.contains(u)) inst.lists[u] &= static_cast<ColorMask>(~color_bit(c));
                    }
                    progress = true;
                }
            });
        }
        if (infeasible) return std::nullopt;

        bool changed = false;
        detail::for_each_connected_set(g, inst.active, max_size, [&](const std::vector<VertexId>& s) {
            if (infeasible || s.size() < 2) return;
            if (!detail::achievable_colors(g, s, inst.lists, achievable)) {
                infeasible = true;
                return;
            }
            for (std::size_t j = 0; j < s.size(); ++j) {
                const ColorMask reduced = inst.lists[s[j]] & achievable[j];
                if (reduced != inst.lists[s[j]]) {
                    inst.lists[s[j]] = reduced;
                    changed = true;
                }
            }
        });
        if (infeasible) return std::nullopt;
        if (!changed) return inst;
    }
}

/// True iff every active list has 2 or 3 colors and every (v, c in L(v)) extends
/// to a proper list coloring of every vertex set of size <= t-1 containing v.
inline bool satisfies_consistency(const Graph& g, const ColoringInstance& inst, int t) {
    bool ok = true;
    inst.active.for_each([&](VertexId v) {
        const int size = color_count(inst.lists[v]);
        ok = ok && size >= 2 && size <= 3;
    });
    if (!ok) return false;
    std::vector<ColorMask> achievable;
    detail::for_each_connected_set(g, inst.active, static_cast<std::size_t>(t - 1), [&](const std::vector<VertexId>& s) {
        if (!ok) return;
        if (!detail::achievable_colors(g, s, inst.lists, achievable)) {
            ok = false;
            return;
        }
        for (std::size_t j = 0; j < s.size(); ++j) ok = ok && achievable[j] == inst.lists[s[j]];
    });
    return ok;
}

namespace detail {

inline Cost assignment_cost(const CostMap& costs, const std::vector<Color>& a, const VertexSet& scope) {
    Cost sum = 0;
    scope.for_each([&](VertexId v) { sum = checked_add(sum, costs(v, a[v])); });
    return sum;
}

class ColoringSolver {
public:
    ColoringSolver(const Graph& g, const CostMap* costs, int t) : g_(g), costs_(costs), t_(t) {}

    /// Colors for every vertex of inst.active (plus inst.fixed), or nullopt.
    std::optional<std::vector<Color>> solve(const ColoringInstance& inst, std::uint64_t depth) {
        ++stats_.calls;
        stats_.max_depth = std::max(stats_.max_depth, depth);

        auto reduced = preprocess(g_, inst, t_);
        if (!reduced) {
            ++stats_.leaves;
            return std::nullopt;
        }
        ColoringInstance& r = *reduced;
        const std::size_t n = r.active.size();
        if (n == 0) {
            ++stats_.leaves;
            return std::move(r.fixed);
        }
        if (n == 1) {
            ++stats_.leaves;
            const VertexId v = r.active.first();
            Color best = 0;
            for (Color c = 1; c <= 3; ++c) {
                if (!has_color(r.lists[v], c)) continue;
                if (best == 0 || (costs_ != nullptr && (*costs_)(v, c) < (*costs_)(v, best))) best = c;
            }
            r.fixed[v] = best;
            return std::move(r.fixed);
        }

        auto comps = components(g_, r.active);
        if (comps.size() > 1) {
            ++stats_.component_splits;
            std::vector<Color> merged = r.fixed;
            for (const auto& comp : comps) {
                ColoringInstance sub{comp, r.lists, r.fixed};
                auto part = solve(sub, depth + 1);
                if (!part) return std::nullopt;
                comp.for_each([&](VertexId v) { merged[v] = (*part)[v]; });
            }
            return merged;
        }

        ColoredHeavyReport pick;
        {
            const ColoredPathIndex cidx = enumerate_colored_paths(g_, r.active, t_, r.lists);
            pick = find_heavy_vertex_color(g_, r.active, cidx, t_, r.lists);
        }

        ColoringInstance assign = r;
        assign.lists[pick.w] = color_bit(pick.c);
        ++stats_.success_branches;
        auto with_c = solve(assign, depth + 1);
        if (with_c && costs_ == nullptr) return with_c;

        ColoringInstance remove = std::move(r);
        remove.lists[pick.w] &= static_cast<ColorMask>(~color_bit(pick.c));
        ++stats_.failure_branches;
        auto without_c = solve(remove, depth + 1);

        if (!with_c) return without_c;
        if (!without_c) return with_c;
        const Cost a = assignment_cost(*costs_, *with_c, inst.active);
        const Cost b = assignment_cost(*costs_, *without_c, inst.active);
        return b < a ? without_c : with_c;
    }

    BranchStats& stats() { return stats_; }

private:
    const Graph& g_;
    const CostMap* costs_;
    int t_;
    BranchStats stats_;
};

inline int coloring_t(int t) {
    const int te = effective_t(t);
    if (te > max_coloring_t) {
        throw std::invalid_argument("list coloring supports t <= " + std::to_string(max_coloring_t));
    }
    return te;
}

inline ColoringResult run_coloring(const Graph& g, const VertexSet& active, const ListAssignment& lists,
                                   const CostMap* costs, int t) {
    const int te = coloring_t(t);
    if (costs != nullptr && costs->size() < g.vertex_count()) throw std::invalid_argument("cost map smaller than graph");
    ColoringResult result;
    run_with_stack(solver_stack_bytes, [&] {
        ColoringSolver solver(g, costs, te);
        auto colors = solver.solve(make_coloring_instance(g, active, lists), 0);
        if (colors) {
            ColoringSolution s;
            s.assignment.assign(g.vertex_count(), 0);
            active.for_each([&](VertexId v) { s.assignment[v] = (*colors)[v]; });
            if (costs != nullptr) s.cost = assignment_cost(*costs, s.assignment, active);
            result.solution = std::move(s);
        }
        result.stats = std::move(solver.stats());
    });
    return result;
}

}  // namespace detail

/// List 3-coloring of a P_t-free g[active] by colored-bucket branching.
inline ColoringResult solve_list3col(const Graph& g, const VertexSet& active, const ListAssignment& lists, int t) {
    return detail::run_coloring(g, active, lists, nullptr, t);
}

/// Minimum total cost proper list coloring; both branches of every node are explored.
inline ColoringResult solve_min_cost_3col(const Graph& g, const VertexSet& active, const ListAssignment& lists,
                                          const CostMap& costs, int t) {
    return detail::run_coloring(g, active, lists, &costs, t);
}

struct OctSolution {
    VertexSet transversal;
    Weight weight = 0;
};

struct OctResult {
    /// Empty when g[active] is not 3-colorable.
    std::optional<OctSolution> solution;
    BranchStats stats;
};

/// Minimum weight independent set X such that g[active - X] is bipartite: the
/// color-3 class of a min-cost 3-coloring with cost(v,3) = weight(v).
inline OctResult solve_independent_oct(const Graph& g, const VertexSet& active, const WeightMap& weights, int t) {
    CostMap costs(g.vertex_count());
    active.for_each([&](VertexId v) {
        if (weights.at(v) < 0) throw std::invalid_argument("independent OCT needs nonnegative weights");
        costs.set(v, 3, weights[v]);
    });
    ColoringResult colored = solve_min_cost_3col(g, active, full_lists(g.vertex_count()), costs, t);
    OctResult out;
    out.stats = std::move(colored.stats);
    if (colored.solution) {
        OctSolution s{g.empty_set(), *colored.solution->cost};
        active.for_each([&](VertexId v) {
            if (colored.solution->assignment[v] == 3) s.transversal.insert(v);
        });
        out.solution = std::move(s);
    }
    return out;
}

namespace detail {

template <typename OnComplete>
void backtrack_colorings(const Graph& g, const std::vector<VertexId>& order, const ListAssignment& lists,
                         std::vector<Color>& assignment, OnComplete&& on_complete) {
    const std::size_t k = order.size();
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == k) return on_complete(assignment);
        const VertexId v = order[i];
        for (Color c = 1; c <= 3; ++c) {
            if (!has_color(lists[v], c)) continue;
            bool ok = true;
            for (VertexId u : g.neighbor_list(v)) {
                if (assignment[u] == c) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            assignment[v] = c;
            const bool go_on = self(self, i + 1);
            assignment[v] = 0;
            if (!go_on) return false;
        }
        return true;
    };
    rec(rec, 0);
}

}  // namespace detail

/// Exact oracle: backtracking in increasing id order; the first (lexicographically
/// smallest) proper list coloring, or nullopt.
inline std::optional<ColoringSolution> brute_force_list3col(const Graph& g, const VertexSet& active,
                                                            const ListAssignment& lists) {
    if (active.size() > 18) throw SizeGuardExceeded("brute_force_list3col supports at most 18 active vertices");
    std::vector<Color> assignment(g.vertex_count(), 0);
    std::optional<ColoringSolution> found;
    detail::backtrack_colorings(g, active.to_vector(), lists, assignment, [&](const std::vector<Color>& a) {
        found = ColoringSolution{a, std::nullopt};
        return false;
    });
    return found;
}

/// Min-cost twin: minimum cost, then lexicographically smallest assignment.
inline std::optional<ColoringSolution> brute_force_min_cost_3col(const Graph& g, const VertexSet& active,
                                                                 const ListAssignment& lists, const CostMap& costs) {
    if (active.size() > 18) throw SizeGuardExceeded("brute_force_min_cost_3col supports at most 18 active vertices");
    const std::vector<VertexId> order = active.to_vector();
    std::vector<Color> assignment(g.vertex_count(), 0);
    std::optional<ColoringSolution> best;
    // Costs are nonnegative, so a partial cost already >= the best cannot win;
    // equal-cost completions found later are lexicographically larger.
    auto rec = [&](auto&& self, std::size_t i, Cost partial) -> void {
        if (best && partial >= *best->cost) return;
        if (i == order.size()) {
            best = ColoringSolution{assignment, partial};
            return;
        }
        const VertexId v = order[i];
        for (Color c = 1; c <= 3; ++c) {
            if (!has_color(lists[v], c)) continue;
            bool ok = true;
            for (VertexId u : g.neighbor_list(v)) ok = ok && assignment[u] != c;
            if (!ok) continue;
            assignment[v] = c;
            self(self, i + 1, detail::checked_add(partial, costs(v, c)));
            assignment[v] = 0;
        }
    };
    rec(rec, 0, 0);
    return best;
}

namespace detail {

inline bool is_bipartite(const Graph& g, const VertexSet& active) {
    std::vector<int> side(g.vertex_count(), -1);
    std::vector<VertexId> stack;
    bool ok = true;
    active.for_each([&](VertexId root) {
        if (!ok || side[root] != -1) return;
        side[root] = 0;
        stack.assign(1, root);
        while (!stack.empty() && ok) {
            const VertexId v = stack.back();
            stack.pop_back();
            for (VertexId u : g.neighbor_list(v)) {
                if (!active.contains(u)) continue;
                if (side[u] == -1) {
                    side[u] = 1 - side[v];
                    stack.push_back(u);
                } else if (side[u] == side[v]) {
                    ok = false;
                }
            }
        }
    });
    return ok;
}

}  // namespace detail

/// Exact oracle over all vertex subsets: the minimum weight independent X with
/// g[active - X] bipartite (first such subset in binary-counter order on ties).
inline std::optional<OctSolution> brute_force_independent_oct(const Graph& g, const VertexSet& active,
                                                              const WeightMap& weights) {
    if (active.size() > 20) throw SizeGuardExceeded("brute_force_independent_oct supports at most 20 active vertices");
    const std::vector<VertexId> order = active.to_vector();
    std::optional<OctSolution> best;
    const std::uint32_t limit = 1U << order.size();
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        VertexSet x(g.vertex_count());
        Weight w = 0;
        for (std::size_t i = 0; i < order.size(); ++i) {
            if ((mask >> i) & 1U) {
                x.insert(order[i]);
                w = detail::checked_add(w, weights.at(order[i]));
            }
        }
        if (best && w >= best->weight) continue;
        if (is_independent(g, x) && detail::is_bipartite(g, active - x)) best = OctSolution{std::move(x), w};
    }
    return best;
}

}  // namespace ptfree

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "lists.hpp"
#include "path_space.hpp"
#include "vertex_set.hpp"

namespace ptfree {

inline std::uint64_t pair_count(std::size_t n) noexcept {
    return static_cast<std::uint64_t>(n) * (n == 0 ? 0 : n - 1) / 2;
}

struct SeparatorResult {
    VertexSet x;
    VertexSet halo;
    /// Sizes of the components of active - halo, ordered by smallest member.
    std::vector<std::size_t> component_sizes;
    /// Members of x in path order; x induces this path.
    std::vector<VertexId> path;
};

/// Connected set X (an induced path) such that every component of active - N[X]
/// has at most |active|/2 vertices.
///
/// X grows as an induced path v1..vk. With C(k) the unique component of
/// active - N[v1..vk] larger than |active|/2, the next vertex is the smallest-id
/// y in N(vk) ∩ C(k-1) adjacent to C(k). Such y always exists in a connected
/// graph and is non-adjacent to v1..v(k-1), so a path reaching t vertices is an
/// induced P_t and is reported as NotPtFree.
inline SeparatorResult gyarfas_separator(const Graph& g, const VertexSet& active, int t) {
    detail::require_t(t);
    const std::size_t n = active.size();
    SeparatorResult out{g.empty_set(), g.empty_set(), {}, {}};
    if (n == 0) return out;
    if (components(g, active).size() > 1) {
        throw InvariantViolation("gyarfas_separator: active vertex set is disconnected");
    }

    VertexSet region = active;
    out.path.push_back(active.first());
    out.x.insert(out.path.back());
    while (true) {
        out.halo = closed_neighborhood(g, out.x) & active;
        auto comps = components(g, active - out.halo);
        const VertexSet* big = nullptr;
        out.component_sizes.clear();
        for (const auto& c : comps) {
            out.component_sizes.push_back(c.size());
            if (2 * c.size() > n) big = &c;
        }
        if (big == nullptr) return out;

        const VertexSet candidates = g.neighbors(out.path.back()) & region;
        VertexId y = static_cast<VertexId>(g.vertex_count());
        candidates.for_each([&](VertexId z) {
            if (y == g.vertex_count() && g.neighbors(z).intersects(*big)) y = z;
        });
        if (y == g.vertex_count()) {
            throw InvariantViolation("gyarfas_separator: no extension vertex found");
        }
        region = *big;
        out.path.push_back(y);
        out.x.insert(y);
        if (out.path.size() >= static_cast<std::size_t>(t)) {
            throw NotPtFree(t, detail::canonical_orientation(out.path));
        }
    }
}

struct BucketHits {
    VertexId u = 0;
    VertexId v = 0;
    std::size_t size = 0;
    /// Paths of the bucket meeting the closed neighborhood (colored variant: with the chosen color).
    std::size_t hits = 0;
};

struct HeavyVertexReport {
    VertexId w = 0;
    std::size_t hit_buckets = 0;
    std::uint64_t total_buckets = 0;
    std::vector<BucketHits> per_bucket_hits;
};

/// True iff `hits` of `size` paths is at least a 1/(2t) fraction.
inline bool eps_hits(std::size_t hits, std::size_t size, int t) noexcept {
    return 2 * static_cast<std::uint64_t>(t) * hits >= size;
}

/// The vertex w whose closed neighborhood 1/(2t)-hits the most buckets
/// (ties: smallest id). Throws InvariantViolation if it is not 1/(2t)-heavy.
inline HeavyVertexReport find_heavy_vertex(const Graph& g, const VertexSet& active, const PathIndex& idx, int t) {
    const std::size_t n = active.size();
    if (n < 2) throw InvariantViolation("find_heavy_vertex: needs at least two active vertices");

    std::vector<std::size_t> hit(g.vertex_count(), 0);
    std::vector<std::uint32_t> count(g.vertex_count(), 0);
    std::vector<VertexId> touched;
    VertexSet reach(g.vertex_count());
    for (const auto& b : idx.buckets()) {
        touched.clear();
        for (std::size_t i = b.begin; i < b.end; ++i) {
            reach = g.empty_set();
            for (VertexId x : idx.path(i)) reach |= g.closed_neighbors(x);
            reach &= active;
            reach.for_each([&](VertexId w) {
                if (count[w]++ == 0) touched.push_back(w);
            });
        }
        for (VertexId w : touched) {
            if (eps_hits(count[w], b.size(), t)) ++hit[w];
            count[w] = 0;
        }
    }

    HeavyVertexReport r;
    r.total_buckets = pair_count(n);
    r.w = active.first();
    active.for_each([&](VertexId w) {
        if (hit[w] > hit[r.w]) r.w = w;
    });
    r.hit_buckets = hit[r.w];
    if (4 * static_cast<std::uint64_t>(t) * r.hit_buckets < static_cast<std::uint64_t>(n) * (n - 1)) {
        throw InvariantViolation("find_heavy_vertex: no 1/(2t)-heavy vertex (best " + std::to_string(r.w) +
                                 " hits " + std::to_string(r.hit_buckets) + " of " +
                                 std::to_string(r.total_buckets) + " buckets)");
    }

    const VertexSet& halo = g.closed_neighbors(r.w);
    for (const auto& b : idx.buckets()) {
        BucketHits bh{b.u, b.v, b.size(), 0};
        for (std::size_t i = b.begin; i < b.end; ++i) {
            for (VertexId x : idx.path(i)) {
                if (halo.contains(x)) {
                    ++bh.hits;
                    break;
                }
            }
        }
        r.per_bucket_hits.push_back(bh);
    }
    return r;
}

struct ColoredHeavyReport {
    VertexId w = 0;
    Color c = 0;
    std::size_t qualifying_buckets = 0;
    std::uint64_t total_buckets = 0;
    std::vector<BucketHits> per_bucket_hits;
};

/// True iff `hits` of `size` colored paths is at least a 1/(8t * 3^(t-1)) fraction.
inline bool colored_eps_hits(std::size_t hits, std::size_t size, int t) noexcept {
    unsigned __int128 scale = 8 * static_cast<unsigned __int128>(t);
    for (int i = 1; i < t; ++i) scale *= 3;
    return scale * hits >= size;
}

/// The pair (w, c), c in L(w), maximizing the number of buckets in which enough
/// colored paths have a vertex of N[w] colored c (ties: lexicographic (w, c)).
/// Throws InvariantViolation if the pair qualifies in fewer than C(n,2)/(8t) buckets.
inline ColoredHeavyReport find_heavy_vertex_color(const Graph& g, const VertexSet& active,
                                                  const ColoredPathIndex& cidx, int t, const ListAssignment& lists) {
    const std::size_t n = active.size();
    if (n < 2) throw InvariantViolation("find_heavy_vertex_color: needs at least two active vertices");

    const std::size_t slots = g.vertex_count() * 3;
    std::vector<std::size_t> qualifying(slots, 0);
    std::vector<std::uint32_t> count(slots, 0);
    std::vector<std::size_t> touched;
    VertexSet reach(g.vertex_count());
    for (const auto& b : cidx.buckets()) {
        touched.clear();
        for (std::size_t i = b.begin; i < b.end; ++i) {
            auto p = cidx.path(i);
            auto col = cidx.colors(i);
            for (Color c = 1; c <= 3; ++c) {
                reach = g.empty_set();
                for (std::size_t k = 0; k < p.size(); ++k) {
                    if (col[k] == c) reach |= g.closed_neighbors(p[k]);
                }
                reach &= active;
                reach.for_each([&](VertexId w) {
                    if (!has_color(lists[w], c)) return;
                    const std::size_t slot = w * 3 + (c - 1);
                    if (count[slot]++ == 0) touched.push_back(slot);
                });
            }
        }
        for (std::size_t slot : touched) {
            if (colored_eps_hits(count[slot], b.size(), t)) ++qualifying[slot];
            count[slot] = 0;
        }
    }

    ColoredHeavyReport r;
    r.total_buckets = pair_count(n);
    bool found = false;
    active.for_each([&](VertexId w) {
        for (Color c = 1; c <= 3; ++c) {
            if (!has_color(lists[w], c)) continue;
            const std::size_t q = qualifying[w * 3 + (c - 1)];
            if (!found || q > r.qualifying_buckets) {
                found = true;
                r.w = w;
                r.c = c;
                r.qualifying_buckets = q;
            }
        }
    });
    if (!found || 8 * static_cast<std::uint64_t>(t) * r.qualifying_buckets < r.total_buckets) {
        throw InvariantViolation("find_heavy_vertex_color: no qualifying (vertex, color) pair");
    }

    const VertexSet& halo = g.closed_neighbors(r.w);
    for (const auto& b : cidx.buckets()) {
        BucketHits bh{b.u, b.v, b.size(), 0};
        for (std::size_t i = b.begin; i < b.end; ++i) {
            auto p = cidx.path(i);
            auto col = cidx.colors(i);
            for (std::size_t k = 0; k < p.size(); ++k) {
                if (col[k] == r.c && halo.contains(p[k])) {
                    ++bh.hits;
                    break;
                }
            }
        }
        r.per_bucket_hits.push_back(bh);
    }
    return r;
}

/// mu = -sum over buckets of log base (1 - 1/(2t)) of (1 + |B|). Empty buckets add 0.
/// Telemetry only.
inline double potential(const PathStore& idx, int t) {
    const double denom = -std::log1p(-1.0 / (2.0 * t));
    double mu = 0.0;
    for (const auto& b : idx.buckets()) mu += std::log1p(static_cast<double>(b.size())) / denom;
    return mu;
}

/// Buckets of `idx` in which every path meets `halo`.
inline std::size_t fully_covered_buckets(const PathIndex& idx, const VertexSet& halo) {
    std::size_t covered = 0;
    for (const auto& b : idx.buckets()) {
        bool all = true;
        for (std::size_t i = b.begin; i < b.end && all; ++i) {
            bool meets = false;
            for (VertexId x : idx.path(i)) meets = meets || halo.contains(x);
            all = meets;
        }
        if (all) ++covered;
    }
    return covered;
}

/// Parent buckets that lost at least a 1/(2t) fraction of their paths in `child`
/// (an index over a subset of the parent's active vertices).
inline std::size_t shrunk_buckets(const PathIndex& parent, const PathIndex& child, int t) {
    std::size_t shrunk = 0;
    for (const auto& b : parent.buckets()) {
        const std::size_t kept = child.bucket_size(b.u, b.v);
        if (kept > b.size()) throw InvariantViolation("shrunk_buckets: child bucket larger than parent");
        if (eps_hits(b.size() - kept, b.size(), t)) ++shrunk;
    }
    return shrunk;
}

}  // namespace ptfree

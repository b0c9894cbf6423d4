#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "lists.hpp"
#include "vertex_set.hpp"

namespace ptfree {

namespace detail {

/// Depth-first walk over the induced paths of g[active] having 2..max_vertices
/// vertices, in both orientations. `visit(path)` returns false to stop the walk.
/// Returns false iff the walk was stopped.
///
/// A prefix v1..vk extends by any active neighbor of vk outside N[v1..v(k-1)],
/// which keeps the sequence induced.
template <typename Visit>
bool walk_induced_paths(const Graph& g, const VertexSet& active, std::size_t max_vertices, Visit&& visit) {
    if (max_vertices < 2) return true;
    std::vector<VertexId> path;
    // blocked[k] = active ∩ N[v1..vk], so candidates after vk are N(vk) ∩ active - blocked[k-1].
    std::vector<VertexSet> blocked;
    std::vector<VertexSet> candidates;
    path.reserve(max_vertices);

    for (VertexId s = active.first(); s < active.universe(); s = active.next(s + 1)) {
        path.assign(1, s);
        blocked.assign(1, g.closed_neighbors(s) & active);
        candidates.assign(1, g.neighbors(s) & active);
        std::vector<VertexId> cursor{0};

        while (!path.empty()) {
            const std::size_t depth = path.size() - 1;
            VertexId next = candidates[depth].next(cursor[depth]);
            if (next >= active.universe()) {
                path.pop_back();
                blocked.pop_back();
                candidates.pop_back();
                cursor.pop_back();
                continue;
            }
            cursor[depth] = next + 1;
            path.push_back(next);
            if (!visit(std::span<const VertexId>(path))) return false;
            if (path.size() == max_vertices) {
                path.pop_back();
                continue;
            }
            VertexSet cand = g.neighbors(next) & active;
            cand -= blocked[depth];
            candidates.push_back(std::move(cand));
            blocked.push_back(blocked[depth] | (g.closed_neighbors(next) & active));
            cursor.push_back(0);
        }
    }
    return true;
}

inline std::vector<VertexId> canonical_orientation(std::span<const VertexId> p) {
    std::vector<VertexId> out(p.begin(), p.end());
    if (!out.empty() && out.front() > out.back()) std::reverse(out.begin(), out.end());
    return out;
}

inline void require_t(int t) {
    if (t < 2) throw std::invalid_argument("t must be at least 2");
}

}  // namespace detail

/// Paths sharing endpoints {u, v} (u < v) occupy the half-open range [begin, end).
struct PathBucket {
    VertexId u = 0;
    VertexId v = 0;
    std::uint32_t begin = 0;
    std::uint32_t end = 0;

    std::size_t size() const noexcept { return end - begin; }
};

/// Shared storage for bucketed induced paths: vertex sequences are stored flat,
/// sorted by (u, v, length, sequence), and grouped into non-empty buckets.
class PathStore {
public:
    int t() const noexcept { return t_; }
    const VertexSet& active() const noexcept { return active_; }
    std::size_t active_size() const noexcept { return active_count_; }

    std::size_t total() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::span<const VertexId> path(std::size_t i) const noexcept {
        return {vertices_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
    }

    /// Non-empty buckets in (u, v) order. Pairs without a path have no entry.
    std::span<const PathBucket> buckets() const noexcept { return buckets_; }

    const PathBucket* find(VertexId u, VertexId v) const noexcept {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(buckets_.begin(), buckets_.end(), std::pair{u, v},
                                   [](const PathBucket& b, const std::pair<VertexId, VertexId>& key) {
                                       return std::pair{b.u, b.v} < key;
                                   });
        if (it == buckets_.end() || it->u != u || it->v != v) return nullptr;
        return &*it;
    }

    std::size_t bucket_size(VertexId u, VertexId v) const noexcept {
        const PathBucket* b = find(u, v);
        return b == nullptr ? 0 : b->size();
    }

protected:
    void rebuild_buckets() {
        buckets_.clear();
        for (std::size_t i = 0; i < total(); ++i) {
            auto p = path(i);
            const VertexId u = p.front();
            const VertexId v = p.back();
            if (buckets_.empty() || buckets_.back().u != u || buckets_.back().v != v) {
                buckets_.push_back({u, v, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i)});
            }
            buckets_.back().end = static_cast<std::uint32_t>(i + 1);
        }
    }

    int t_ = 0;
    VertexSet active_;
    std::size_t active_count_ = 0;
    std::vector<VertexId> vertices_;
    std::vector<std::uint32_t> offsets_;
    std::vector<PathBucket> buckets_;
};

/// All induced paths on 2..t-1 vertices of an active subgraph, bucketed by endpoints.
class PathIndex : public PathStore {
public:
    std::size_t total_paths() const noexcept { return total(); }

    friend PathIndex enumerate_induced_paths(const Graph&, const VertexSet&, int);
};

/// Induced paths paired with each of their proper list colorings.
class ColoredPathIndex : public PathStore {
public:
    std::span<const Color> colors(std::size_t i) const noexcept {
        return {colors_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
    }

    friend ColoredPathIndex enumerate_colored_paths(const Graph&, const VertexSet&, int, const ListAssignment&);

private:
    std::vector<Color> colors_;
};

/// Enumerates every induced path of g[active] on 2..t-1 vertices, each once with
/// its smaller endpoint first. Throws NotPtFree at the first induced path on t vertices.
inline PathIndex enumerate_induced_paths(const Graph& g, const VertexSet& active, int t) {
    detail::require_t(t);
    const auto max_vertices = static_cast<std::size_t>(t);

    std::vector<VertexId> flat;
    std::vector<std::uint32_t> offsets{0};
    detail::walk_induced_paths(g, active, max_vertices, [&](std::span<const VertexId> p) {
        if (p.size() == max_vertices) throw NotPtFree(t, detail::canonical_orientation(p));
        if (p.front() < p.back()) {
            flat.insert(flat.end(), p.begin(), p.end());
            offsets.push_back(static_cast<std::uint32_t>(flat.size()));
        }
        return true;
    });

    const std::size_t count = offsets.size() - 1;
    std::vector<std::uint32_t> order(count);
    std::iota(order.begin(), order.end(), 0U);
    auto view = [&](std::uint32_t i) {
        return std::span<const VertexId>(flat.data() + offsets[i], offsets[i + 1] - offsets[i]);
    };
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        auto pa = view(a);
        auto pb = view(b);
        if (pa.front() != pb.front()) return pa.front() < pb.front();
        if (pa.back() != pb.back()) return pa.back() < pb.back();
        if (pa.size() != pb.size()) return pa.size() < pb.size();
        return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
    });

    PathIndex idx;
    idx.t_ = t;
    idx.active_ = active;
    idx.active_count_ = active.size();
    idx.vertices_.reserve(flat.size());
    idx.offsets_.reserve(count + 1);
    idx.offsets_.push_back(0);
    for (std::uint32_t i : order) {
        auto p = view(i);
        idx.vertices_.insert(idx.vertices_.end(), p.begin(), p.end());
        idx.offsets_.push_back(static_cast<std::uint32_t>(idx.vertices_.size()));
    }
    idx.rebuild_buckets();
    return idx;
}

struct PtFreeCheck {
    bool pt_free = true;
    /// An induced path on t vertices when pt_free is false; smaller endpoint first.
    std::vector<VertexId> witness;
};

inline PtFreeCheck is_pt_free(const Graph& g, const VertexSet& active, int t) {
    detail::require_t(t);
    PtFreeCheck out;
    const auto max_vertices = static_cast<std::size_t>(t);
    detail::walk_induced_paths(g, active, max_vertices, [&](std::span<const VertexId> p) {
        if (p.size() < max_vertices) return true;
        out.pt_free = false;
        out.witness = detail::canonical_orientation(p);
        return false;
    });
    return out;
}

inline PtFreeCheck is_pt_free(const Graph& g, int t) { return is_pt_free(g, g.all_vertices(), t); }

/// Every proper list coloring of every induced path on 2..t-1 vertices.
/// Colorings of one path are listed in lexicographic order of their color sequences.
inline ColoredPathIndex enumerate_colored_paths(const Graph& g, const VertexSet& active, int t,
                                                const ListAssignment& lists) {
    const PathIndex base = enumerate_induced_paths(g, active, t);

    ColoredPathIndex idx;
    idx.t_ = t;
    idx.active_ = active;
    idx.active_count_ = base.active_size();
    idx.offsets_.push_back(0);

    std::vector<Color> colors;
    for (std::size_t i = 0; i < base.total_paths(); ++i) {
        auto p = base.path(i);
        colors.assign(p.size(), 0);
        // Sequential extension: position k takes the next allowed color after colors[k]
        // that differs from its predecessor.
        std::size_t k = 0;
        while (true) {
            Color c = colors[k];
            do {
                ++c;
            } while (c <= 3 && (!has_color(lists[p[k]], c) || (k > 0 && c == colors[k - 1])));
            if (c > 3) {
                colors[k] = 0;
                if (k == 0) break;
                --k;
                continue;
            }
            colors[k] = c;
            if (k + 1 < p.size()) {
                ++k;
                continue;
            }
            idx.vertices_.insert(idx.vertices_.end(), p.begin(), p.end());
            idx.colors_.insert(idx.colors_.end(), colors.begin(), colors.end());
            idx.offsets_.push_back(static_cast<std::uint32_t>(idx.vertices_.size()));
        }
    }
    idx.rebuild_buckets();
    return idx;
}

struct BucketSize {
    VertexId u = 0;
    VertexId v = 0;
    std::size_t size = 0;
};

struct BucketReport {
    std::vector<BucketSize> buckets;
    std::size_t total = 0;
    std::size_t max = 0;
};

inline BucketReport bucket_report(const PathStore& idx) {
    BucketReport r;
    for (const auto& b : idx.buckets()) {
        r.buckets.push_back({b.u, b.v, b.size()});
        r.max = std::max(r.max, b.size());
    }
    r.total = idx.total();
    return r;
}

}  // namespace ptfree

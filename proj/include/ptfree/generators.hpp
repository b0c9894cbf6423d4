#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"
#include "path_space.hpp"

namespace ptfree {

enum class GenKind { gnp_rejection, chord_repair, cograph, split, complete_multipartite, cycle };

inline std::string_view to_string(GenKind k) {
    switch (k) {
        case GenKind::gnp_rejection: return "gnp-rejection";
        case GenKind::chord_repair: return "chord-repair";
        case GenKind::cograph: return "cograph";
        case GenKind::split: return "split";
        case GenKind::complete_multipartite: return "complete-multipartite";
        case GenKind::cycle: return "cycle";
    }
    return "?";
}

inline std::optional<GenKind> parse_gen_kind(std::string_view s) {
    for (GenKind k : {GenKind::gnp_rejection, GenKind::chord_repair, GenKind::cograph, GenKind::split,
                      GenKind::complete_multipartite, GenKind::cycle}) {
        if (to_string(k) == s) return k;
    }
    return std::nullopt;
}

struct GenSpec {
    GenKind kind = GenKind::chord_repair;
    std::size_t n = 0;
    /// Edge probability (gnp-rejection, chord-repair, split cross edges).
    double p = 0.3;
    int t = 5;
    /// complete-multipartite: part sizes (sum is n when n is 0). split: {clique size}.
    std::vector<std::size_t> parts;
    std::uint64_t seed = 0;
};

class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t gnp_max_attempts = 10000;

namespace detail {

/// mt19937_64 output is fixed by the standard; the distributions below are
/// spelled out so streams match across standard libraries.
class PortableRng {
public:
    explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    bool bernoulli(double p) { return unit() < p; }

    /// Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x = 0;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

inline std::vector<Edge> binomial_edges(std::size_t n, double p, PortableRng& rng) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            if (rng.bernoulli(p)) edges.emplace_back(u, v);
        }
    }
    return edges;
}

inline void validate(const GenSpec& s) {
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument(std::string(to_string(s.kind)) + ": " + why);
    };
    require_t(s.t);
    if (s.p < 0.0 || s.p > 1.0) fail("p must lie in [0, 1]");
    switch (s.kind) {
        case GenKind::gnp_rejection:
            break;
        case GenKind::chord_repair:
            if (s.t < 3) fail("needs t >= 3 (an induced P2 has no chord to add)");
            break;
        case GenKind::cograph:
        case GenKind::complete_multipartite:
            if (s.t < 4) fail("family is P4-free only, needs t >= 4");
            break;
        case GenKind::split:
            if (s.t < 5) fail("split graphs are P5-free only, needs t >= 5");
            if (!s.parts.empty() && s.parts.front() > s.n) fail("clique larger than n");
            break;
        case GenKind::cycle:
            if (s.n < 3) fail("needs n >= 3");
            if (s.n > static_cast<std::size_t>(s.t)) fail("C_n contains an induced P_(n-1); needs n <= t");
            break;
    }
}

inline Graph random_cograph(std::size_t n, PortableRng& rng) {
    std::vector<Edge> edges;
    // Random cotree over the id range [lo, hi): split, recurse, then join or not.
    auto build = [&](auto&& self, VertexId lo, VertexId hi) -> void {
        if (hi - lo <= 1) return;
        const auto mid = static_cast<VertexId>(lo + 1 + rng.below(hi - lo - 1));
        self(self, lo, mid);
        self(self, mid, hi);
        if (rng.bernoulli(0.5)) {
            for (VertexId u = lo; u < mid; ++u) {
                for (VertexId v = mid; v < hi; ++v) edges.emplace_back(u, v);
            }
        }
    };
    build(build, 0, static_cast<VertexId>(n));
    std::vector<VertexId> label(n);
    for (VertexId i = 0; i < n; ++i) label[i] = i;
    rng.shuffle(label);
    for (auto& [u, v] : edges) {
        u = label[u];
        v = label[v];
    }
    return Graph(n, edges);
}

}  // namespace detail

/// A P_t-free graph for spec.t, deterministic in spec.seed.
inline Graph gen(const GenSpec& spec) {
    detail::validate(spec);
    detail::PortableRng rng(spec.seed);
    const std::size_t n = spec.n;

    switch (spec.kind) {
        case GenKind::gnp_rejection: {
            for (std::size_t attempt = 0; attempt < gnp_max_attempts; ++attempt) {
                Graph g(n, detail::binomial_edges(n, spec.p, rng));
                if (is_pt_free(g, spec.t).pt_free) return g;
            }
            throw GenerationError("gnp-rejection: no P" + std::to_string(spec.t) + "-free sample in " +
                                  std::to_string(gnp_max_attempts) + " attempts");
        }
        case GenKind::chord_repair: {
            std::vector<Edge> edges = detail::binomial_edges(n, spec.p, rng);
            while (true) {
                Graph g(n, edges);
                auto check = is_pt_free(g, spec.t);
                if (check.pt_free) return g;
                edges.emplace_back(check.witness.front(), check.witness.back());
            }
        }
        case GenKind::cograph:
            return detail::random_cograph(n, rng);
        case GenKind::split: {
            const std::size_t k = spec.parts.empty() ? n / 2 : spec.parts.front();
            std::vector<Edge> edges;
            for (VertexId u = 0; u < k; ++u) {
                for (VertexId v = u + 1; v < k; ++v) edges.emplace_back(u, v);
            }
            for (VertexId u = 0; u < k; ++u) {
                for (auto v = static_cast<VertexId>(k); v < n; ++v) {
                    if (rng.bernoulli(spec.p)) edges.emplace_back(u, v);
                }
            }
            return Graph(n, edges);
        }
        case GenKind::complete_multipartite: {
            std::vector<std::size_t> parts = spec.parts;
            if (parts.empty()) parts.assign(n, 1);
            std::size_t total = 0;
            for (auto s : parts) total += s;
            if (n != 0 && total != n) throw std::invalid_argument("complete-multipartite: part sizes must sum to n");
            std::vector<std::size_t> part_of;
            for (std::size_t i = 0; i < parts.size(); ++i) part_of.insert(part_of.end(), parts[i], i);
            std::vector<Edge> edges;
            for (VertexId u = 0; u < total; ++u) {
                for (VertexId v = u + 1; v < total; ++v) {
                    if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
                }
            }
            return Graph(total, edges);
        }
        case GenKind::cycle: {
            std::vector<Edge> edges;
            for (VertexId v = 0; v < n; ++v) edges.emplace_back(v, static_cast<VertexId>((v + 1) % n));
            return Graph(n, edges);
        }
    }
    throw std::invalid_argument("unknown generator kind");
}

}  // namespace ptfree

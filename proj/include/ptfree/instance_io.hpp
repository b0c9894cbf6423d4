#pragma once

#include <charconv>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "lists.hpp"

namespace ptfree {

/// Edge weights keyed by (u, v) with u < v. Unlisted edges weigh 1.
using EdgeWeights = std::map<Edge, Weight>;

inline Weight edge_weight(const EdgeWeights& ew, VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    auto it = ew.find({u, v});
    return it == ew.end() ? Weight{1} : it->second;
}

/// A graph together with every optional annotation the text format carries.
struct Instance {
    Graph graph;
    WeightMap weights;
    ListAssignment lists;
    CostMap costs;
    EdgeWeights edge_weights;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::int64_t parse_int(std::string_view tok, std::size_t line_no) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError(line_no, "expected integer, got '" + std::string(tok) + "'");
    }
    return value;
}

}  // namespace detail

/// Parses the DIMACS-like instance format. Vertex ids in the text are 1-based.
///
///   c <comment>
///   p edge <n> <m>
///   e <u> <v>
///   w <v> <weight>          default 1
///   l <v> <colors>          colors over {1,2,3}, default 123
///   k <v> <c> <cost>        default 0
///   ew <u> <v> <weight>     default 1; the edge must exist
inline Instance parse_instance(std::string_view text) {
    std::optional<std::size_t> n;
    std::vector<Edge> edges;
    std::vector<std::pair<VertexId, Weight>> weights;
    std::vector<std::pair<VertexId, ColorMask>> lists;
    std::vector<std::tuple<VertexId, Color, Cost>> costs;
    std::vector<std::tuple<VertexId, VertexId, Weight, std::size_t>> edge_weights;

    auto vertex = [&](std::string_view tok, std::size_t line_no) {
        std::int64_t id = detail::parse_int(tok, line_no);
        if (id < 1 || static_cast<std::size_t>(id) > *n) {
            throw ParseError(line_no, "vertex id " + std::to_string(id) + " out of range 1.." + std::to_string(*n));
        }
        return static_cast<VertexId>(id - 1);
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto tok = detail::split_ws(line);
        if (tok.empty() || tok[0] == "c") continue;
        const std::string_view kind = tok[0];

        if (kind == "p") {
            if (n) throw ParseError(line_no, "duplicate header");
            if (tok.size() != 4 || tok[1] != "edge") throw ParseError(line_no, "expected 'p edge <n> <m>'");
            std::int64_t nv = detail::parse_int(tok[2], line_no);
            std::int64_t mv = detail::parse_int(tok[3], line_no);
            if (nv < 0 || mv < 0) throw ParseError(line_no, "negative size in header");
            n = static_cast<std::size_t>(nv);
            continue;
        }
        if (!n) throw ParseError(line_no, "'" + std::string(kind) + "' line before 'p edge' header");

        if (kind == "e") {
            if (tok.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
            VertexId u = vertex(tok[1], line_no);
            VertexId v = vertex(tok[2], line_no);
            if (u == v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(u + 1));
            edges.emplace_back(u, v);
        } else if (kind == "w") {
            if (tok.size() != 3) throw ParseError(line_no, "expected 'w <v> <weight>'");
            weights.emplace_back(vertex(tok[1], line_no), detail::parse_int(tok[2], line_no));
        } else if (kind == "l") {
            if (tok.size() != 3) throw ParseError(line_no, "expected 'l <v> <colors>'");
            ColorMask m = 0;
            for (char ch : tok[2]) {
                if (ch < '1' || ch > '3') throw ParseError(line_no, "color list must be over {1,2,3}");
                m |= color_bit(static_cast<Color>(ch - '0'));
            }
            lists.emplace_back(vertex(tok[1], line_no), m);
        } else if (kind == "k") {
            if (tok.size() != 4) throw ParseError(line_no, "expected 'k <v> <c> <cost>'");
            VertexId v = vertex(tok[1], line_no);
            std::int64_t c = detail::parse_int(tok[2], line_no);
            if (c < 1 || c > 3) throw ParseError(line_no, "color must be 1, 2 or 3");
            std::int64_t cost = detail::parse_int(tok[3], line_no);
            if (cost < 0) throw ParseError(line_no, "cost must be nonnegative");
            costs.emplace_back(v, static_cast<Color>(c), cost);
        } else if (kind == "ew") {
            if (tok.size() != 4) throw ParseError(line_no, "expected 'ew <u> <v> <weight>'");
            VertexId u = vertex(tok[1], line_no);
            VertexId v = vertex(tok[2], line_no);
            if (u > v) std::swap(u, v);
            edge_weights.emplace_back(u, v, detail::parse_int(tok[3], line_no), line_no);
        } else {
            throw ParseError(line_no, "unknown line type '" + std::string(kind) + "'");
        }
    }
    if (!n) throw ParseError(line_no, "missing 'p edge' header");

    Instance inst{Graph(*n, edges), WeightMap(*n, 1), full_lists(*n), CostMap(*n), {}};
    for (auto [v, w] : weights) inst.weights[v] = w;
    for (auto [v, m] : lists) inst.lists[v] = m;
    for (auto [v, c, cost] : costs) inst.costs.set(v, c, cost);
    for (auto [u, v, w, at] : edge_weights) {
        if (!inst.graph.adjacent(u, v)) {
            throw ParseError(at, "edge weight for non-edge " + std::to_string(u + 1) + " " + std::to_string(v + 1));
        }
        inst.edge_weights[{u, v}] = w;
    }
    return inst;
}

inline Graph parse_graph(std::string_view text) { return parse_instance(text).graph; }

/// Canonical text: header then "e" lines in lexicographic order.
inline std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

/// write_graph plus every annotation that differs from its default.
inline std::string write_instance(const Instance& inst) {
    std::ostringstream out;
    out << write_graph(inst.graph);
    const std::size_t n = inst.graph.vertex_count();
    for (VertexId v = 0; v < n; ++v) {
        if (v < inst.weights.size() && inst.weights[v] != 1) out << "w " << v + 1 << ' ' << inst.weights[v] << '\n';
    }
    for (VertexId v = 0; v < n; ++v) {
        if (v < inst.lists.size() && inst.lists[v] != all_colors) {
            out << "l " << v + 1 << ' ' << mask_to_string(inst.lists[v]) << '\n';
        }
    }
    for (VertexId v = 0; v < n && v < inst.costs.size(); ++v) {
        for (Color c = 1; c <= 3; ++c) {
            if (inst.costs(v, c) != 0) out << "k " << v + 1 << ' ' << int{c} << ' ' << inst.costs(v, c) << '\n';
        }
    }
    for (const auto& [e, w] : inst.edge_weights) {
        if (w != 1) out << "ew " << e.first + 1 << ' ' << e.second + 1 << ' ' << w << '\n';
    }
    return out.str();
}

}  // namespace ptfree

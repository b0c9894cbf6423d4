#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptfree/ptfree.hpp"

namespace ptfree::cli {
namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string target;
    int t = 5;
    std::string input;
    std::string stats_path;
    bool json = false;
    bool cache = false;
    bool color = false;
};

/// Collects the answer as text lines and as the machine-readable run report.
class Output {
public:
    Output(std::string command, const Options& opt) : opt_(opt) {
        report_["command"] = std::move(command);
        report_["instance"] = json::object();
        report_["answer"] = json::object();
    }

    void instance(const Graph& g, std::optional<int> t) {
        report_["instance"] = {{"n", g.vertex_count()}, {"m", g.edge_count()}};
        if (t) report_["instance"]["t"] = *t;
    }
    json& answer() { return report_["answer"]; }
    void stats(const BranchStats& s) {
        report_["stats"] = {
            {"calls", s.calls},
            {"leaves", s.leaves},
            {"max_depth", s.max_depth},
            {"success_branches", s.success_branches},
            {"failure_branches", s.failure_branches},
            {"component_splits", s.component_splits},
            {"cache_hits", s.cache_hits},
        };
    }
    std::ostringstream& text() { return text_; }

    void flush(std::ostream& out, double wall_ms) {
        report_["wall_ms"] = std::round(wall_ms * 1000.0) / 1000.0;
        if (opt_.json) {
            out << report_.dump(2) << '\n';
        } else {
            out << text_.str();
        }
        if (!opt_.stats_path.empty()) {
            std::ofstream f(opt_.stats_path);
            if (!f) throw UsageError("cannot write stats file " + opt_.stats_path);
            f << report_.dump(2) << '\n';
        }
    }

private:
    const Options& opt_;
    json report_;
    std::ostringstream text_;
};

std::vector<std::size_t> one_based(const std::vector<VertexId>& vs) {
    std::vector<std::size_t> out;
    out.reserve(vs.size());
    for (VertexId v : vs) out.push_back(std::size_t{v} + 1);
    return out;
}

std::string join(const std::vector<std::size_t>& xs) {
    std::string s;
    for (std::size_t x : xs) {
        s += ' ';
        s += std::to_string(x);
    }
    return s;
}

Instance load(const std::string& path) {
    if (path.empty()) throw UsageError("--input is required");
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

void write_coloring(Output& o, const Graph& g, const std::optional<ColoringSolution>& sol, bool with_cost) {
    if (!sol) {
        o.answer()["status"] = "infeasible";
        o.text() << "INFEASIBLE\n";
        return;
    }
    o.answer()["status"] = "feasible";
    json colors = json::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        colors.push_back(int{sol->assignment[v]});
        o.text() << "v " << v + 1 << ' ' << int{sol->assignment[v]} << '\n';
    }
    o.answer()["colors"] = std::move(colors);
    if (with_cost && sol->cost) {
        o.answer()["cost"] = *sol->cost;
        o.text() << "cost " << *sol->cost << '\n';
    }
}

void write_mwis(Output& o, const MwisSolution& s) {
    const auto chosen = one_based(s.chosen.to_vector());
    o.answer()["weight"] = s.weight;
    o.answer()["chosen"] = chosen;
    o.text() << "weight " << s.weight << '\n' << "chosen" << join(chosen) << '\n';
}

void write_oct(Output& o, const std::optional<OctSolution>& s) {
    if (!s) {
        o.answer()["status"] = "infeasible";
        o.text() << "INFEASIBLE\n";
        return;
    }
    const auto x = one_based(s->transversal.to_vector());
    o.answer()["status"] = "feasible";
    o.answer()["weight"] = s->weight;
    o.answer()["transversal"] = x;
    o.text() << "weight " << s->weight << '\n' << "transversal" << join(x) << '\n';
}

void write_matching(Output& o, const MatchingSolution& s) {
    json edges = json::array();
    o.answer()["weight"] = s.weight;
    o.text() << "weight " << s.weight << '\n';
    for (auto [u, v] : s.edges) {
        edges.push_back({std::size_t{u} + 1, std::size_t{v} + 1});
        o.text() << "edge " << u + 1 << ' ' << v + 1 << '\n';
    }
    o.answer()["edges"] = std::move(edges);
}

void cmd_solve(Output& o, const Options& opt) {
    const Instance inst = load(opt.input);
    const Graph& g = inst.graph;
    const VertexSet all = g.all_vertices();
    o.instance(g, opt.t);
    if (opt.target == "mwis") {
        MwisOptions mo;
        mo.cache = opt.cache;
        auto r = find_mis(g, all, inst.weights, opt.t, mo);
        write_mwis(o, r.solution);
        o.stats(r.stats);
    } else if (opt.target == "list3col") {
        auto r = solve_list3col(g, all, inst.lists, opt.t);
        write_coloring(o, g, r.solution, false);
        o.stats(r.stats);
    } else if (opt.target == "cost3col") {
        auto r = solve_min_cost_3col(g, all, inst.lists, inst.costs, opt.t);
        write_coloring(o, g, r.solution, true);
        o.stats(r.stats);
    } else if (opt.target == "oct") {
        auto r = solve_independent_oct(g, all, inst.weights, opt.t);
        write_oct(o, r.solution);
        o.stats(r.stats);
    } else {
        MwisOptions mo;
        mo.cache = opt.cache;
        auto r = solve_induced_matching(g, all, inst.edge_weights, opt.t, mo);
        write_matching(o, r.solution);
        o.stats(r.stats);
    }
}

void cmd_oracle(Output& o, const Options& opt) {
    const Instance inst = load(opt.input);
    const Graph& g = inst.graph;
    const VertexSet all = g.all_vertices();
    o.instance(g, std::nullopt);
    if (opt.target == "mwis") {
        write_mwis(o, brute_force_mis(g, all, inst.weights));
    } else if (opt.target == "list3col") {
        write_coloring(o, g, brute_force_list3col(g, all, inst.lists), false);
    } else if (opt.target == "cost3col") {
        write_coloring(o, g, brute_force_min_cost_3col(g, all, inst.lists, inst.costs), true);
    } else if (opt.target == "oct") {
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (inst.weights[v] < 0) throw UsageError("oct needs nonnegative weights");
        }
        write_oct(o, brute_force_independent_oct(g, all, inst.weights));
    } else {
        write_matching(o, brute_force_induced_matching(g, all, inst.edge_weights));
    }
}

void cmd_check(Output& o, const Options& opt) {
    const Instance inst = load(opt.input);
    o.instance(inst.graph, opt.t);
    auto r = is_pt_free(inst.graph, opt.t);
    o.answer()["pt_free"] = r.pt_free;
    o.text() << (r.pt_free ? "true" : "false") << '\n';
    if (!r.pt_free) {
        o.answer()["witness"] = one_based(r.witness);
        o.text() << "witness" << join(one_based(r.witness)) << '\n';
    }
}

void cmd_enum(Output& o, const Options& opt) {
    const Instance inst = load(opt.input);
    o.instance(inst.graph, opt.t);
    const PathIndex idx = enumerate_induced_paths(inst.graph, inst.graph.all_vertices(), opt.t);
    const BucketReport rep = bucket_report(idx);
    o.answer()["total"] = rep.total;
    o.answer()["buckets"] = rep.buckets.size();
    o.answer()["max"] = rep.max;
    json sizes = json::array();
    o.text() << "total " << rep.total << '\n' << "buckets " << rep.buckets.size() << '\n' << "max " << rep.max << '\n';
    for (const auto& b : rep.buckets) {
        sizes.push_back({std::size_t{b.u} + 1, std::size_t{b.v} + 1, b.size});
        o.text() << "bucket " << b.u + 1 << ' ' << b.v + 1 << ' ' << b.size << '\n';
    }
    o.answer()["bucket_sizes"] = std::move(sizes);
}

void require_connected(const Graph& g, const VertexSet& active) {
    if (!is_connected(g, active)) throw InvariantViolation("input graph is disconnected");
}

void cmd_separator(Output& o, const Options& opt) {
    const Instance inst = load(opt.input);
    o.instance(inst.graph, opt.t);
    const SeparatorResult s = gyarfas_separator(inst.graph, inst.graph.all_vertices(), opt.t);
    const auto x = one_based(s.path);
    const auto halo = one_based(s.halo.to_vector());
    o.answer()["x"] = x;
    o.answer()["halo"] = halo;
    o.answer()["component_sizes"] = s.component_sizes;
    o.text() << "x" << join(x) << '\n' << "halo" << join(halo) << '\n' << "components" << join(s.component_sizes) << '\n';
}

void write_hits(Output& o, const std::vector<BucketHits>& hits) {
    json rows = json::array();
    for (const auto& b : hits) {
        rows.push_back({std::size_t{b.u} + 1, std::size_t{b.v} + 1, b.size, b.hits});
        o.text() << "bucket " << b.u + 1 << ' ' << b.v + 1 << ' ' << b.size << ' ' << b.hits << '\n';
    }
    o.answer()["per_bucket_hits"] = std::move(rows);
}

void cmd_heavy(Output& o, const Options& opt) {
    const Instance inst = load(opt.input);
    const Graph& g = inst.graph;
    o.instance(g, opt.t);
    if (!opt.color) {
        const VertexSet all = g.all_vertices();
        require_connected(g, all);
        const PathIndex idx = enumerate_induced_paths(g, all, opt.t);
        const HeavyVertexReport r = find_heavy_vertex(g, all, idx, opt.t);
        o.answer()["w"] = r.w + 1;
        o.answer()["hit_buckets"] = r.hit_buckets;
        o.answer()["total_buckets"] = r.total_buckets;
        o.text() << "w " << r.w + 1 << '\n'
                 << "hit_buckets " << r.hit_buckets << '\n'
                 << "total_buckets " << r.total_buckets << '\n';
        write_hits(o, r.per_bucket_hits);
        return;
    }
    const int te = detail::coloring_t(opt.t);
    auto reduced = preprocess(g, make_coloring_instance(g, g.all_vertices(), inst.lists), te);
    if (!reduced) {
        o.answer()["status"] = "infeasible";
        o.text() << "INFEASIBLE\n";
        return;
    }
    require_connected(g, reduced->active);
    const ColoredPathIndex cidx = enumerate_colored_paths(g, reduced->active, te, reduced->lists);
    const ColoredHeavyReport r = find_heavy_vertex_color(g, reduced->active, cidx, te, reduced->lists);
    o.answer()["w"] = r.w + 1;
    o.answer()["c"] = int{r.c};
    o.answer()["qualifying_buckets"] = r.qualifying_buckets;
    o.answer()["total_buckets"] = r.total_buckets;
    o.text() << "w " << r.w + 1 << '\n'
             << "c " << int{r.c} << '\n'
             << "qualifying_buckets " << r.qualifying_buckets << '\n'
             << "total_buckets " << r.total_buckets << '\n';
    write_hits(o, r.per_bucket_hits);
}

struct GenOptions {
    std::string kind;
    std::size_t n = 0;
    double p = 0.3;
    std::vector<std::size_t> parts;
    std::uint64_t seed = 0;
    std::string out;
};

void cmd_gen(Output& o, const Options& opt, const GenOptions& go, std::ostream& out) {
    auto kind = parse_gen_kind(go.kind);
    if (!kind) throw UsageError("unknown generator kind '" + go.kind + "'");
    GenSpec spec{*kind, go.n, go.p, opt.t, go.parts, go.seed};
    const Graph g = gen(spec);
    o.instance(g, opt.t);
    std::ostringstream text;
    text << "c " << to_string(spec.kind) << " n=" << go.n << " p=" << go.p << " t=" << opt.t << " seed=" << go.seed
         << '\n'
         << write_graph(g);
    if (go.out.empty()) {
        out << text.str();
        return;
    }
    std::ofstream f(go.out);
    if (!f) throw UsageError("cannot write " + go.out);
    f << text.str();
    o.answer()["file"] = go.out;
    o.text() << "wrote " << go.out << " n " << g.vertex_count() << " m " << g.edge_count() << '\n';
}

unsigned worker_threads() {
    if (const char* env = std::getenv("PTFREE_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

void cmd_bench(Output& o, const Options& opt, const std::string& corpus, int reps) {
    if (corpus.empty()) throw UsageError("--corpus is required");
    if (!std::filesystem::is_directory(corpus)) throw UsageError("not a directory: " + corpus);
    const BenchTable table = bench(corpus, opt.t, reps, worker_threads());
    o.answer()["t"] = table.t;
    o.answer()["repetitions"] = table.repetitions;
    json rows = json::array();
    auto& txt = o.text();
    txt << "instance n m weight calls leaves max_depth ms stable status\n";
    for (const auto& r : table.rows) {
        json row = {{"name", r.name}, {"ok", r.ok}, {"n", r.n}, {"m", r.m}};
        if (r.ok) {
            row["weight"] = r.weight;
            row["calls"] = r.calls;
            row["leaves"] = r.leaves;
            row["max_depth"] = r.max_depth;
            row["wall_ms"] = std::round(r.wall_ms * 1000.0) / 1000.0;
            row["stable"] = r.stable;
            txt << r.name << ' ' << r.n << ' ' << r.m << ' ' << r.weight << ' ' << r.calls << ' ' << r.leaves << ' '
                << r.max_depth << ' ' << std::fixed << std::setprecision(3) << r.wall_ms << ' '
                << (r.stable ? "yes" : "no") << " ok\n";
        } else {
            row["error"] = r.error;
            if (!r.certificate.empty()) row["certificate"] = one_based(r.certificate);
            txt << r.name << ' ' << r.n << ' ' << r.m << " - - - - - - FAILED(" << r.error << ")\n";
        }
        rows.push_back(std::move(row));
    }
    const auto& s = table.summary;
    o.answer()["rows"] = std::move(rows);
    o.answer()["summary"] = {{"instances", s.instances}, {"solved", s.solved},         {"failed", s.failed},
                             {"total_calls", s.total_calls}, {"max_calls", s.max_calls}, {"total_ms", s.total_ms}};
    txt << "summary instances " << s.instances << " solved " << s.solved << " failed " << s.failed << " total_calls "
        << s.total_calls << " max_calls " << s.max_calls << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact solvers for P_t-free graphs"};
    app.require_subcommand(1);

    Options opt;
    GenOptions gen_opt;
    std::string corpus;
    int reps = 1;
    const std::vector<std::string> targets{"mwis", "list3col", "cost3col", "oct", "induced-matching"};

    auto add_common = [&](CLI::App* sub, bool with_t) {
        if (with_t) sub->add_option("--t", opt.t, "forbidden path order")->check(CLI::Range(2, 64));
        sub->add_option("--input", opt.input, "instance file");
        sub->add_flag("--json", opt.json, "print the run report as JSON");
        sub->add_option("--stats", opt.stats_path, "also write the run report to this file");
    };

    auto* check = app.add_subcommand("check-ptfree", "test for an induced P_t");
    add_common(check, true);
    auto* enum_paths = app.add_subcommand("enum-paths", "enumerate induced paths into endpoint buckets");
    add_common(enum_paths, true);
    auto* separator = app.add_subcommand("separator", "balanced connected separator");
    add_common(separator, true);
    auto* heavy = app.add_subcommand("heavy-vertex", "heavy branching vertex and its hit report");
    add_common(heavy, true);
    heavy->add_flag("--color", opt.color, "colored variant over preprocessed lists");

    auto* solve = app.add_subcommand("solve", "run a branching solver");
    solve->add_option("target", opt.target)->required()->check(CLI::IsMember(targets));
    add_common(solve, true);
    solve->add_flag("--cache", opt.cache, "memoize MWIS calls by active set");

    auto* oracle = app.add_subcommand("oracle", "run the brute-force twin of a solver");
    oracle->add_option("target", opt.target)->required()->check(CLI::IsMember(targets));
    add_common(oracle, false);

    auto* gen_cmd = app.add_subcommand("gen", "generate a P_t-free instance");
    gen_cmd->add_option("--kind", gen_opt.kind)->required();
    gen_cmd->add_option("--n", gen_opt.n);
    gen_cmd->add_option("--p", gen_opt.p);
    gen_cmd->add_option("--t", opt.t)->check(CLI::Range(2, 64));
    gen_cmd->add_option("--parts", gen_opt.parts)->delimiter(',');
    gen_cmd->add_option("--seed", gen_opt.seed);
    gen_cmd->add_option("--out", gen_opt.out);
    gen_cmd->add_flag("--json", opt.json);

    auto* bench_cmd = app.add_subcommand("bench", "solve MWIS on every instance of a corpus directory");
    bench_cmd->add_option("--corpus", corpus)->required();
    bench_cmd->add_option("--t", opt.t)->check(CLI::Range(2, 64));
    bench_cmd->add_option("--reps", reps)->check(CLI::PositiveNumber);
    bench_cmd->add_flag("--json", opt.json);
    bench_cmd->add_option("--stats", opt.stats_path);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    CLI::App* chosen = app.get_subcommands().front();
    std::string command = chosen->get_name();
    if (!opt.target.empty()) command += " " + opt.target;
    Output o(command, opt);
    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] { return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count(); };

    try {
        if (chosen == check) cmd_check(o, opt);
        else if (chosen == enum_paths) cmd_enum(o, opt);
        else if (chosen == separator) cmd_separator(o, opt);
        else if (chosen == heavy) cmd_heavy(o, opt);
        else if (chosen == solve) cmd_solve(o, opt);
        else if (chosen == oracle) cmd_oracle(o, opt);
        else if (chosen == gen_cmd) cmd_gen(o, opt, gen_opt, out);
        else cmd_bench(o, opt, corpus, reps);
        if (chosen != gen_cmd || !gen_opt.out.empty()) o.flush(out, elapsed());
        return exit_ok;
    } catch (const NotPtFree& e) {
        const auto cert = one_based(e.certificate());
        o.answer() = {{"status", "not-pt-free"}, {"certificate", cert}};
        o.text().str("");
        o.text() << "not-pt-free\n" << "certificate" << join(cert) << '\n';
        o.flush(out, elapsed());
        err << "error: " << e.what() << '\n';
        return exit_not_pt_free;
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << '\n';
        return exit_invariant;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

}  // namespace ptfree::cli

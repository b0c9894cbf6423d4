#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace ptfree::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

const std::string samples = PTFREE_SAMPLES_DIR;
const std::string golden = PTFREE_GOLDEN_DIR;

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    Run r;
    r.code = run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string sample(const std::string& name) { return samples + "/" + name; }

fs::path scratch_dir(const std::string& name) {
    fs::path d = fs::temp_directory_path() / ("ptfree_cli_" + name);
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream f(p);
    f << text;
}

std::string read_file(const fs::path& p) {
    std::ifstream f(p);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

/// Report without its timing fields.
json stable_report(const std::string& text) {
    json j = json::parse(text);
    j.erase("wall_ms");
    if (j.contains("answer") && j["answer"].contains("rows")) {
        for (auto& row : j["answer"]["rows"]) row.erase("wall_ms");
        j["answer"]["summary"].erase("total_ms");
    }
    return j;
}

TEST(Cli, SolveMwisC5) {
    auto r = cli({"solve", "mwis", "--t", "5", "--input", sample("c5.col")});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_EQ(r.out, "weight 2\nchosen 1 3\n");
}

TEST(Cli, CheckPtFreeWitness) {
    auto r = cli({"check-ptfree", "--t", "4", "--input", sample("c5.col")});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_EQ(r.out, "false\nwitness 1 2 3 4\n");
    EXPECT_EQ(cli({"check-ptfree", "--input", sample("c5.col")}).out, "true\n");
}

TEST(Cli, NotPtFreeExitCode) {
    auto r = cli({"solve", "mwis", "--t", "5", "--input", sample("p5.col")});
    EXPECT_EQ(r.code, exit_not_pt_free);
    EXPECT_EQ(r.out, "not-pt-free\ncertificate 1 2 3 4 5\n");
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(cli({}).code, exit_usage);
    EXPECT_EQ(cli({"solve"}).code, exit_usage);
    EXPECT_EQ(cli({"solve", "tsp", "--input", sample("c5.col")}).code, exit_usage);
    EXPECT_EQ(cli({"solve", "mwis", "--t", "1", "--input", sample("c5.col")}).code, exit_usage);
    EXPECT_EQ(cli({"solve", "mwis"}).code, exit_usage);
    EXPECT_EQ(cli({"solve", "mwis", "--input", "/nonexistent/file.col"}).code, exit_usage);
    EXPECT_EQ(cli({"--help"}).code, exit_ok);
}

TEST(Cli, ParseErrorIsUsageError) {
    fs::path d = scratch_dir("parse");
    write_file(d / "loop.col", "p edge 2 1\ne 1 1\n");
    auto r = cli({"solve", "mwis", "--input", (d / "loop.col").string()});
    EXPECT_EQ(r.code, exit_usage);
    EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST(Cli, InvariantExitCode) {
    fs::path d = scratch_dir("invariant");
    write_file(d / "two.col", "p edge 4 2\ne 1 2\ne 3 4\n");
    EXPECT_EQ(cli({"heavy-vertex", "--input", (d / "two.col").string()}).code, exit_invariant);
}

TEST(Cli, ColoringTargets) {
    // Any proper coloring will do; both sides must find one.
    EXPECT_EQ(cli({"solve", "list3col", "--input", sample("c5_weighted.col")}).out.substr(0, 4), "v 1 ");
    EXPECT_EQ(cli({"oracle", "list3col", "--input", sample("c5_weighted.col")}).out.substr(0, 4), "v 1 ");
    auto cost = cli({"solve", "cost3col", "--input", sample("c5_weighted.col")});
    auto cost_oracle = cli({"oracle", "cost3col", "--input", sample("c5_weighted.col")});
    EXPECT_EQ(cost.code, exit_ok);
    EXPECT_EQ(cost.out.substr(cost.out.find("cost")), cost_oracle.out.substr(cost_oracle.out.find("cost")));
    auto oct = cli({"solve", "oct", "--input", sample("c5.col")});
    EXPECT_EQ(oct.out.substr(0, 9), "weight 1\n");
    EXPECT_EQ(cli({"oracle", "oct", "--input", sample("c5.col")}).out.substr(0, 9), "weight 1\n");
}

TEST(Cli, InfeasibleIsSuccess) {
    fs::path d = scratch_dir("infeasible");
    write_file(d / "k4.col", "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n");
    auto r = cli({"solve", "list3col", "--input", (d / "k4.col").string()});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_EQ(r.out, "INFEASIBLE\n");
    EXPECT_EQ(cli({"solve", "oct", "--input", (d / "k4.col").string()}).out, "INFEASIBLE\n");
}

TEST(Cli, Gen) {
    auto r = cli({"gen", "--kind", "cycle", "--n", "5", "--t", "5"});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_EQ(r.out, "c cycle n=5 p=0.3 t=5 seed=0\np edge 5 5\ne 1 2\ne 1 5\ne 2 3\ne 3 4\ne 4 5\n");

    fs::path d = scratch_dir("gen");
    auto w = cli({"gen", "--kind", "complete-multipartite", "--parts", "2,2,2", "--t", "4", "--out", (d / "k222.col").string()});
    EXPECT_EQ(w.code, exit_ok);
    EXPECT_NE(read_file(d / "k222.col").find("p edge 6 12"), std::string::npos);
    EXPECT_EQ(cli({"gen", "--kind", "tree", "--n", "5"}).code, exit_usage);
    EXPECT_EQ(cli({"gen", "--kind", "cycle", "--n", "7", "--t", "5"}).code, exit_usage);
}

TEST(Cli, StatsFile) {
    fs::path d = scratch_dir("stats");
    auto r = cli({"solve", "mwis", "--input", sample("c5.col"), "--stats", (d / "s.json").string()});
    EXPECT_EQ(r.code, exit_ok);
    json j = json::parse(read_file(d / "s.json"));
    EXPECT_EQ(j["answer"]["weight"], 2);
    EXPECT_TRUE(j["stats"]["calls"].is_number_unsigned());
    EXPECT_TRUE(j["wall_ms"].is_number());
}

TEST(Cli, Bench) {
    fs::path d = scratch_dir("bench");
    auto empty = cli({"bench", "--corpus", d.string(), "--json"});
    EXPECT_EQ(empty.code, exit_ok);
    EXPECT_TRUE(json::parse(empty.out)["answer"]["rows"].empty());

    for (int s = 0; s < 10; ++s) {
        auto g = cli({"gen", "--kind", "chord-repair", "--n", "14", "--p", "0.25", "--seed", std::to_string(s), "--out",
                      (d / ("g" + std::to_string(s) + ".col")).string()});
        ASSERT_EQ(g.code, exit_ok);
    }
    auto ten = json::parse(cli({"bench", "--corpus", d.string(), "--json", "--reps", "2"}).out);
    EXPECT_EQ(ten["answer"]["rows"].size(), 10u);
    EXPECT_EQ(ten["answer"]["summary"]["solved"], 10);

    fs::copy_file(sample("p5.col"), d / "bad.col");
    auto mixed = json::parse(cli({"bench", "--corpus", d.string(), "--json"}).out);
    const auto& rows = mixed["answer"]["rows"];
    ASSERT_EQ(rows.size(), 11u);
    EXPECT_EQ(rows[0]["name"], "bad.col");
    EXPECT_FALSE(rows[0]["ok"]);
    EXPECT_EQ(rows[0]["error"], "not-pt-free");
    EXPECT_EQ(mixed["answer"]["summary"]["failed"], 1);
    EXPECT_EQ(mixed["answer"]["summary"]["solved"], 10);

    // Threaded run: same answers, same order.
    setenv("PTFREE_THREADS", "4", 1);
    auto threaded = json::parse(cli({"bench", "--corpus", d.string(), "--json"}).out);
    unsetenv("PTFREE_THREADS");
    EXPECT_EQ(stable_report(threaded.dump()), stable_report(mixed.dump()));
}

// Golden reports: byte-stable answers with timings removed.
struct GoldenCase {
    std::string name;
    std::vector<std::string> args;
    int code;
};

void PrintTo(const GoldenCase& c, std::ostream* os) { *os << c.name; }

class Golden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, ReportMatches) {
    const auto& c = GetParam();
    std::vector<std::string> args = c.args;
    for (auto& a : args) {
        if (a.rfind("@", 0) == 0) a = sample(a.substr(1));
    }
    args.push_back("--json");
    auto r = cli(args);
    ASSERT_EQ(r.code, c.code) << r.err;
    const std::string got = stable_report(r.out).dump(2) + "\n";
    const fs::path file = fs::path(golden) / (c.name + ".json");
    if (std::getenv("PTFREE_UPDATE_GOLDEN") != nullptr) write_file(file, got);
    ASSERT_TRUE(fs::exists(file)) << file;
    EXPECT_EQ(got, read_file(file));
    // Same inputs, same answer.
    EXPECT_EQ(stable_report(cli(args).out), stable_report(r.out));
}

INSTANTIATE_TEST_SUITE_P(
    Reports, Golden,
    ::testing::Values(GoldenCase{"solve_mwis_c5", {"solve", "mwis", "--t", "5", "--input", "@c5.col"}, 0},
                      GoldenCase{"solve_mwis_weighted", {"solve", "mwis", "--input", "@c5_weighted.col"}, 0},
                      GoldenCase{"solve_mwis_p5", {"solve", "mwis", "--t", "5", "--input", "@p5.col"}, 2},
                      GoldenCase{"solve_list3col_weighted", {"solve", "list3col", "--input", "@c5_weighted.col"}, 0},
                      GoldenCase{"solve_cost3col_weighted", {"solve", "cost3col", "--input", "@c5_weighted.col"}, 0},
                      GoldenCase{"solve_oct_weighted", {"solve", "oct", "--input", "@c5_weighted.col"}, 0},
                      GoldenCase{"solve_matching_weighted",
                                 {"solve", "induced-matching", "--input", "@c5_weighted.col"}, 0},
                      GoldenCase{"oracle_mwis_weighted", {"oracle", "mwis", "--input", "@c5_weighted.col"}, 0},
                      GoldenCase{"check_ptfree_c5_t4", {"check-ptfree", "--t", "4", "--input", "@c5.col"}, 0},
                      GoldenCase{"enum_paths_c5", {"enum-paths", "--input", "@c5.col"}, 0},
                      GoldenCase{"separator_c5", {"separator", "--input", "@c5.col"}, 0},
                      GoldenCase{"heavy_vertex_c5", {"heavy-vertex", "--input", "@c5.col"}, 0},
                      GoldenCase{"heavy_vertex_color_c5", {"heavy-vertex", "--color", "--input", "@c5.col"}, 0}),
    [](const ::testing::TestParamInfo<GoldenCase>& info) { return info.param.name; });

}  // namespace
}  // namespace ptfree::cli

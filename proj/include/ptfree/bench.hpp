#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "errors.hpp"
#include "instance_io.hpp"
#include "mwis.hpp"

namespace ptfree {

struct BenchRow {
    std::string name;
    bool ok = false;
    /// Failure description; "not-pt-free" rows carry the certificate in `certificate`.
    std::string error;
    std::vector<VertexId> certificate;
    std::size_t n = 0;
    std::size_t m = 0;
    Weight weight = 0;
    std::uint64_t calls = 0;
    std::uint64_t leaves = 0;
    std::uint64_t max_depth = 0;
    /// Fastest repetition.
    double wall_ms = 0.0;
    /// Every repetition produced the same node count.
    bool stable = true;
};

struct BenchSummary {
    std::size_t instances = 0;
    std::size_t solved = 0;
    std::size_t failed = 0;
    std::uint64_t total_calls = 0;
    std::uint64_t max_calls = 0;
    double total_ms = 0.0;
};

struct BenchTable {
    int t = 5;
    int repetitions = 1;
    std::vector<BenchRow> rows;
    BenchSummary summary;
};

inline BenchRow bench_instance(const std::filesystem::path& file, int t, int repetitions) {
    BenchRow row;
    row.name = file.filename().string();
    try {
        std::ifstream in(file);
        std::stringstream text;
        text << in.rdbuf();
        const Instance inst = parse_instance(text.str());
        row.n = inst.graph.vertex_count();
        row.m = inst.graph.edge_count();
        for (int r = 0; r < repetitions; ++r) {
            const auto start = std::chrono::steady_clock::now();
            const MwisResult res = find_mis(inst.graph, inst.graph.all_vertices(), inst.weights, t);
            const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            if (r == 0) {
                row.weight = res.solution.weight;
                row.calls = res.stats.calls;
                row.leaves = res.stats.leaves;
                row.max_depth = res.stats.max_depth;
                row.wall_ms = ms;
            } else {
                row.stable = row.stable && res.stats.calls == row.calls && res.solution.weight == row.weight;
                row.wall_ms = std::min(row.wall_ms, ms);
            }
        }
        row.ok = true;
    } catch (const NotPtFree& e) {
        row.error = "not-pt-free";
        row.certificate = e.certificate();
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

/// Solves MWIS on every regular file of `corpus` (ordered by file name) with
/// up to `threads` workers. A failing instance is recorded and the rest continue.
inline BenchTable bench(const std::filesystem::path& corpus, int t, int repetitions, unsigned threads = 1) {
    if (repetitions < 1) throw std::invalid_argument("repetitions must be positive");
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(corpus)) {
        if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.filename().string() < b.filename().string(); });

    BenchTable table;
    table.t = t;
    table.repetitions = repetitions;
    table.rows.resize(files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < files.size(); i = next++) table.rows[i] = bench_instance(files[i], t, repetitions);
    };
    const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(files.size())));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < workers; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    auto& s = table.summary;
    s.instances = table.rows.size();
    for (const auto& row : table.rows) {
        if (!row.ok) {
            ++s.failed;
            continue;
        }
        ++s.solved;
        s.total_calls += row.calls;
        s.max_calls = std::max(s.max_calls, row.calls);
        s.total_ms += row.wall_ms;
    }
    return table;
}

}  // namespace ptfree

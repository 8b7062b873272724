// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit code 0 only if all pass.
//
// Usage: acceptance_tests [--cli <path-to-cpath-binary>] [--only <id>]
//
// Heavy criteria stream index repetitions (cp_batch_query) so the whole run
// fits desk-scale memory; outcomes are proven identical to the materialized
// index by the unit suite.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cpath/analysis.hpp"
#include "cpath/index.hpp"
#include "cpath/measures.hpp"
#include "cpath/mix.hpp"
#include "cpath/reductions.hpp"
#include "cpath/set_io.hpp"
#include "cpath/verify.hpp"

namespace {

using namespace cpath;

std::string g_cli_path;
std::vector<std::string> g_notes;

void note(const std::string& line) { g_notes.push_back(line); }

bool expect(bool ok, const std::string& what) {
    if (!ok) note("FAILED: " + what);
    return ok;
}

bool within_se(double estimate, double target, double se, double factor,
               const std::string& what) {
    std::ostringstream detail;
    detail << what << ": " << estimate << " vs " << target << " (se " << se
           << ")";
    note(detail.str());
    return expect(std::abs(estimate - target) <= factor * se,
                  what + " outside " + std::to_string(factor) + " se");
}

// --- criterion 1: closed-form exponents at j1 = 0.2, j2 = 0.1 --------------

bool criterion_rho_regression() {
    const double b1 = 1.0 / 3.0, b2 = 2.0 / 11.0;
    bool ok = true;
    ok &= expect(std::abs(rho(Method::ChosenPath, b1, b2) - 0.6444) <= 0.0005,
                 "rho chosenpath != 0.6444 +- 0.0005");
    ok &= expect(std::abs(rho(Method::MinHash, b1, b2) - 0.6990) <= 0.0005,
                 "rho minhash != 0.6990 +- 0.0005");
    ok &= expect(std::abs(rho(Method::Angular, b1, b2) - 0.7222) <= 0.0005,
                 "rho angular != 0.7222 +- 0.0005");
    // Rational identity: (1 - 1/3) / (1 + 1/3 - 4/11) = 11/16 = 0.6875.
    ok &= expect(std::abs(rho(Method::DataDependent, b1, b2) - 0.6875) <= 1e-12,
                 "rho datadep != 0.6875");
    ok &= expect(66.0 * 16 == 96.0 * 11, "rational cross-check 66/96 = 11/16");
    return ok;
}

// --- criterion 2: dominance over the 400x400 grid ---------------------------

bool criterion_dominance() {
    const auto report = dominance_scan(400);
    bool ok = expect(report.passed(), "dominance violations on the grid");
    if (!report.violations.empty()) {
        const auto& v = report.violations.front();
        std::ostringstream cell;
        cell << "first violation: " << v.check << " at b1=" << v.b1
             << " b2=" << v.b2;
        note(cell.str());
    }
    ok &= expect(report.datadep_blue_cells >= report.low_b2_cells,
                 "blue region does not cover b2 <= 1/5");
    ok &= expect(report.datadep_red_cells > 0,
                 "sign map has no red region at all");
    std::ostringstream counts;
    counts << "cells=" << report.cells_checked
           << " blue=" << report.datadep_blue_cells
           << " red=" << report.datadep_red_cells;
    note(counts.str());
    return ok;
}

// --- criterion 3: minhash vs data-dependent at b2 = 1/23 --------------------

bool criterion_numerical_note() {
    const double mh = rho(Method::MinHash, 0.995, 1.0 / 23.0);
    const double dd = rho(Method::DataDependent, 0.995, 1.0 / 23.0);
    std::ostringstream detail;
    detail << "rho_minhash=" << mh << " rho_datadep=" << dd;
    note(detail.str());
    return expect(mh > dd, "rho_minhash <= rho_datadep at (0.995, 1/23)");
}

// --- criterion 4: map-property Monte Carlo ----------------------------------

bool criterion_map_properties() {
    const uint64_t n = 10'000, trials = 10'000;
    const double b1 = 1.0 / 3.0, b2 = 2.0 / 11.0;
    bool ok = true;

    // (a) + (b): sizes and shared paths at the dissimilar boundary. B = b2 is
    // not representable at t = 64 (128/11 is not an integer), so the t = 64
    // run uses the nearest attainable overlap 11/64 with the matching
    // expectation, and a t = 66 run pins B = 2/11 exactly.
    const auto at64 = verify_map_properties(n, b1, b2, 64, 11, trials, 0xACC4);
    note("k=" + std::to_string(at64.k) + " w=" + std::to_string(at64.w));
    ok &= within_se(at64.mean_size, at64.size_target, at64.se_size, 4.0,
                    "(a) mean |M_k(x)| vs w/b1^k");
    ok &= within_se(at64.mean_shared, at64.shared_target, at64.se_shared, 4.0,
                    "(b) mean shared paths at B=11/64");

    const auto at66 = verify_map_properties(n, b1, b2, 66, 12, trials, 0xACC5);
    ok &= expect(at66.similarity == b2, "t=66 overlap 12 is exactly b2");
    ok &= within_se(at66.mean_shared, at66.shared_target, at66.se_shared, 4.0,
                    "(b) mean shared paths at B=b2 (t=66)");

    // (c): collision frequency at the similar boundary.
    const auto sim = verify_map_properties(n, b1, b2, 64, 22, trials, 0xACC6);
    std::ostringstream freq;
    freq << "(c) collision frequency " << sim.collision_freq << " (floor "
         << sim.collision_floor << ")";
    note(freq.str());
    ok &= expect(sim.collision_freq >= 0.5, "collision frequency below 1/2");
    return ok;
}

// --- criterion 5: sampling crossover, exhaustive ----------------------------

bool criterion_crossover() {
    for (uint64_t t : {50ull, 100ull, 500ull}) {
        const auto limit = static_cast<uint64_t>(0.6 * static_cast<double>(t));
        for (uint64_t a = 1; a < limit; ++a) {
            const auto [p_subset, p_minhash] = sampling_crossover(t, a);
            if (!(p_subset > p_minhash)) {
                note("crossover fails at t=" + std::to_string(t) +
                     " a=" + std::to_string(a));
                return false;
            }
        }
    }
    return true;
}

// --- criterion 6: end-to-end recall on the planted benchmark ---------------

bool criterion_recall() {
    const size_t n = 10'000;
    const uint32_t trials = 200, t = 64;
    const double b1 = 1.0 / 3.0, b2 = 2.0 / 11.0;

    const auto instance = make_planted_instance(n, trials, t, b1, b2, 0xBE7C);
    const uint32_t reps = default_repetitions(n);  // ceil(log2 n) + 2 = 16
    std::vector<WatchPair> watch;
    for (uint32_t i = 0; i < trials; ++i)
        watch.push_back({i, instance.planted_ids[i]});

    const auto batch = cp_batch_query(instance.points, instance.queries, b1, b2,
                                      reps, 0xBE7C, 0, watch);

    uint64_t found = 0, false_accepts = 0, rep_hits = 0, candidates = 0;
    for (uint32_t i = 0; i < trials; ++i) {
        const auto& outcome = batch.outcomes[i];
        candidates += outcome.candidates_scanned;
        rep_hits += batch.watch_rep_hits[i];
        if (outcome.found) {
            const double s =
                braun_blanquet(instance.queries[i], instance.points[*outcome.found]);
            if (s > b2 && *outcome.found == instance.planted_ids[i])
                ++found;
            else
                ++false_accepts;
        }
    }
    const double total_recall = found / static_cast<double>(trials);
    const double per_rep =
        rep_hits / (static_cast<double>(trials) * static_cast<double>(reps));
    std::ostringstream detail;
    detail << "total recall " << total_recall << ", per-rep recall " << per_rep
           << ", mean candidates " << candidates / static_cast<double>(trials)
           << ", false accepts " << false_accepts;
    note(detail.str());

    bool ok = expect(total_recall >= 0.9, "total recall below 0.9");
    ok &= expect(per_rep >= 0.5, "per-repetition recall below 0.5");
    ok &= expect(false_accepts == 0, "false accepts present");
    return ok;
}

// --- criterion 7: work scaling on decoy-only instances ----------------------

bool criterion_work_scaling() {
    // Decoys sit well inside the dissimilar region (overlap 5/64): at the b2
    // boundary the distinct-candidate counter saturates near n at this scale,
    // which would measure the counter cap rather than the growth rate.
    const uint32_t t = 64, shared = 5, queries = 100;
    const double b1 = 1.0 / 3.0, b2 = 2.0 / 11.0;

    auto mean_candidates = [&](size_t n) {
        const auto instance = make_decoy_instance(n, queries, t, shared, 0x5CA1E);
        const auto batch =
            cp_batch_query(instance.points, instance.queries, b1, b2,
                           default_repetitions(n), 0x5CA1E);
        uint64_t total = 0;
        for (const auto& outcome : batch.outcomes) {
            if (outcome.found) return -1.0;  // decoys must never pass
            total += outcome.candidates_scanned;
        }
        return static_cast<double>(total) / queries;
    };

    const double small = mean_candidates(4000);
    const double large = mean_candidates(16'000);
    if (small < 0.0 || large < 0.0) {
        note("a decoy passed the similarity filter");
        return false;
    }
    const double rho_cp = std::log(3.0) / std::log(5.5);
    const double limit = std::pow(4.0, rho_cp + 0.15);
    const double ratio = large / small;
    std::ostringstream detail;
    detail << "mean candidates " << small << " -> " << large << ", ratio "
           << ratio << " (limit " << limit << ")";
    note(detail.str());
    return expect(small > 0.0 && ratio <= limit, "candidate growth above 4^(rho+0.15)");
}

// --- criterion 8: padded-map hash Monte Carlo -------------------------------

bool criterion_padded_hash() {
    const auto report = verify_padded_hash(64, 0.5, 0.25, 24, 100'000, 0xF00D);
    std::ostringstream detail;
    detail << "m=" << report.padded_size << " similar " << report.similar_freq
           << " (floor " << report.p1_floor * 0.8 << "), dissimilar "
           << report.dissimilar_freq << " (ceiling "
           << report.p2_ceiling * 1.25 << " + 4se)";
    note(detail.str());
    bool ok = expect(report.similar_freq >= report.p1_floor * 0.8,
                     "similar collision rate below 0.8/(8m)");
    ok &= expect(report.dissimilar_freq <=
                     report.p2_ceiling * 1.25 + 4.0 * report.se_dissimilar,
                 "dissimilar collision rate above 1.25 m2/m + 4 se");
    return ok;
}

// --- criterion 9: transform cardinality and concentration -------------------

bool criterion_transform() {
    const auto report =
        verify_transform(1ull << 20, 1u << 13, 0.5, 0.05, 1ull << 10, 1000,
                         100'000, 4096, 0x7147);
    std::ostringstream detail;
    detail << "tau=" << report.samples << " blocks=" << report.blocks
           << " cardinality failures " << report.cardinality_failures << "/"
           << report.cardinality_trials << ", mean match " << report.mean_match
           << " (floor " << report.match_floor << ", analytic "
           << report.match_analytic << ")";
    note(detail.str());
    bool ok = expect(report.cardinality_failures == 0,
                     "|T(x)| != t on some input");
    ok &= expect(report.mean_match >= report.match_floor,
                 "mean block match below b1 + eps/4");
    return ok;
}

// --- criterion 10: CLI determinism and snapshot round-trip -------------------

int run_command(const std::string& command) {
    return std::system(command.c_str());
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool criterion_determinism() {
    if (g_cli_path.empty()) {
        note("no --cli path given");
        return false;
    }
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "cpath_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);

    // A small instance with planted structure plus random decoys.
    Rng rng(20'20);
    std::vector<SparseSet> points;
    for (int i = 0; i < 300; ++i) {
        std::vector<uint32_t> dims;
        uint32_t next = static_cast<uint32_t>(rng.below(64));
        for (int e = 0; e < 16; ++e) {
            dims.push_back(next);
            next += 1 + static_cast<uint32_t>(rng.below(60));
        }
        points.push_back(SparseSet::from_sorted(std::move(dims)));
    }
    write_set_file((dir / "points.txt").string(), points);
    std::vector<SparseSet> queries(points.begin(), points.begin() + 40);
    write_set_file((dir / "queries.txt").string(), queries);

    // Identical commands run twice; outputs captured between runs.
    const std::string build_cmd =
        g_cli_path + " build --input " + (dir / "points.txt").string() +
        " --output " + (dir / "index.cpix").string() +
        " --b1 0.5 --b2 0.25 --seed 99 --reps 8 > " +
        (dir / "build.json").string();
    const std::string query_cmd =
        g_cli_path + " query --index " + (dir / "index.cpix").string() +
        " --input " + (dir / "queries.txt").string() + " --output " +
        (dir / "query.csv").string();

    bool ok = true;
    ok &= expect(run_command(build_cmd) == 0, "first build failed");
    ok &= expect(run_command(query_cmd) == 0, "first query run failed");
    const std::string snap_a = slurp(dir / "index.cpix");
    const std::string stats_a = slurp(dir / "build.json");
    const std::string rows_a = slurp(dir / "query.csv");

    ok &= expect(run_command(build_cmd) == 0, "second build failed");
    ok &= expect(run_command(query_cmd) == 0, "second query run failed");
    if (!ok) return false;

    ok &= expect(!snap_a.empty(), "empty snapshot");
    ok &= expect(snap_a == slurp(dir / "index.cpix"),
                 "snapshots differ across identical builds");
    ok &= expect(stats_a == slurp(dir / "build.json"),
                 "build stats differ across identical builds");
    ok &= expect(rows_a == slurp(dir / "query.csv"),
                 "query outputs differ across identical runs");

    // Snapshot round-trip is bit-exact.
    const CPIndex loaded = CPIndex::load_file((dir / "index.cpix").string());
    std::ostringstream resaved;
    loaded.save(resaved);
    ok &= expect(resaved.str() == snap_a, "snapshot round-trip not bit-exact");

    ok &= expect(!rows_a.empty(), "no query output");
    // One line per query, order-preserving.
    size_t lines = 0;
    for (char c : rows_a)
        if (c == '\n') ++lines;
    ok &= expect(lines == queries.size(), "query output line count mismatch");
    ok &= expect(rows_a.rfind("0,", 0) == 0, "first query row out of order");
    return ok;
}

struct Criterion {
    int id;
    const char* name;
    std::function<bool()> run;
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--cli" && i + 1 < argc) g_cli_path = argv[++i];
        if (arg == "--only" && i + 1 < argc) only = std::atoi(argv[++i]);
    }

    const std::vector<Criterion> criteria = {
        {1, "rho regression at j1=0.2, j2=0.1", criterion_rho_regression},
        {2, "dominance suite on the 400x400 grid", criterion_dominance},
        {3, "minhash vs data-dependent at b2=1/23", criterion_numerical_note},
        {4, "map-property monte carlo (t=64, n=10^4)", criterion_map_properties},
        {5, "sampling crossover below 0.6 t", criterion_crossover},
        {6, "end-to-end planted recall (n=10^4, 200 trials)", criterion_recall},
        {7, "work scaling n=4000 vs n=16000", criterion_work_scaling},
        {8, "padded-map hash collision bounds", criterion_padded_hash},
        {9, "transform cardinality and concentration", criterion_transform},
        {10, "CLI determinism and snapshot round-trip", criterion_determinism},
    };

    bool all_ok = true;
    for (const auto& criterion : criteria) {
        if (only != 0 && only != criterion.id) continue;
        g_notes.clear();
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = criterion.run();
        } catch (const std::exception& e) {
            g_notes.push_back(std::string("exception: ") + e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        std::printf("[%s] %2d. %s (%.1f s)\n", ok ? "PASS" : "FAIL", criterion.id,
                    criterion.name, secs);
        for (const auto& line : g_notes) std::printf("        %s\n", line.c_str());
        std::fflush(stdout);
        all_ok &= ok;
    }
    return all_ok ? 0 : 1;
}

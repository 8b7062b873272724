// Command-line front end: index lifecycle, benchmarks, exponent tables,
// regime maps and the Monte Carlo verification harnesses.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 verification failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cpath/analysis.hpp"
#include "cpath/index.hpp"
#include "cpath/measures.hpp"
#include "cpath/parallel.hpp"
#include "cpath/reductions.hpp"
#include "cpath/set_io.hpp"
#include "cpath/verify.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kToolVersion = "1.0.0";

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitVerification = 3;

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

// Writes to the output file when given, stdout otherwise.
int with_output(const std::string& path, const std::function<void(std::ostream&)>& fn) {
    if (path.empty()) {
        fn(std::cout);
        return kExitOk;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << path << " for writing\n";
        return kExitData;
    }
    fn(out);
    return kExitOk;
}

struct BuildArgs {
    std::string input, output;
    double b1 = 0.0, b2 = 0.0;
    uint64_t seed = 1;
    uint32_t reps = 0;  // 0 = ceil(log2 n) + 2
    size_t threads = 0;
};

int run_build(const BuildArgs& args) {
    const auto points = cpath::read_set_file(args.input);
    if (points.empty()) throw cpath::DataError("no points in " + args.input);

    const uint32_t reps =
        args.reps > 0 ? args.reps : cpath::default_repetitions(points.size());
    const auto index = cpath::CPIndex::build(points, args.b1, args.b2, reps,
                                             args.seed, args.threads);
    index.save_file(args.output);

    json stats;
    stats["cmd"] = "build";
    stats["version"] = kToolVersion;
    stats["n"] = index.point_count();
    stats["b1"] = index.b1();
    stats["b2"] = index.b2();
    stats["k"] = index.reps().front().params.k;
    stats["w"] = index.reps().front().params.w;
    stats["R"] = index.repetitions();
    stats["seed"] = args.seed;
    stats["buckets"] = index.total_buckets();
    stats["entries"] = index.total_entries();
    stats["bytes"] = index.snapshot_bytes();
    stats["snapshot"] = args.output;
    std::cout << stats.dump() << "\n";
    return kExitOk;
}

struct QueryArgs {
    std::string index, input, output;
};

int run_query(const QueryArgs& args) {
    const auto index = cpath::CPIndex::load_file(args.index);
    const auto queries = cpath::read_set_file(args.input);
    return with_output(args.output, [&](std::ostream& out) {
        for (size_t i = 0; i < queries.size(); ++i) {
            const auto outcome = index.query(queries[i]);
            out << i << ',';
            if (outcome.found)
                out << *outcome.found;
            else
                out << "NONE";
            out << ',' << format_number(outcome.similarity) << ','
                << outcome.candidates_scanned << "\n";
        }
    });
}

struct BenchArgs {
    size_t n = 10'000;
    uint32_t t = 64;
    double b1 = 1.0 / 3.0;
    double b2 = 2.0 / 11.0;
    uint32_t trials = 200;
    uint64_t seed = 1;
    uint32_t reps = 0;
    size_t threads = 0;
    std::string output;
    std::string measure = "braunblanquet";
};

int run_bench(const BenchArgs& args) {
    using clock = std::chrono::steady_clock;
    if (args.trials == 0) return kExitOk;  // empty report

    const auto measure = cpath::measure_from_string(args.measure);
    if (!measure) throw CLI::ValidationError("--measure", "unknown measure");

    const auto instance = cpath::make_planted_instance(
        args.n, args.trials, args.t, args.b1, args.b2, args.seed);
    const uint32_t reps =
        args.reps > 0 ? args.reps : cpath::default_repetitions(instance.points.size());

    std::vector<cpath::WatchPair> watch;
    for (uint32_t i = 0; i < args.trials; ++i)
        watch.push_back({i, instance.planted_ids[i]});

    const auto t0 = clock::now();
    const auto batch =
        cpath::cp_batch_query(instance.points, instance.queries, args.b1,
                              args.b2, reps, args.seed, args.threads, watch);
    const auto t1 = clock::now();

    uint64_t cp_found = 0, cp_false = 0, rep_hits = 0, candidates = 0;
    for (uint32_t i = 0; i < args.trials; ++i) {
        const auto& outcome = batch.outcomes[i];
        candidates += outcome.candidates_scanned;
        if (outcome.found) {
            if (*outcome.found == instance.planted_ids[i] &&
                cpath::braun_blanquet(instance.queries[i],
                                      instance.points[*outcome.found]) > args.b2)
                ++cp_found;
            else
                ++cp_false;
        }
        rep_hits += batch.watch_rep_hits[i];
    }

    // MinHash baseline at the Jaccard translation of the same thresholds.
    const double j1 = cpath::convert_threshold(
        args.b1, cpath::MeasureKind::BraunBlanquet, cpath::MeasureKind::Jaccard);
    const double j2 = cpath::convert_threshold(
        args.b2, cpath::MeasureKind::BraunBlanquet, cpath::MeasureKind::Jaccard);
    const auto t2 = clock::now();
    const auto minhash = cpath::MinHashIndex::build(instance.points, j1, j2,
                                                    args.seed, args.threads);
    uint64_t mh_found = 0, mh_false = 0, mh_candidates = 0;
    for (uint32_t i = 0; i < args.trials; ++i) {
        const auto outcome = minhash.query(instance.queries[i]);
        mh_candidates += outcome.candidates_scanned;
        if (outcome.found) {
            if (*outcome.found == instance.planted_ids[i])
                ++mh_found;
            else
                ++mh_false;
        }
    }
    const auto t3 = clock::now();

    uint64_t bf_correct = 0;
    for (uint32_t i = 0; i < args.trials; ++i) {
        const auto best =
            cpath::brute_force(instance.points, instance.queries[i], *measure);
        if (best.id == instance.planted_ids[i]) ++bf_correct;
    }
    const auto t4 = clock::now();

    const double trials = static_cast<double>(args.trials);
    json cp;
    cp["bench"] = "chosenpath";
    cp["version"] = kToolVersion;
    cp["n"] = instance.points.size();
    cp["t"] = args.t;
    cp["b1"] = args.b1;
    cp["b2"] = args.b2;
    cp["R"] = reps;
    cp["trials"] = args.trials;
    cp["seed"] = args.seed;
    cp["planted_overlap"] = instance.planted_overlap;
    cp["decoy_overlap"] = instance.decoy_overlap;
    cp["per_rep_recall"] = static_cast<double>(rep_hits) / (trials * reps);
    cp["total_recall"] = static_cast<double>(cp_found) / trials;
    cp["false_accepts"] = cp_false;
    cp["mean_candidates"] = static_cast<double>(candidates) / trials;

    json mh;
    mh["bench"] = "minhash";
    mh["j1"] = j1;
    mh["j2"] = j2;
    mh["K"] = minhash.concat_length();
    mh["L"] = minhash.repetitions();
    mh["total_recall"] = static_cast<double>(mh_found) / trials;
    mh["false_accepts"] = mh_false;
    mh["mean_candidates"] = static_cast<double>(mh_candidates) / trials;

    json bf;
    bf["bench"] = "bruteforce";
    bf["measure"] = cpath::to_string(*measure);
    bf["correct"] = static_cast<double>(bf_correct) / trials;

    // Wall times go to stderr so the report itself is byte-stable per seed.
    auto ms = [](auto a, auto b) {
        return std::chrono::duration_cast<std::chrono::milliseconds>(b - a).count();
    };
    std::cerr << "bench wall times: chosenpath " << ms(t0, t1) << " ms, minhash "
              << ms(t2, t3) << " ms, bruteforce " << ms(t3, t4) << " ms\n";

    return with_output(args.output, [&](std::ostream& out) {
        out << cp.dump() << "\n" << mh.dump() << "\n" << bf.dump() << "\n";
    });
}

struct RhoArgs {
    bool grid = false, point = false, regime = false, figure2 = false,
         check = false;
    double b1 = 0.0, b2 = 0.0, j1 = 0.0, j2 = 0.0, beta = 1.0;
    uint32_t resolution = 400;
    std::string output;
};

int run_rho(const RhoArgs& args) {
    if (args.check) {
        const auto report = cpath::dominance_scan(args.resolution);
        if (!report.passed()) {
            for (const auto& v : report.violations)
                std::cerr << "violation " << v.check << " at b1=" << v.b1
                          << " b2=" << v.b2 << " (" << v.lhs << " vs " << v.rhs
                          << ")\n";
            return kExitVerification;
        }
        std::cout << "dominance_scan resolution=" << report.resolution
                  << " cells=" << report.cells_checked
                  << " blue=" << report.datadep_blue_cells
                  << " red=" << report.datadep_red_cells << " ok\n";
        return kExitOk;
    }
    if (args.point) {
        double b1 = args.b1, b2 = args.b2;
        if (args.j1 > 0.0 || args.j2 > 0.0) {
            b1 = cpath::convert_threshold(args.j1, cpath::MeasureKind::Jaccard,
                                          cpath::MeasureKind::BraunBlanquet,
                                          args.beta);
            b2 = cpath::convert_threshold(args.j2, cpath::MeasureKind::Jaccard,
                                          cpath::MeasureKind::BraunBlanquet,
                                          args.beta);
        }
        return with_output(args.output, [&](std::ostream& out) {
            cpath::write_rho_point_csv(out, b1, b2);
        });
    }
    if (args.regime)
        return with_output(args.output, [&](std::ostream& out) {
            cpath::write_regime_csv(out, args.beta, args.resolution);
        });
    if (args.figure2)
        return with_output(args.output, [&](std::ostream& out) {
            cpath::write_figure2_csv(out, args.resolution);
        });
    return with_output(args.output, [&](std::ostream& out) {
        cpath::write_rho_grid_csv(out, args.resolution);
    });
}

struct VerifyArgs {
    std::string harness;
    uint64_t trials = 0;  // 0 = per-harness default
    uint64_t seed = 1;
    size_t threads = 0;
};

bool check_line(const std::string& name, double estimate, double se,
                double target, bool lower_bound_only) {
    const bool ok = lower_bound_only ? estimate >= target
                                     : std::abs(estimate - target) <= 4.0 * se;
    std::printf("%-34s %12.6g +- %-10.4g %s %-12.6g %s\n", name.c_str(), estimate,
                se, lower_bound_only ? ">=" : "vs", target,
                ok ? "[ok]" : "[FAIL]");
    return ok;
}

int run_verify(const VerifyArgs& args) {
    bool all_ok = true;
    if (args.harness == "lemma4") {
        const uint64_t trials = args.trials ? args.trials : 10'000;
        const uint64_t n = 10'000;
        const double b1 = 1.0 / 3.0, b2 = 2.0 / 11.0;
        const uint32_t t = 64;

        // Sizes at any overlap; shared paths at the dissimilar boundary;
        // collisions at the similar boundary.
        const auto dis = cpath::verify_map_properties(
            n, b1, b2, t, 11, trials, args.seed, args.threads);
        std::printf("parameters: k=%u w=%u trials=%llu\n", dis.k, dis.w,
                    static_cast<unsigned long long>(dis.trials));
        all_ok &= check_line("mean |M_k(x)|", dis.mean_size, dis.se_size,
                             dis.size_target, false);
        all_ok &= check_line("mean shared paths (B=11/64)", dis.mean_shared,
                             dis.se_shared, dis.shared_target, false);

        const auto sim = cpath::verify_map_properties(
            n, b1, b2, t, 22, trials, args.seed + 1, args.threads);
        all_ok &= check_line("collision rate (B=22/64) >= 1/2",
                             sim.collision_freq, sim.se_collision, 0.5, true);
        all_ok &= check_line("collision rate vs w/(k+w)", sim.collision_freq,
                             sim.se_collision, sim.collision_floor, true);
    } else if (args.harness == "lemma5") {
        const uint64_t trials = args.trials ? args.trials : 100'000;
        const auto report = cpath::verify_padded_hash(64, 0.5, 0.25, 24, trials,
                                                      args.seed, args.threads);
        std::printf("parameters: k=%u w=%u m=%llu trials=%llu\n", report.k,
                    report.w, static_cast<unsigned long long>(report.padded_size),
                    static_cast<unsigned long long>(report.trials));
        all_ok &= check_line("similar collision rate >= 0.8/(8m)",
                             report.similar_freq, report.se_similar,
                             report.p1_floor * 0.8, true);
        const bool dis_ok =
            report.dissimilar_freq <=
            report.p2_ceiling * 1.25 + 4.0 * report.se_dissimilar;
        std::printf("%-34s %12.6g +- %-10.4g <= %-12.6g %s\n",
                    "dissimilar collision rate", report.dissimilar_freq,
                    report.se_dissimilar, report.p2_ceiling * 1.25,
                    dis_ok ? "[ok]" : "[FAIL]");
        all_ok &= dis_ok;
    } else if (args.harness == "transformT") {
        const uint64_t transforms = args.trials ? args.trials : 1000;
        const auto report = cpath::verify_transform(
            1ull << 20, 1u << 13, 0.5, 0.05, 1ull << 10, transforms, 100'000,
            4096, args.seed, args.threads);
        std::printf("parameters: D=%llu t=%u l=%u tau=%u\n",
                    static_cast<unsigned long long>(report.source_dim),
                    report.blocks, report.width, report.samples);
        const bool card_ok = report.cardinality_failures == 0;
        std::printf("%-34s %12llu failures %s\n", "|T(x)| = t cardinality",
                    static_cast<unsigned long long>(report.cardinality_failures),
                    card_ok ? "[ok]" : "[FAIL]");
        all_ok &= card_ok;
        all_ok &= check_line("mean block match >= b1 + eps/4",
                             report.mean_match, report.se_match,
                             report.match_floor, true);
    } else {
        throw CLI::ValidationError("verify",
                                   "harness must be lemma4, lemma5 or transformT");
    }
    return all_ok ? kExitOk : kExitVerification;
}

struct TransformArgs {
    std::string input, output;
    double b1 = 0.5, eps = 0.05;
    uint32_t out_dim = 0;
    uint64_t seed = 1;
};

int run_transform(const TransformArgs& args) {
    const auto rows = cpath::read_hex_rows(args.input);
    if (rows.empty()) throw cpath::DataError("no rows in " + args.input);
    const auto params = cpath::TransformParams::derive(
        rows.front().dimension(), args.out_dim, args.b1, args.eps, args.seed);
    const cpath::TransformT transform(params);
    std::vector<cpath::SparseSet> sets;
    sets.reserve(rows.size());
    for (const auto& row : rows) sets.push_back(transform.apply(row));
    std::cerr << "transform: D=" << params.source_dim << " t=" << params.blocks
              << " l=" << params.width << " tau=" << params.samples
              << " output_dim=" << transform.output_dim() << "\n";
    return with_output(args.output, [&](std::ostream& out) {
        cpath::write_set_file(out, sets);
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chosen Path set similarity search"};
    app.require_subcommand(1);

    BuildArgs build_args;
    auto* build = app.add_subcommand("build", "build an index from a set file");
    build->add_option("--input", build_args.input, "set file")->required();
    build->add_option("--output", build_args.output, "snapshot path")->required();
    build->add_option("--b1", build_args.b1, "similar threshold")->required();
    build->add_option("--b2", build_args.b2, "dissimilar threshold")->required();
    build->add_option("--seed", build_args.seed, "master seed");
    build->add_option("--reps", build_args.reps, "repetitions (0 = auto)");
    build->add_option("--threads", build_args.threads, "worker threads (0 = auto)");

    QueryArgs query_args;
    auto* query = app.add_subcommand("query", "run queries against a snapshot");
    query->add_option("--index", query_args.index, "snapshot path")->required();
    query->add_option("--input", query_args.input, "query set file")->required();
    query->add_option("--output", query_args.output, "result file (default stdout)");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "planted-pair recall benchmark");
    bench->add_option("--n", bench_args.n, "number of decoys");
    bench->add_option("--t", bench_args.t, "set size");
    bench->add_option("--b1", bench_args.b1, "similar threshold");
    bench->add_option("--b2", bench_args.b2, "dissimilar threshold");
    bench->add_option("--trials", bench_args.trials, "planted pairs");
    bench->add_option("--seed", bench_args.seed, "master seed");
    bench->add_option("--reps", bench_args.reps, "repetitions (0 = auto)");
    bench->add_option("--threads", bench_args.threads, "worker threads");
    bench->add_option("--output", bench_args.output, "report file (default stdout)");
    bench->add_option("--measure", bench_args.measure,
                      "brute-force oracle measure");

    RhoArgs rho_args;
    auto* rho = app.add_subcommand("rho", "exponent tables and regime maps");
    rho->add_flag("--grid", rho_args.grid, "full (b1, b2) grid CSV (default)");
    rho->add_flag("--point", rho_args.point, "single row at --b1/--b2");
    rho->add_flag("--regime", rho_args.regime, "regime map at --beta");
    rho->add_flag("--figure2", rho_args.figure2, "j2 = j1/2 slice");
    rho->add_flag("--check", rho_args.check, "run the dominance scan");
    rho->add_option("--b1", rho_args.b1, "similar threshold");
    rho->add_option("--b2", rho_args.b2, "dissimilar threshold");
    rho->add_option("--j1", rho_args.j1, "similar Jaccard threshold");
    rho->add_option("--j2", rho_args.j2, "dissimilar Jaccard threshold");
    rho->add_option("--beta", rho_args.beta, "size ratio");
    rho->add_option("--resolution", rho_args.resolution, "grid resolution");
    rho->add_option("--output", rho_args.output, "CSV file (default stdout)");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Monte Carlo verification");
    verify->add_option("harness", verify_args.harness,
                       "lemma4 | lemma5 | transformT")
        ->required();
    verify->add_option("--trials", verify_args.trials, "trials (0 = default)");
    verify->add_option("--seed", verify_args.seed, "seed");
    verify->add_option("--threads", verify_args.threads, "worker threads");

    TransformArgs transform_args;
    auto* transform =
        app.add_subcommand("transform", "hex bit-vectors to sparse sets");
    transform->add_option("--input", transform_args.input,
                          "hex rows, one vector per line, two digits per byte,\n"
                          "most significant bit of the first byte = coordinate 0")
        ->required();
    transform->add_option("--output", transform_args.output,
                          "set file (default stdout)");
    transform->add_option("--b1", transform_args.b1, "target threshold");
    transform->add_option("--eps", transform_args.eps, "accuracy parameter");
    transform->add_option("--out-dim", transform_args.out_dim,
                          "output dimension budget")
        ->required();
    transform->add_option("--seed", transform_args.seed, "seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (build->parsed()) return run_build(build_args);
        if (query->parsed()) return run_query(query_args);
        if (bench->parsed()) return run_bench(bench_args);
        if (rho->parsed()) return run_rho(rho_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (transform->parsed()) return run_transform(transform_args);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const cpath::DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const cpath::ParameterError& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const cpath::RangeError& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}

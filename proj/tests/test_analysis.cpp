#include "doctest.h"

#include <cmath>
#include <sstream>

#include "cpath/analysis.hpp"

using namespace cpath;

namespace {
const double kB1 = 1.0 / 3.0;
const double kB2 = 2.0 / 11.0;
}  // namespace

TEST_CASE("rho at the running example thresholds") {
    // j1 = 0.2, j2 = 0.1 translated to Braun-Blanquet.
    CHECK(std::abs(rho(Method::ChosenPath, kB1, kB2) - 0.6444) <= 0.0005);
    CHECK(std::abs(rho(Method::MinHash, kB1, kB2) - 0.6990) <= 0.0005);
    CHECK(std::abs(rho(Method::Angular, kB1, kB2) - 0.7222) <= 0.0005);
    // Rational value 0.6875 = (2/3) / (32/33) = 11/16.
    CHECK(std::abs(rho(Method::DataDependent, kB1, kB2) - 0.6875) <= 1e-12);

    // ChosenPath rho equals ln 3 / ln 5.5.
    CHECK(rho(Method::ChosenPath, kB1, kB2) ==
          doctest::Approx(std::log(3.0) / std::log(5.5)).epsilon(1e-14));
}

TEST_CASE("rho: validity, range and limits") {
    CHECK_THROWS_AS(rho(Method::MinHash, 0.2, 0.5), ParameterError);
    CHECK_THROWS_AS(rho(Method::MinHash, 1.0, 0.5), ParameterError);

    // All exponents live in (0,1) on the valid region.
    for (int i = 1; i < 20; ++i) {
        for (int j = 1; j < i; ++j) {
            const double b1 = i / 20.0, b2 = j / 20.0;
            for (Method m : kAllMethods) {
                const double value = rho(m, b1, b2);
                CHECK(value > 0.0);
                CHECK(value < 1.0);
            }
        }
    }

    // b1 -> b2 from above drives every exponent to 1.
    for (Method m : kAllMethods)
        CHECK(rho(m, 0.4 + 1e-9, 0.4) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("rho_chosenpath is monotone in both thresholds") {
    double prev = 1.0;
    for (int i = 10; i < 19; ++i) {  // increasing b1 at fixed b2
        const double value = rho(Method::ChosenPath, i / 20.0, 0.3);
        CHECK(value < prev);
        prev = value;
    }
    prev = 0.0;
    for (int j = 1; j < 8; ++j) {  // increasing b2 at fixed b1
        const double value = rho(Method::ChosenPath, 0.45, j / 20.0);
        CHECK(value > prev);
        prev = value;
    }
}

TEST_CASE("hamming parametrization is the b = 1-r substitution") {
    CHECK(rho_hamming(Method::BitSampling, 0.1, 0.2) == doctest::Approx(0.5));
    // 1/(2c-1) with c = r2/r1 = 2.
    CHECK(rho_hamming(Method::DataDependent, 0.1, 0.2) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-14));

    for (int i = 1; i < 10; ++i) {
        for (int j = i + 1; j < 10; ++j) {
            const double r1 = i / 10.0, r2 = j / 10.0;
            for (Method m : kAllMethods) {
                CHECK(rho_hamming(m, r1, r2) ==
                      doctest::Approx(rho(m, 1.0 - r1, 1.0 - r2)).epsilon(1e-12));
            }
        }
    }
    CHECK_THROWS_AS(rho_hamming(Method::MinHash, 0.5, 0.2), ParameterError);
}

TEST_CASE("monotone comparison functions behind the dominance proofs") {
    // g(b) = log(b/(2-b))/log(b) and g'(b) = ln(b)(1+b)/(1-b) are strictly
    // increasing on (0,1); checked on a 10^4-point grid.
    const int n = 10'000;
    double prev_g = -1e300, prev_h = -1e300;
    for (int i = 1; i < n; ++i) {
        const double b = static_cast<double>(i) / n;
        const double g = std::log(b / (2.0 - b)) / std::log(b);
        const double h = std::log(b) * (1.0 + b) / (1.0 - b);
        CHECK(g > prev_g);
        CHECK(h > prev_h);
        prev_g = g;
        prev_h = h;
    }
}

TEST_CASE("dominance scan over the default grid") {
    const auto report = dominance_scan(200);
    CHECK(report.passed());
    CHECK(report.cells_checked > 0);
    // Figure-5 structure: the blue region covers all of b2 <= 1/5, and a red
    // region exists above it.
    CHECK(report.datadep_red_cells > 0);
    CHECK(report.datadep_blue_cells >= report.low_b2_cells);

    CHECK_THROWS_AS(dominance_scan(50), ParameterError);
}

TEST_CASE("dominance pinned cells") {
    // At the running example every competitor loses to Chosen Path.
    const double cp = rho(Method::ChosenPath, kB1, kB2);
    CHECK(cp < rho(Method::MinHash, kB1, kB2));
    CHECK(cp < rho(Method::Angular, kB1, kB2));
    CHECK(cp < rho(Method::DataDependent, kB1, kB2));

    // Numerical note: even at b2 = 1/23 there are b1 where MinHash loses to
    // the data-dependent method.
    CHECK(rho(Method::MinHash, 0.995, 1.0 / 23.0) >
          rho(Method::DataDependent, 0.995, 1.0 / 23.0));

    // On the rho = 1/2 diagonal b1 = sqrt(b2), equality holds only at 1/4.
    CHECK(std::abs(rho(Method::ChosenPath, 0.5, 0.25) -
                   rho(Method::DataDependent, 0.5, 0.25)) <= 1e-9);
    CHECK(rho(Method::ChosenPath, std::sqrt(0.2), 0.2) <
          rho(Method::DataDependent, std::sqrt(0.2), 0.2));
}

TEST_CASE("sampling crossover") {
    // Below 0.6 t the subset sample is more likely to overlap than MinHash.
    for (uint64_t t : {50ull, 100ull, 500ull}) {
        const uint64_t limit = static_cast<uint64_t>(0.6 * static_cast<double>(t));
        for (uint64_t a = 1; a < limit; ++a) {
            const auto [p_subset, p_minhash] = sampling_crossover(t, a);
            CHECK(p_subset > p_minhash);
        }
    }

    // Far above the crossover MinHash wins.
    {
        const auto [p_subset, p_minhash] = sampling_crossover(100, 70);
        CHECK(p_subset < p_minhash);
    }
    // a = t means Jaccard 1: the subset sample overlap is 1 - (1-1/t)^t.
    {
        const auto [p_subset, p_minhash] = sampling_crossover(100, 100);
        CHECK(p_minhash == 1.0);
        CHECK(p_subset == doctest::Approx(1.0 - std::pow(0.99, 100)));
    }
    CHECK_THROWS_AS(sampling_crossover(10, 0), ParameterError);
    CHECK_THROWS_AS(sampling_crossover(10, 11), ParameterError);
}

TEST_CASE("regime map: equal sizes are all chosen path") {
    const auto report = regime_map(0.2, 0.1, 1.0);
    CHECK(report.winner == Method::ChosenPath);
    CHECK(report.rho_chosenpath == doctest::Approx(0.6444).epsilon(1e-3));
    CHECK(report.rho_minhash == doctest::Approx(0.69897).epsilon(1e-4));
    CHECK(report.rho_angular == doctest::Approx(0.72222).epsilon(1e-4));

    for (int i = 2; i <= 18; ++i) {
        for (int j = 1; j < i; ++j) {
            const auto cell = regime_map(i / 20.0, j / 20.0, 1.0);
            CHECK(cell.winner == Method::ChosenPath);
        }
    }
}

TEST_CASE("regime map: each method wins somewhere for beta < 1") {
    for (double beta : {0.25, 0.5, 0.75}) {
        bool cp = false, mh = false, ang = false;
        const int res = 60;
        for (int i = 1; i < res; ++i) {
            for (int j = 0; j < i; ++j) {
                const double j1 = (i + 0.5) * beta / res;
                const double j2 = (j + 0.5) * beta / res;
                const auto cell = regime_map(j1, j2, beta);
                cp = cp || cell.winner == Method::ChosenPath;
                mh = mh || cell.winner == Method::MinHash;
                ang = ang || cell.winner == Method::Angular;
            }
        }
        CHECK(cp);
        CHECK(mh);
        CHECK(ang);
    }
}

TEST_CASE("regime map: conversion-route invariance") {
    // Cosine computed via j -> b -> C must match the direct expression
    // j (1+beta) / ((1+j) sqrt(beta)) feeding the angular exponent.
    for (double beta : {0.25, 0.5, 0.75, 1.0}) {
        for (int i = 2; i < 10; ++i) {
            const double j1 = beta * i / 10.0;
            const double j2 = beta * (i - 1) / 10.0;
            const auto cell = regime_map(j1, j2, beta);
            auto direct_c = [&](double j) {
                return j * (1.0 + beta) / ((1.0 + j) * std::sqrt(beta));
            };
            const double c1 = direct_c(j1), c2 = direct_c(j2);
            const double direct_angular =
                ((1.0 - c1) / (1.0 + c1)) / ((1.0 - c2) / (1.0 + c2));
            CHECK(cell.rho_angular ==
                  doctest::Approx(direct_angular).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(regime_map(0.6, 0.1, 0.5), ParameterError);
}

TEST_CASE("csv emitters") {
    std::ostringstream grid;
    write_rho_grid_csv(grid, 10);
    const std::string grid_text = grid.str();
    CHECK(grid_text.find("# rho_datadep ignores o_n(1)") == 0);
    CHECK(grid_text.find("b1,b2,rho_bitsampling,rho_minhash,rho_angular,"
                         "rho_datadep,rho_chosenpath,winner") != std::string::npos);
    // 10x10 grid over b2 < b1: 45 cells + caveat + header.
    size_t lines = 0;
    for (char c : grid_text)
        if (c == '\n') ++lines;
    CHECK(lines == 47);

    std::ostringstream point;
    write_rho_point_csv(point, kB1, kB2);
    CHECK(point.str().find("0.6875") != std::string::npos);
    CHECK(point.str().find("chosenpath") != std::string::npos);

    std::ostringstream regime;
    write_regime_csv(regime, 0.5, 10);
    CHECK(regime.str().find("beta,j1,j2,b1,b2,rho_minhash,rho_angular,"
                            "rho_chosenpath,winner") == 0);

    std::ostringstream fig2;
    write_figure2_csv(fig2, 16);
    size_t fig2_lines = 0;
    for (char c : fig2.str())
        if (c == '\n') ++fig2_lines;
    CHECK(fig2_lines == 18);  // caveat + header + 16 rows
}

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cpath/measures.hpp"

namespace cpath {

enum class Method { BitSampling, MinHash, Angular, DataDependent, ChosenPath };

constexpr std::array<Method, 5> kAllMethods = {
    Method::BitSampling, Method::MinHash, Method::Angular,
    Method::DataDependent, Method::ChosenPath};

const char* to_string(Method method);

/// Query exponent for the (b1, b2) Braun-Blanquet problem in the equal-size
/// parametrization:
///   bit-sampling   (1-b1) / (1-b2)
///   MinHash        log(b1/(2-b1)) / log(b2/(2-b2))
///   angular        [(1-b1)/(1+b1)] / [(1-b2)/(1+b2)]
///   data-dep.      (1-b1) / (1+b1-2 b2)   (o_n(1) terms ignored)
///   Chosen Path    log(b1) / log(b2)
double rho(Method method, double b1, double b2);

/// The same exponents parametrized by normalized Hamming distances
/// 0 < r1 < r2 < 1; agrees with rho via b = 1 - r.
double rho_hamming(Method method, double r1, double r2);

/// Per-cell result of the three-way regime comparison for asymmetric sets
/// (|y| = beta |x|), Jaccard thresholds j2 < j1 <= beta.
struct RhoReport {
    ThresholdPair thresholds;  // (j1, j2) under Jaccard with the given beta
    double b1 = 0.0, b2 = 0.0;
    double rho_minhash = 0.0;
    double rho_angular = 0.0;
    double rho_chosenpath = 0.0;
    Method winner = Method::ChosenPath;
};

/// Converts j -> b and j -> cosine through the common parametrization and
/// reports the method with the lowest exponent. Ties break in the order
/// ChosenPath < MinHash < Angular.
RhoReport regime_map(double j1, double j2, double beta);

/// Overlap probabilities of the two sampling schemes for equal-size-t sets
/// with intersection a: subset sampling 1-(1-1/t)^a versus the single-sample
/// collision a/(2t-a).
std::pair<double, double> sampling_crossover(uint64_t t, uint64_t a);

struct DominanceViolation {
    std::string check;
    double b1 = 0.0, b2 = 0.0;
    double lhs = 0.0, rhs = 0.0;
};

struct DominanceReport {
    uint32_t resolution = 0;
    uint64_t cells_checked = 0;
    uint64_t low_b2_cells = 0;        // cells with b2 <= 1/5
    uint64_t datadep_blue_cells = 0;  // rho_cp <= rho_datadep
    uint64_t datadep_red_cells = 0;   // rho_cp >  rho_datadep
    std::vector<DominanceViolation> violations;

    bool passed() const { return violations.empty(); }
};

/// Sweeps cell centers of a resolution x resolution grid over
/// 0 < b2 < b1 < 1 and asserts rho_cp < rho_minhash, rho_cp < rho_angular
/// everywhere and rho_cp < rho_datadep wherever b2 <= 1/5. Also tallies the
/// sign map of rho_cp - rho_datadep.
DominanceReport dominance_scan(uint32_t resolution);

// CSV emitters. All numbers are printed with 10 significant digits; the grid
// files hold one cell per line. rho_datadep columns carry the documented
// caveat that o_n(1) terms are ignored.
void write_rho_grid_csv(std::ostream& out, uint32_t resolution);
void write_rho_point_csv(std::ostream& out, double b1, double b2);
void write_regime_csv(std::ostream& out, double beta, uint32_t resolution);
void write_figure2_csv(std::ostream& out, uint32_t resolution);

}  // namespace cpath

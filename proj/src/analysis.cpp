#include "cpath/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace cpath {

const char* to_string(Method method) {
    switch (method) {
        case Method::BitSampling: return "bitsampling";
        case Method::MinHash: return "minhash";
        case Method::Angular: return "angular";
        case Method::DataDependent: return "datadep";
        case Method::ChosenPath: return "chosenpath";
    }
    return "?";
}

namespace {

void check_bb_pair(double b1, double b2) {
    if (!(0.0 < b2 && b2 < b1 && b1 < 1.0))
        throw ParameterError("rho: need 0 < b2 < b1 < 1");
}

void check_hamming_pair(double r1, double r2) {
    if (!(0.0 < r1 && r1 < r2 && r2 < 1.0))
        throw ParameterError("rho_hamming: need 0 < r1 < r2 < 1");
}

double angular_from_cosine(double c1, double c2) {
    return ((1.0 - c1) / (1.0 + c1)) / ((1.0 - c2) / (1.0 + c2));
}

}  // namespace

double rho(Method method, double b1, double b2) {
    check_bb_pair(b1, b2);
    switch (method) {
        case Method::BitSampling:
            return (1.0 - b1) / (1.0 - b2);
        case Method::MinHash:
            return std::log(b1 / (2.0 - b1)) / std::log(b2 / (2.0 - b2));
        case Method::Angular:
            return angular_from_cosine(b1, b2);
        case Method::DataDependent:
            return (1.0 - b1) / (1.0 + b1 - 2.0 * b2);
        case Method::ChosenPath:
            return std::log(b1) / std::log(b2);
    }
    throw ParameterError("rho: unknown method");
}

double rho_hamming(Method method, double r1, double r2) {
    check_hamming_pair(r1, r2);
    switch (method) {
        case Method::BitSampling:
            return r1 / r2;
        case Method::MinHash:
            return std::log((1.0 - r1) / (1.0 + r1)) /
                   std::log((1.0 - r2) / (1.0 + r2));
        case Method::Angular:
            return (r1 / r2) * (1.0 - r2 / 2.0) / (1.0 - r1 / 2.0);
        case Method::DataDependent:
            return (r1 / r2) / (2.0 - r1 / r2);
        case Method::ChosenPath:
            return std::log(1.0 - r1) / std::log(1.0 - r2);
    }
    throw ParameterError("rho_hamming: unknown method");
}

RhoReport regime_map(double j1, double j2, double beta) {
    if (!(0.0 < j2 && j2 < j1 && j1 <= beta && beta <= 1.0))
        throw ParameterError("regime_map: need 0 < j2 < j1 <= beta <= 1");

    RhoReport report;
    report.thresholds = make_threshold_pair(j1, j2, MeasureKind::Jaccard, beta);
    report.b1 = convert_threshold(j1, MeasureKind::Jaccard,
                                  MeasureKind::BraunBlanquet, beta);
    report.b2 = convert_threshold(j2, MeasureKind::Jaccard,
                                  MeasureKind::BraunBlanquet, beta);
    const double c1 =
        convert_threshold(j1, MeasureKind::Jaccard, MeasureKind::Cosine, beta);
    const double c2 =
        convert_threshold(j2, MeasureKind::Jaccard, MeasureKind::Cosine, beta);

    report.rho_minhash = std::log(j1) / std::log(j2);
    report.rho_chosenpath = std::log(report.b1) / std::log(report.b2);
    report.rho_angular = angular_from_cosine(c1, c2);

    report.winner = Method::ChosenPath;
    double best = report.rho_chosenpath;
    if (report.rho_minhash < best) {
        best = report.rho_minhash;
        report.winner = Method::MinHash;
    }
    if (report.rho_angular < best) {
        best = report.rho_angular;
        report.winner = Method::Angular;
    }
    return report;
}

std::pair<double, double> sampling_crossover(uint64_t t, uint64_t a) {
    if (t < 1 || a < 1 || a > t)
        throw ParameterError("sampling_crossover: need 1 <= a <= t");
    const double td = static_cast<double>(t);
    const double ad = static_cast<double>(a);
    const double p_subset = 1.0 - std::pow(1.0 - 1.0 / td, ad);
    const double p_minhash = ad / (2.0 * td - ad);
    return {p_subset, p_minhash};
}

DominanceReport dominance_scan(uint32_t resolution) {
    if (resolution < 100)
        throw ParameterError("dominance_scan: resolution must be at least 100");

    DominanceReport report;
    report.resolution = resolution;
    const double step = 1.0 / resolution;
    for (uint32_t i = 0; i < resolution; ++i) {
        const double b1 = (i + 0.5) * step;
        for (uint32_t j = 0; j < resolution; ++j) {
            const double b2 = (j + 0.5) * step;
            if (!(b2 < b1)) break;
            ++report.cells_checked;

            const double cp = rho(Method::ChosenPath, b1, b2);
            const double mh = rho(Method::MinHash, b1, b2);
            const double ang = rho(Method::Angular, b1, b2);
            const double dd = rho(Method::DataDependent, b1, b2);

            if (!(cp < mh))
                report.violations.push_back({"cp<minhash", b1, b2, cp, mh});
            if (!(cp < ang))
                report.violations.push_back({"cp<angular", b1, b2, cp, ang});
            if (cp <= dd)
                ++report.datadep_blue_cells;
            else
                ++report.datadep_red_cells;
            if (b2 <= 0.2) {
                ++report.low_b2_cells;
                if (!(cp < dd))
                    report.violations.push_back({"cp<datadep@b2<=1/5", b1, b2, cp, dd});
            }
        }
    }
    return report;
}

namespace {

// 10 significant digits, locale-independent.
std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

Method argmin_all(double bs, double mh, double ang, double dd, double cp) {
    // Tie order: ChosenPath first, then the Table rows top to bottom.
    Method winner = Method::ChosenPath;
    double best = cp;
    const std::pair<Method, double> rest[] = {{Method::BitSampling, bs},
                                              {Method::MinHash, mh},
                                              {Method::Angular, ang},
                                              {Method::DataDependent, dd}};
    for (const auto& [method, value] : rest) {
        if (value < best) {
            best = value;
            winner = method;
        }
    }
    return winner;
}

constexpr const char* kDatadepCaveat =
    "# rho_datadep ignores o_n(1) terms, as the closed-form comparison does\n";
constexpr const char* kGridHeader =
    "b1,b2,rho_bitsampling,rho_minhash,rho_angular,rho_datadep,rho_chosenpath,"
    "winner\n";

void write_grid_row(std::ostream& out, double b1, double b2) {
    const double bs = rho(Method::BitSampling, b1, b2);
    const double mh = rho(Method::MinHash, b1, b2);
    const double ang = rho(Method::Angular, b1, b2);
    const double dd = rho(Method::DataDependent, b1, b2);
    const double cp = rho(Method::ChosenPath, b1, b2);
    out << num(b1) << ',' << num(b2) << ',' << num(bs) << ',' << num(mh) << ','
        << num(ang) << ',' << num(dd) << ',' << num(cp) << ','
        << to_string(argmin_all(bs, mh, ang, dd, cp)) << '\n';
}

}  // namespace

void write_rho_grid_csv(std::ostream& out, uint32_t resolution) {
    if (resolution < 2) throw ParameterError("grid resolution must be at least 2");
    out << kDatadepCaveat << kGridHeader;
    const double step = 1.0 / resolution;
    for (uint32_t i = 0; i < resolution; ++i) {
        const double b1 = (i + 0.5) * step;
        for (uint32_t j = 0; j < resolution; ++j) {
            const double b2 = (j + 0.5) * step;
            if (!(b2 < b1)) break;
            write_grid_row(out, b1, b2);
        }
    }
}

void write_rho_point_csv(std::ostream& out, double b1, double b2) {
    out << kDatadepCaveat << kGridHeader;
    write_grid_row(out, b1, b2);
}

void write_regime_csv(std::ostream& out, double beta, uint32_t resolution) {
    if (!(beta > 0.0) || beta > 1.0)
        throw ParameterError("regime map: beta must be in (0,1]");
    if (resolution < 2) throw ParameterError("grid resolution must be at least 2");
    out << "beta,j1,j2,b1,b2,rho_minhash,rho_angular,rho_chosenpath,winner\n";
    const double step = beta / resolution;
    for (uint32_t i = 0; i < resolution; ++i) {
        const double j1 = (i + 0.5) * step;
        for (uint32_t j = 0; j < resolution; ++j) {
            const double j2 = (j + 0.5) * step;
            if (!(j2 < j1)) break;
            const RhoReport cell = regime_map(j1, j2, beta);
            out << num(beta) << ',' << num(j1) << ',' << num(j2) << ','
                << num(cell.b1) << ',' << num(cell.b2) << ','
                << num(cell.rho_minhash) << ',' << num(cell.rho_angular) << ','
                << num(cell.rho_chosenpath) << ',' << to_string(cell.winner)
                << '\n';
        }
    }
}

void write_figure2_csv(std::ostream& out, uint32_t resolution) {
    if (resolution < 2) throw ParameterError("grid resolution must be at least 2");
    // Approximation-factor-2 slice: j2 = j1/2, equal-size conversion.
    out << kDatadepCaveat
        << "j1,j2,b1,b2,rho_bitsampling,rho_minhash,rho_angular,rho_datadep,"
           "rho_chosenpath\n";
    const double step = 1.0 / resolution;
    for (uint32_t i = 0; i < resolution; ++i) {
        const double j1 = (i + 0.5) * step;
        const double j2 = j1 / 2.0;
        const double b1 = convert_threshold(j1, MeasureKind::Jaccard,
                                            MeasureKind::BraunBlanquet);
        const double b2 = convert_threshold(j2, MeasureKind::Jaccard,
                                            MeasureKind::BraunBlanquet);
        out << num(j1) << ',' << num(j2) << ',' << num(b1) << ',' << num(b2)
            << ',' << num(rho(Method::BitSampling, b1, b2)) << ','
            << num(rho(Method::MinHash, b1, b2)) << ','
            << num(rho(Method::Angular, b1, b2)) << ','
            << num(rho(Method::DataDependent, b1, b2)) << ','
            << num(rho(Method::ChosenPath, b1, b2)) << '\n';
    }
}

}  // namespace cpath

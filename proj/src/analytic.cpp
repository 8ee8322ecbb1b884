#include "jcphase/analytic.hpp"

#include <cmath>
#include <string>

namespace jcphase {

double sector_detuning(const ModelParams& params, Spin sector) noexcept {
    const double two_j = sector == Spin::e ? 2.0 * params.j_c : -2.0 * params.j_c;
    return (params.omega - params.nu) + two_j;
}

double sector_splitting(const ModelParams& params, const SectorLabel& sector) noexcept {
    const double g = 2.0 * params.lambda_c * std::sqrt(static_cast<double>(sector.n + 1));
    const double det = sector_detuning(params, sector.spin2_polarity);
    return std::hypot(g, det);
}

double sector_cos(const ModelParams& params, const SectorLabel& sector) {
    params.validate();
    if (sector.n < 0) {
        throw SectorOutOfRange("sector_cos: n must be >= 0");
    }
    const double det = sector_detuning(params, sector.spin2_polarity);
    const double split = sector_splitting(params, sector);
    if (split == 0.0) {
        throw DegenerateSector(
            "mixing angle undefined: lambda = 0 and zero detuning in the " +
            std::string(sector.spin2_polarity == Spin::e ? "alpha" : "beta") + "-sector");
    }
    if (params.lambda_c == 0.0) {
        return det > 0.0 ? 1.0 : -1.0;
    }
    return det / split;
}

MixingAngles mixing_angles(const ModelParams& params, int n) {
    MixingAngles angles;
    angles.cos_alpha = sector_cos(params, SectorLabel{Spin::e, n});
    angles.cos_beta = sector_cos(params, SectorLabel{Spin::g, n});
    angles.alpha = std::acos(angles.cos_alpha);
    angles.beta = std::acos(angles.cos_beta);
    return angles;
}

SectorEigenvalues sector_eigensystem(const ModelParams& params, const SectorLabel& sector) {
    const double cosx = sector_cos(params, sector); // validates
    const double split = sector_splitting(params, sector);
    const double mean =
        sector.spin2_polarity == Spin::e
            ? (params.omega + (2.0 * sector.n + 1.0) * params.nu) / 2.0
            : ((2.0 * sector.n + 1.0) * params.nu - params.omega) / 2.0;
    SectorEigenvalues out;
    out.e_plus = mean + split / 2.0;
    out.e_minus = mean - split / 2.0;
    out.cos_angle = cosx;
    out.angle = std::acos(cosx);
    return out;
}

double level_energy(const ModelParams& params, int n, Level level) {
    const SectorEigenvalues es = sector_eigensystem(params, level.sector_label(n));
    return level.upper_branch() ? es.e_plus : es.e_minus;
}

Ket eigenstate(const ModelParams& params, int n, Level level, double phi, int cutoff) {
    const double cosx = sector_cos(params, level.sector_label(n));
    if (n + 1 >= cutoff) {
        throw SectorOutOfRange("eigenstate: sector n = " + std::to_string(n) +
                               " needs n+1 < cutoff = " + std::to_string(cutoff));
    }
    const double half = std::acos(cosx) / 2.0;
    // Upper branch: (cos, sin); lower branch: (-sin, cos).
    const double a0 = level.upper_branch() ? std::cos(half) : -std::sin(half);
    const double a1 = level.upper_branch() ? std::sin(half) : std::cos(half);

    Ket ket = Ket::Zero(basis_dim(cutoff));
    const Spin y2 = level.sector();
    ket(basis_index(Spin::e, y2, n, cutoff)) = a0 * std::polar(1.0, -phi * n);
    ket(basis_index(Spin::g, y2, n + 1, cutoff)) = a1 * std::polar(1.0, -phi * (n + 1));
    return ket;
}

PhaseResult berry_phase(const ModelParams& params, int n, Level level) {
    if (n < 0) throw SectorOutOfRange("berry_phase: n must be >= 0");
    const double cosx = sector_cos(params, level.sector_label(n));
    const double part = kPi * (1.0 - cosx);
    const double total =
        level.upper_branch() ? 2.0 * n * kPi + part : 2.0 * (n + 1) * kPi - part;
    return PhaseResult::from_total(total);
}

double two_mode_berry_phase(const ModelParams& params, int n, int nprime, double theta,
                            Level level) {
    if (n < 0 || nprime < 0) {
        throw SectorOutOfRange("two_mode_berry_phase: photon numbers must be >= 0");
    }
    const double cosx = sector_cos(params, level.sector_label(n));
    const double ct = std::cos(theta);
    const double sign = level.upper_branch() ? -1.0 : 1.0;
    return kPi * ct * (n - nprime + 0.5) + sign * (kPi / 2.0) * ct * cosx;
}

PhaseResult mixed_state_phase(const ModelParams& params, int n, Level level) {
    if (n < 0) throw SectorOutOfRange("mixed_state_phase: n must be >= 0");
    const double cosx = sector_cos(params, level.sector_label(n));
    const double total = level.upper_branch() ? kPi * (1.0 + cosx) : kPi * (1.0 - cosx);
    return PhaseResult::from_total(total);
}

double adiabatic_ratio_bound(const ModelParams& params, int n, double omega_prec) {
    if (n < 0) throw SectorOutOfRange("adiabatic_ratio_bound: n must be >= 0");
    params.validate();
    double worst = 0.0;
    for (Spin s : {Spin::e, Spin::g}) {
        const SectorLabel sector{s, n};
        const double split = sector_splitting(params, sector);
        if (split == 0.0) {
            throw DegenerateSector("adiabatic_ratio_bound: zero-splitting sector");
        }
        // sin(xi) = 2 lambda sqrt(n+1) / splitting, free of cancellation near xi = 0, pi
        const double g = 2.0 * params.lambda_c * std::sqrt(static_cast<double>(n + 1));
        const double sinx = g / split;
        worst = std::max(worst, omega_prec * sinx / (2.0 * split));
    }
    return worst;
}

} // namespace jcphase

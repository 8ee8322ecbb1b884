#pragma once

#include "jcphase/errors.hpp"
#include "jcphase/model.hpp"
#include "jcphase/types.hpp"

namespace jcphase {

// Closed forms for the dressed 2x2 sectors and every geometric-phase
// quantity derived from them. All functions are pure; DegenerateSector is
// thrown when a requested sector has zero splitting (lambda = 0 together
// with zero sector detuning), where the mixing angle is undefined.

// Bloch polar angles of the dressed eigenstates in both sectors.
struct MixingAngles {
    double cos_alpha = 0.0; // alpha-sector (spin2 = e)
    double cos_beta = 0.0;  // beta-sector  (spin2 = g)
    double alpha = 0.0;     // arccos(cos_alpha), in [0, pi]
    double beta = 0.0;
};

struct SectorEigenvalues {
    double e_plus = 0.0;    // upper branch
    double e_minus = 0.0;   // lower branch
    double cos_angle = 0.0; // mixing cosine of this sector
    double angle = 0.0;
};

// omega + 2J - nu for the alpha-sector, omega - 2J - nu for the beta-sector.
double sector_detuning(const ModelParams& params, Spin sector) noexcept;

// sqrt(4 lambda^2 (n+1) + detuning^2): the energy gap inside the sector.
double sector_splitting(const ModelParams& params, const SectorLabel& sector) noexcept;

// detuning / splitting; collapses to sign(detuning) at lambda = 0.
double sector_cos(const ModelParams& params, const SectorLabel& sector);

MixingAngles mixing_angles(const ModelParams& params, int n);

// Sector mean ± splitting/2. Alpha mean: (omega + (2n+1) nu)/2,
// beta mean: ((2n+1) nu - omega)/2.
SectorEigenvalues sector_eigensystem(const ModelParams& params, const SectorLabel& sector);

double level_energy(const ModelParams& params, int n, Level level);

// The dressed eigenstate after the phase shift, embedded in the full basis:
// e.g. level 1 = cos(a/2) e^{-i n phi} |e1 e2 n> + sin(a/2) e^{-i(n+1) phi} |g1 e2 n+1>.
// Throws SectorOutOfRange unless n+1 < cutoff.
Ket eigenstate(const ModelParams& params, int n, Level level, double phi,
               int cutoff = kDefaultCutoff);

// Composite-system Berry phase for one 0 -> 2pi loop of the field phase.
// Totals: level 1: 2n pi + pi(1 - cos a); level 2: 2(n+1) pi - pi(1 - cos a);
// levels 3, 4 likewise with cos b.
PhaseResult berry_phase(const ModelParams& params, int n, Level level);

// Two-mode phase at fixed polar angle theta:
// pi cos(theta) (n - n' + 1/2) -/+ (pi/2) cos(theta) cos(xi), xi = alpha
// for levels 1, 2 and beta for levels 3, 4 (minus on the upper branch).
double two_mode_berry_phase(const ModelParams& params, int n, int nprime, double theta,
                            Level level);

// Subsystem-1 (spin 1 + field) mixed-state geometric phase:
// pi(1 + cos xi) on the upper branch, pi(1 - cos xi) on the lower.
PhaseResult mixed_state_phase(const ModelParams& params, int n, Level level);

// max over same-sector level pairs of |<psi_p| d/dt psi_q> / (E_p - E_q)|
// with phi = omega_prec * t: omega_prec * sin(xi) / (2 * splitting), maximised
// over both sectors. Cross-sector pairs contribute exactly zero.
double adiabatic_ratio_bound(const ModelParams& params, int n, double omega_prec);

} // namespace jcphase

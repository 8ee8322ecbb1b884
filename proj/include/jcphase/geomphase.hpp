#pragma once

#include "jcphase/errors.hpp"
#include "jcphase/linalg.hpp"
#include "jcphase/model.hpp"
#include "jcphase/types.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace jcphase {

// Formula-free numerical side: discrete holonomies, connection quadrature,
// the interferometric mixed-state phase and finite-difference adiabaticity
// ratios. Everything here sees the model only through matrices, so it can
// gate the closed forms in analytic.hpp.

enum class Continuation {
    natural_gauge,   // eigenvector at step k is U(phi_k) u0; recovers windings
    overlap_matched, // eigh at every step, continuation by max |overlap|
};

struct LoopSpec {
    int steps = 2000;
    Continuation continuation = Continuation::overlap_matched;
    std::optional<double> theta; // fixed polar angle, two-mode loops only
};

struct HoloResult {
    double reduced_phase = 0.0; // in [0, 2pi)
    double total_phase = 0.0;   // unwrapped accumulation (natural gauge)
    int winding = 0;            // (total - reduced) / 2pi
    double min_gap = 0.0;       // smallest same-sector gap seen along the loop
};

using HamiltonianFamily = std::function<ComplexMatrix(double)>;
using Transporter = std::function<ComplexMatrix(double)>;
using DensityFamily = std::function<ComplexMatrix(double)>;

// ---- building blocks --------------------------------------------------

struct EigenvectorPath {
    std::vector<Ket> kets; // one per loop node phi_k = 2pi k / steps
    double min_gap = 0.0;  // distance to the nearest non-degenerate neighbour level
};

// Tracks one level of h(phi) around the loop by overlap continuation.
// Degenerate clusters (gap < kClusterGap) are handled by projecting the
// previous vector onto the cluster span. Throws GapCollapse when the match
// overlap falls below 0.5.
EigenvectorPath eigenvector_path(const HamiltonianFamily& h_family, const Ket& reference,
                                 int steps);

// -arg prod_k <u_k|u_{k+1}> over the closed path (u_steps = u_0), mapped to
// [0, 2pi). Gauge invariant: per-vector rephasings cancel in the product.
double holonomy_phase(const std::vector<Ket>& path);

// ---- loop operations ---------------------------------------------------

// Discrete Wilson-loop holonomy of one level of h_family over phi in [0, 2pi].
// Requires h_family(0) = h_family(2pi) (NonClosedLoop otherwise). With
// natural_gauge continuation a transporter U(phi) must be supplied; the
// unwrapped per-step accumulation then recovers the winding (LoopTooCoarse
// if a single step advances the phase by more than pi/2).
HoloResult wilson_loop_phase(const HamiltonianFamily& h_family, const Ket& level_reference,
                             const LoopSpec& spec, const Transporter& transporter = {});

// Model-aware front: family U(phi) H U†(phi) with the numeric sector
// eigenvector as reference.
HoloResult wilson_loop_phase(const ModelParams& params, int n, Level level,
                             const LoopSpec& spec, int cutoff = kDefaultCutoff);

// Midpoint-rule quadrature of the Berry connection Im<u|du> along the
// natural-gauge path (phase increments resolved through the half-step
// states). Second-order accurate in the step size.
HoloResult connection_integral(const ModelParams& params, int n, Level level,
                               const LoopSpec& spec, int cutoff = kDefaultCutoff);

// Holonomy of U(theta, phi)(|psi_i>⊗|n'>) over phi in [0, 2pi] at fixed
// theta. Requires cutoff >= n + n' + 2 so the rotation acts exactly on the
// populated total-photon-number blocks (CutoffTooSmall otherwise).
HoloResult two_mode_loop_phase(const ModelParams& params, int n, int nprime, double theta,
                               Level level, const LoopSpec& spec, int cutoff = kDefaultCutoff);

// Interferometric weighted-average phase of a closed density-matrix family:
// arg sum_i w_i |prod overlaps| e^{i gamma_i} over the spectral branches with
// weight above weight_floor. Throws RankChange when branches cross or the
// significant rank changes along the loop.
HoloResult mixed_phase_from_family(const DensityFamily& rho_family, int steps,
                                   double weight_floor = 1e-9);

// Mixed-state phase of subsystem 1: partial trace of the transported
// eigenstate over spin 2, then the weighted-average holonomy above.
HoloResult mixed_phase_numeric(const ModelParams& params, int n, Level level,
                               const LoopSpec& spec, int cutoff = kDefaultCutoff);

// ---- adiabaticity -------------------------------------------------------

// 4x4 matrix of |<psi_p| d/dt psi_q> / (E_p - E_q)| with central differences
// of step fd_step in phi, scaled by omega_prec. Diagonal and cross-sector
// entries are zero. fd_step must lie in (0, 1e-2].
Eigen::MatrixXd adiabatic_ratio_pairs(const ModelParams& params, int n, double omega_prec,
                                      double fd_step = 1e-4, int cutoff = kDefaultCutoff);

double adiabatic_ratio_numeric(const ModelParams& params, int n, double omega_prec,
                               double fd_step = 1e-4, int cutoff = kDefaultCutoff);

// Numeric dressed eigenstate at phi = 0: eigenvector of the extracted 2x2
// sector block (no closed forms involved), embedded in the full basis.
Ket numeric_eigenstate(const ModelParams& params, int n, Level level,
                       int cutoff = kDefaultCutoff);

} // namespace jcphase

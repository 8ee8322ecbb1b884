#include "jcphase/geomphase.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <string>

namespace jcphase {

namespace {

constexpr double kMatchFloor = 0.5;   // overlap below this means the level was lost
constexpr double kGapFloor = 1e-8;    // "gapped level" precondition
constexpr double kMaxStepPhase = kPi / 2.0;

void check_steps(int steps) {
    if (steps < 16) {
        throw std::invalid_argument("LoopSpec: steps must be >= 16");
    }
}

// Photon number of mode a per single-mode basis index.
RealVector photon_numbers(int cutoff) {
    RealVector nvec(basis_dim(cutoff));
    for (int block = 0; block < 4; ++block) {
        for (int n = 0; n < cutoff; ++n) nvec(block * cutoff + n) = n;
    }
    return nvec;
}

Ket apply_phase_diag(const RealVector& gen, double phi, const Ket& v) {
    Ket out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out(i) = v(i) * std::polar(1.0, -phi * gen(i));
    }
    return out;
}

double step_arg(const Ket& a, const Ket& b, double phi) {
    const Complex o = a.dot(b); // conjugates a
    if (std::abs(o) < 1e-12) {
        throw GapCollapse("vanishing overlap at phi = " + std::to_string(phi));
    }
    const double ang = std::arg(o);
    if (std::abs(ang) > kMaxStepPhase) {
        throw LoopTooCoarse("per-step phase " + std::to_string(ang) + " at phi = " +
                            std::to_string(phi) + " exceeds pi/2; increase steps");
    }
    return ang;
}

// [first, last] of the degenerate cluster containing index i.
std::pair<int, int> cluster_around(const RealVector& values, int i) {
    int lo = i;
    int hi = i;
    while (lo > 0 && values(lo) - values(lo - 1) < kClusterGap) --lo;
    while (hi + 1 < values.size() && values(hi + 1) - values(hi) < kClusterGap) ++hi;
    return {lo, hi};
}

struct TrackedVector {
    Ket ket;
    double value = 0.0;
    double gap = std::numeric_limits<double>::infinity();
};

// Continues `prev` into the eigenbasis of `es`: picks the best-overlap
// eigenvector, projecting onto the cluster span when the matched eigenvalue
// is degenerate (cross-block degeneracies are harmless that way).
TrackedVector match_level(const Eigensystem& es, const Ket& prev, double phi) {
    int best = 0;
    double best_ovl = -1.0;
    for (int j = 0; j < es.dim(); ++j) {
        const double ovl = std::abs(es.vectors.col(j).dot(prev));
        if (ovl > best_ovl) {
            best_ovl = ovl;
            best = j;
        }
    }
    const auto [lo, hi] = cluster_around(es.values, best);

    TrackedVector out;
    out.value = es.values(best);
    if (hi > lo) {
        Ket projected = Ket::Zero(prev.size());
        for (int j = lo; j <= hi; ++j) {
            projected += es.vectors.col(j) * es.vectors.col(j).dot(prev);
        }
        const double norm = projected.norm();
        if (norm < kMatchFloor) {
            throw GapCollapse("level tracking lost at phi = " + std::to_string(phi) +
                              " (cluster overlap " + std::to_string(norm) + ")");
        }
        out.ket = projected / norm;
    } else {
        if (best_ovl < kMatchFloor) {
            throw GapCollapse("level tracking lost at phi = " + std::to_string(phi) +
                              " (overlap " + std::to_string(best_ovl) + ")");
        }
        out.ket = es.vectors.col(best);
    }
    if (lo > 0) out.gap = std::min(out.gap, out.value - es.values(lo - 1));
    if (hi + 1 < es.values.size()) {
        out.gap = std::min(out.gap, es.values(hi + 1) - out.value);
    }
    return out;
}

HoloResult holo_from_total(double total, double min_gap) {
    const PhaseResult pr = PhaseResult::from_total(total);
    return HoloResult{pr.reduced, pr.total, pr.winding, min_gap};
}

// Numeric sector data shared by the model-aware loops.
struct SectorNumerics {
    Ket upper;       // embedded eigenvectors at phi = 0
    Ket lower;
    double e_upper = 0.0;
    double e_lower = 0.0;
    double splitting = 0.0;
};

SectorNumerics sector_numerics(const ModelParams& params, int n, Spin spin2, int cutoff) {
    const ComplexMatrix h = build_hamiltonian(params, cutoff);
    const SectorLabel label{spin2, n};
    const Eigensystem block = eigh(extract_sector(h, label));

    SectorNumerics out;
    out.e_lower = block.values(0);
    out.e_upper = block.values(1);
    out.splitting = out.e_upper - out.e_lower;

    const int i = basis_index(Spin::e, spin2, n, cutoff);
    const int j = basis_index(Spin::g, spin2, n + 1, cutoff);
    out.upper = Ket::Zero(basis_dim(cutoff));
    out.lower = Ket::Zero(basis_dim(cutoff));
    out.upper(i) = block.vectors(0, 1);
    out.upper(j) = block.vectors(1, 1);
    out.lower(i) = block.vectors(0, 0);
    out.lower(j) = block.vectors(1, 0);
    return out;
}

} // namespace

Ket numeric_eigenstate(const ModelParams& params, int n, Level level, int cutoff) {
    const SectorNumerics sec = sector_numerics(params, n, level.sector(), cutoff);
    return level.upper_branch() ? sec.upper : sec.lower;
}

EigenvectorPath eigenvector_path(const HamiltonianFamily& h_family, const Ket& reference,
                                 int steps) {
    check_steps(steps);
    EigenvectorPath path;
    path.kets.reserve(static_cast<size_t>(steps));
    path.min_gap = std::numeric_limits<double>::infinity();

    Ket prev = reference;
    for (int k = 0; k < steps; ++k) {
        const double phi = kTwoPi * k / steps;
        const Eigensystem es = eigh(h_family(phi));
        const TrackedVector tracked = match_level(es, prev, phi);
        path.min_gap = std::min(path.min_gap, tracked.gap);
        path.kets.push_back(tracked.ket);
        prev = tracked.ket;
    }
    return path;
}

double holonomy_phase(const std::vector<Ket>& path) {
    if (path.size() < 2) {
        throw std::invalid_argument("holonomy_phase: need at least two path points");
    }
    double sum = 0.0;
    const size_t n = path.size();
    for (size_t k = 0; k < n; ++k) {
        const Ket& a = path[k];
        const Ket& b = path[(k + 1) % n];
        const Complex o = a.dot(b);
        if (std::abs(o) < 1e-12) {
            throw GapCollapse("vanishing overlap in holonomy product");
        }
        sum += std::arg(o);
    }
    return wrap_to_2pi(-sum);
}

HoloResult wilson_loop_phase(const HamiltonianFamily& h_family, const Ket& level_reference,
                             const LoopSpec& spec, const Transporter& transporter) {
    check_steps(spec.steps);
    {
        const ComplexMatrix h0 = h_family(0.0);
        const ComplexMatrix h1 = h_family(kTwoPi);
        const double scale = std::max(1.0, inf_norm(h0));
        if (inf_norm(h0 - h1) > 1e-9 * scale) {
            throw NonClosedLoop("h_family(0) != h_family(2pi)");
        }
    }

    if (spec.continuation == Continuation::overlap_matched) {
        const EigenvectorPath path = eigenvector_path(h_family, level_reference, spec.steps);
        const double reduced = holonomy_phase(path.kets);
        return HoloResult{reduced, reduced, 0, path.min_gap};
    }

    if (!transporter) {
        throw std::invalid_argument(
            "wilson_loop_phase: natural_gauge continuation needs a transporter");
    }

    // Natural gauge: u_k = U(phi_k) u0 with unwrapped per-step accumulation.
    const Eigensystem es0 = eigh(h_family(0.0));
    const TrackedVector t0 = match_level(es0, level_reference, 0.0);
    const Ket u0 = t0.ket;
    double min_gap = t0.gap;

    // Consistency spot-checks: the transported vector must stay an eigenvector.
    for (double frac : {0.0, 1.0 / 3.0, 2.0 / 3.0}) {
        const double phi = kTwoPi * frac;
        const Ket u = transporter(phi) * u0;
        const ComplexMatrix h = h_family(phi);
        const Complex e = u.dot(h * u);
        const double res = (h * u - e * u).norm();
        if (res > 1e-8 * std::max(1.0, inf_norm(h))) {
            throw GapCollapse("transported vector is not an eigenvector at phi = " +
                              std::to_string(phi));
        }
    }

    double sum = 0.0;
    Ket prev = u0;
    for (int k = 1; k <= spec.steps; ++k) {
        const double phi = kTwoPi * k / spec.steps;
        const Ket u = transporter(phi) * u0;
        sum += step_arg(prev, u, phi);
        prev = u;
    }
    return holo_from_total(-sum, min_gap);
}

HoloResult wilson_loop_phase(const ModelParams& params, int n, Level level,
                             const LoopSpec& spec, int cutoff) {
    check_steps(spec.steps);
    const SectorNumerics sec = sector_numerics(params, n, level.sector(), cutoff);
    if (sec.splitting <= kGapFloor) {
        throw GapCollapse("sector gap " + std::to_string(sec.splitting) + " below 1e-8");
    }
    const Ket u0 = level.upper_branch() ? sec.upper : sec.lower;
    const RealVector nvec = photon_numbers(cutoff);

    if (spec.continuation == Continuation::overlap_matched) {
        const ComplexMatrix h = build_hamiltonian(params, cutoff);
        const auto family = [&h, &nvec](double phi) {
            ComplexMatrix out(h.rows(), h.cols());
            for (Eigen::Index r = 0; r < h.rows(); ++r) {
                for (Eigen::Index c = 0; c < h.cols(); ++c) {
                    out(r, c) =
                        h(r, c) * std::polar(1.0, -phi * (nvec(r) - nvec(c)));
                }
            }
            return out;
        };
        const EigenvectorPath path = eigenvector_path(family, u0, spec.steps);
        const double reduced = holonomy_phase(path.kets);
        return HoloResult{reduced, reduced, 0, path.min_gap};
    }

    double sum = 0.0;
    Ket prev = u0;
    for (int k = 1; k <= spec.steps; ++k) {
        const double phi = kTwoPi * k / spec.steps;
        const Ket u = apply_phase_diag(nvec, phi, u0);
        sum += step_arg(prev, u, phi);
        prev = u;
    }
    return holo_from_total(-sum, sec.splitting);
}

HoloResult connection_integral(const ModelParams& params, int n, Level level,
                               const LoopSpec& spec, int cutoff) {
    check_steps(spec.steps);
    const SectorNumerics sec = sector_numerics(params, n, level.sector(), cutoff);
    if (sec.splitting <= kGapFloor) {
        throw GapCollapse("sector gap " + std::to_string(sec.splitting) + " below 1e-8");
    }
    const Ket u0 = level.upper_branch() ? sec.upper : sec.lower;
    const RealVector nvec = photon_numbers(cutoff);

    // Midpoint rule for Im<u|du>: the increment over [phi_k, phi_{k+1}] is
    // resolved through the half-step state, second order in the step size.
    double sum = 0.0;
    Ket left = u0;
    for (int k = 0; k < spec.steps; ++k) {
        const double phi_mid = kTwoPi * (k + 0.5) / spec.steps;
        const double phi_right = kTwoPi * (k + 1.0) / spec.steps;
        const Ket mid = apply_phase_diag(nvec, phi_mid, u0);
        const Ket right = apply_phase_diag(nvec, phi_right, u0);
        sum += step_arg(left, mid, phi_mid);
        sum += step_arg(mid, right, phi_right);
        left = right;
    }
    return holo_from_total(-sum, sec.splitting);
}

HoloResult two_mode_loop_phase(const ModelParams& params, int n, int nprime, double theta,
                               Level level, const LoopSpec& spec, int cutoff) {
    check_steps(spec.steps);
    if (n < 0 || nprime < 0) {
        throw SectorOutOfRange("two_mode_loop_phase: photon numbers must be >= 0");
    }
    // The rotation mixes whole total-photon-number blocks; both populated
    // blocks (n+n' and n+n'+1) must fit under the cutoff.
    if (n + nprime + 2 > cutoff) {
        throw CutoffTooSmall("two_mode_loop_phase: need cutoff >= n + n' + 2 = " +
                             std::to_string(n + nprime + 2));
    }

    const SectorNumerics sec = sector_numerics(params, n, level.sector(), cutoff);
    if (sec.splitting <= kGapFloor) {
        throw GapCollapse("sector gap " + std::to_string(sec.splitting) + " below 1e-8");
    }

    const int fock2 = cutoff * cutoff;
    const int dim = two_mode_basis_dim(cutoff);
    const Spin y2 = level.sector();
    const Ket& sector_vec = level.upper_branch() ? sec.upper : sec.lower;

    Ket u0 = Ket::Zero(dim);
    u0(two_mode_basis_index(Spin::e, y2, n, nprime, cutoff)) =
        sector_vec(basis_index(Spin::e, y2, n, cutoff));
    u0(two_mode_basis_index(Spin::g, y2, n + 1, nprime, cutoff)) =
        sector_vec(basis_index(Spin::g, y2, n + 1, cutoff));

    // Sanity: u0 must be an eigenstate of the untransformed two-mode model.
    {
        const ComplexMatrix h2q = build_two_mode_hamiltonian(params, cutoff);
        const double energy =
            (level.upper_branch() ? sec.e_upper : sec.e_lower) + params.nu * nprime;
        const double res = (h2q * u0 - energy * u0).norm();
        if (res > 1e-8 * std::max(1.0, inf_norm(h2q))) {
            throw GapCollapse("two-mode eigenstate residual " + std::to_string(res));
        }
    }

    const ComplexMatrix jy = schwinger_jy(cutoff);
    ComplexMatrix jy_emb = ComplexMatrix::Zero(dim, dim);
    for (int block = 0; block < 4; ++block) {
        jy_emb.block(block * fock2, block * fock2, fock2, fock2) = jy;
    }
    const Ket w = expm_unitary(jy_emb, theta) * u0;

    RealVector jz_full(dim);
    for (int block = 0; block < 4; ++block) {
        for (int na = 0; na < cutoff; ++na) {
            for (int nb = 0; nb < cutoff; ++nb) {
                jz_full(block * fock2 + na * cutoff + nb) = 0.5 * (na - nb);
            }
        }
    }

    double sum = 0.0;
    Ket prev = w;
    for (int k = 1; k <= spec.steps; ++k) {
        const double phi = kTwoPi * k / spec.steps;
        const Ket u = apply_phase_diag(jz_full, phi, w);
        sum += step_arg(prev, u, phi);
        prev = u;
    }
    return holo_from_total(-sum, sec.splitting);
}

HoloResult mixed_phase_from_family(const DensityFamily& rho_family, int steps,
                                   double weight_floor) {
    check_steps(steps);

    struct Branch {
        Ket first;  // vector at phi = 0 (closure target)
        Ket prev;
        double weight0 = 0.0;
        double weight = 0.0;
        Complex z = Complex(1.0, 0.0);
    };

    auto decompose = [&](double phi) {
        const ComplexMatrix rho = rho_family(phi);
        if (rho.rows() != rho.cols()) {
            throw InvalidDensityMatrix("mixed phase: family value not square");
        }
        if (hermiticity_defect(rho) > 1e-8 ||
            std::abs(rho.trace() - Complex(1.0, 0.0)) > 1e-8) {
            throw InvalidDensityMatrix("mixed phase: family value is not a density matrix");
        }
        return eigh(rho);
    };

    const Eigensystem es0 = decompose(0.0);
    std::vector<Branch> branches;
    for (int j = es0.dim() - 1; j >= 0; --j) { // descending weight
        if (es0.values(j) > weight_floor) {
            Branch b;
            b.first = es0.vectors.col(j);
            b.prev = b.first;
            b.weight0 = es0.values(j);
            b.weight = es0.values(j);
            branches.push_back(std::move(b));
        }
    }
    if (branches.empty()) {
        throw InvalidDensityMatrix("mixed phase: no spectral branch above the weight floor");
    }

    auto weight_gap = [&](const Eigensystem& es) {
        double gap = std::numeric_limits<double>::infinity();
        double below = -std::numeric_limits<double>::infinity();
        for (int j = 0; j < es.dim(); ++j) {
            if (es.values(j) <= weight_floor) {
                below = std::max(below, es.values(j));
            }
        }
        std::vector<double> sig;
        for (int j = 0; j < es.dim(); ++j) {
            if (es.values(j) > weight_floor) sig.push_back(es.values(j));
        }
        for (size_t j = 1; j < sig.size(); ++j) gap = std::min(gap, sig[j] - sig[j - 1]);
        if (std::isfinite(below) && !sig.empty()) gap = std::min(gap, sig.front() - below);
        return gap;
    };

    double min_gap = weight_gap(es0);

    constexpr double kWeightTol = 1e-12;
    for (int k = 1; k < steps; ++k) {
        const double phi = kTwoPi * k / steps;
        const Eigensystem es = decompose(phi);

        std::vector<int> candidates;
        for (int j = 0; j < es.dim(); ++j) {
            if (es.values(j) > weight_floor) candidates.push_back(j);
        }
        if (candidates.size() != branches.size()) {
            throw RankChange("significant rank changed from " +
                             std::to_string(branches.size()) + " to " +
                             std::to_string(candidates.size()) + " at phi = " +
                             std::to_string(phi));
        }

        std::vector<bool> used(candidates.size(), false);
        std::vector<double> new_weights(branches.size(), 0.0);
        for (size_t i = 0; i < branches.size(); ++i) {
            int best = -1;
            double best_ovl = -1.0;
            for (size_t c = 0; c < candidates.size(); ++c) {
                if (used[c]) continue;
                const double ovl =
                    std::abs(es.vectors.col(candidates[c]).dot(branches[i].prev));
                if (ovl > best_ovl) {
                    best_ovl = ovl;
                    best = static_cast<int>(c);
                }
            }
            if (best < 0 || best_ovl < kMatchFloor) {
                throw RankChange("branch continuation lost at phi = " + std::to_string(phi));
            }
            used[static_cast<size_t>(best)] = true;
            const Ket v = es.vectors.col(candidates[static_cast<size_t>(best)]);
            branches[i].z *= branches[i].prev.dot(v);
            branches[i].prev = v;
            new_weights[i] = es.values(candidates[static_cast<size_t>(best)]);
        }

        // A crossing shows up as a reversal against the phi = 0 ordering.
        for (size_t i = 0; i < branches.size(); ++i) {
            for (size_t j = i + 1; j < branches.size(); ++j) {
                const double initial = branches[i].weight0 - branches[j].weight0;
                const double now = new_weights[i] - new_weights[j];
                if (std::abs(initial) > kWeightTol && std::abs(now) > kWeightTol &&
                    std::signbit(initial) != std::signbit(now)) {
                    throw RankChange("branch eigenvalues crossed near phi = " +
                                     std::to_string(phi));
                }
            }
        }
        for (size_t i = 0; i < branches.size(); ++i) branches[i].weight = new_weights[i];
        min_gap = std::min(min_gap, weight_gap(es));
    }

    Complex avg(0.0, 0.0);
    for (auto& b : branches) {
        b.z *= b.prev.dot(b.first); // close the loop
        avg += b.weight0 * b.z;
    }
    const double reduced = wrap_to_2pi(-std::arg(avg));
    return HoloResult{reduced, reduced, 0, min_gap};
}

HoloResult mixed_phase_numeric(const ModelParams& params, int n, Level level,
                               const LoopSpec& spec, int cutoff) {
    check_steps(spec.steps);
    const SectorNumerics sec = sector_numerics(params, n, level.sector(), cutoff);
    if (sec.splitting <= kGapFloor) {
        throw GapCollapse("sector gap " + std::to_string(sec.splitting) + " below 1e-8");
    }
    const Ket u0 = level.upper_branch() ? sec.upper : sec.lower;
    const RealVector nvec = photon_numbers(cutoff);
    const std::vector<int> dims{2, 2, cutoff};
    const std::vector<int> keep{0, 2}; // keep spin 1 and the field

    const auto family = [&](double phi) {
        const Ket u = apply_phase_diag(nvec, phi, u0);
        const ComplexMatrix rho = u * u.adjoint();
        return partial_trace(rho, dims, keep);
    };

    HoloResult result = mixed_phase_from_family(family, spec.steps);
    result.min_gap = sec.splitting;
    return result;
}

Eigen::MatrixXd adiabatic_ratio_pairs(const ModelParams& params, int n, double omega_prec,
                                      double fd_step, int cutoff) {
    if (!(fd_step > 0.0) || fd_step > 1e-2) {
        throw std::invalid_argument("adiabatic_ratio_pairs: fd_step must be in (0, 1e-2]");
    }
    const SectorNumerics alpha = sector_numerics(params, n, Spin::e, cutoff);
    const SectorNumerics beta = sector_numerics(params, n, Spin::g, cutoff);
    for (const SectorNumerics* sec : {&alpha, &beta}) {
        if (sec->splitting < 1e-14 * (1.0 + std::abs(sec->e_upper))) {
            throw DegenerateSector("adiabatic_ratio_pairs: zero-splitting sector");
        }
    }

    const Ket states[4] = {alpha.upper, alpha.lower, beta.upper, beta.lower};
    const double energies[4] = {alpha.e_upper, alpha.e_lower, beta.e_upper, beta.e_lower};
    const RealVector nvec = photon_numbers(cutoff);

    Eigen::MatrixXd ratios = Eigen::MatrixXd::Zero(4, 4);
    for (int p = 0; p < 4; ++p) {
        for (int q = 0; q < 4; ++q) {
            if (p == q) continue;
            const Ket forward = apply_phase_diag(nvec, fd_step, states[q]);
            const Ket backward = apply_phase_diag(nvec, -fd_step, states[q]);
            const Complex deriv = states[p].dot((forward - backward) / (2.0 * fd_step));
            const double num = omega_prec * std::abs(deriv);
            if (num == 0.0) continue; // cross-sector blocks are exactly orthogonal
            ratios(p, q) = num / std::abs(energies[p] - energies[q]);
        }
    }
    return ratios;
}

double adiabatic_ratio_numeric(const ModelParams& params, int n, double omega_prec,
                               double fd_step, int cutoff) {
    return adiabatic_ratio_pairs(params, n, omega_prec, fd_step, cutoff).maxCoeff();
}

} // namespace jcphase

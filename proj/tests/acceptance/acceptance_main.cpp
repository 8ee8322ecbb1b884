// Acceptance suite: every release criterion with its tolerance pinned in
// code. Each criterion prints one PASS/FAIL line; the exit status is the
// number of failed criteria.

#include "jcphase/analytic.hpp"
#include "jcphase/commands.hpp"
#include "jcphase/geomphase.hpp"
#include "jcphase/linalg.hpp"
#include "jcphase/model.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace jcphase;

namespace {

struct Checker {
    int failures = 0;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            if (detail.empty()) detail = what;
        }
    }
};

const std::vector<double> kDetunings{-0.5, 0.0, 0.5};
const std::vector<double> kCouplings{0.0, 1.0, 4.0};
const std::vector<int> kPhotons{0, 1, 2};

ModelParams grid_params(double detuning, double j) {
    return ModelParams{1.0 + detuning, 1.0, 1.0, j};
}

// --- criterion 1: analytic sector eigenvalues vs the eigh oracle ----------

void criterion_eigenvalues(Checker& check) {
    for (double det : kDetunings) {
        for (double j : kCouplings) {
            const ModelParams p = grid_params(det, j);
            const ComplexMatrix h = build_hamiltonian(p);
            for (int n : kPhotons) {
                for (int idx = 1; idx <= 4; ++idx) {
                    const Level level(idx);
                    const Eigensystem block = eigh(extract_sector(h, level.sector_label(n)));
                    const double numeric =
                        level.upper_branch() ? block.values(1) : block.values(0);
                    const double analytic = level_energy(p, n, level);
                    check.require(std::abs(analytic - numeric) < 1e-10,
                                  "eigenvalue mismatch at det=" + std::to_string(det) +
                                      " J=" + std::to_string(j) + " n=" + std::to_string(n) +
                                      " level=" + std::to_string(idx));
                }
            }
        }
    }
}

// --- criterion 2: Berry phases vs Wilson loops, winding recovery ----------

void criterion_berry_oracle(Checker& check) {
    const LoopSpec overlap{2000, Continuation::overlap_matched, std::nullopt};
    for (double det : kDetunings) {
        for (double j : kCouplings) {
            const ModelParams p = grid_params(det, j);
            for (int n : kPhotons) {
                for (int idx = 1; idx <= 4; ++idx) {
                    const Level level(idx);
                    const double analytic = berry_phase(p, n, level).reduced;
                    const HoloResult holo = wilson_loop_phase(p, n, level, overlap);
                    check.require(circle_distance(analytic, holo.reduced_phase) < 1e-6,
                                  "Wilson mismatch at det=" + std::to_string(det) +
                                      " J=" + std::to_string(j) + " n=" + std::to_string(n) +
                                      " level=" + std::to_string(idx));
                }
            }
        }
    }

    const LoopSpec natural{2000, Continuation::natural_gauge, std::nullopt};
    const ModelParams res = grid_params(0.0, 0.0);
    for (int n = 0; n <= 3; ++n) {
        for (int idx : {1, 3}) {
            const HoloResult holo = wilson_loop_phase(res, n, Level(idx), natural);
            check.require(holo.winding == n,
                          "winding " + std::to_string(holo.winding) + " != n = " +
                              std::to_string(n) + " for level " + std::to_string(idx));
        }
    }
}

// --- criterion 3: vacuum-induced phase ------------------------------------

void criterion_vacuum(Checker& check) {
    const ModelParams res = grid_params(0.0, 0.0);
    check.require(std::abs(berry_phase(res, 0, Level(1)).reduced - kPi) < 1e-12,
                  "analytic vacuum phase differs from pi");
    const LoopSpec overlap{2000, Continuation::overlap_matched, std::nullopt};
    const HoloResult holo = wilson_loop_phase(res, 0, Level(1), overlap);
    check.require(std::abs(holo.reduced_phase - kPi) < 1e-6, "numeric vacuum phase not pi");
}

// --- criterion 4: strong-coupling suppression ------------------------------

void criterion_strong_coupling(Checker& check) {
    const auto distance_to_zero = [](double j, int idx) {
        const ModelParams p = grid_params(0.0, j);
        return circle_distance(berry_phase(p, 0, Level(idx)).reduced, 0.0);
    };
    for (int idx : {1, 3}) {
        check.require(distance_to_zero(100.0, idx) < 0.02,
                      "level " + std::to_string(idx) + " phase not suppressed at J = 100");
        double prev = distance_to_zero(1.0, idx);
        for (double j : {4.0, 16.0, 100.0}) {
            const double cur = distance_to_zero(j, idx);
            check.require(cur < prev, "phase not monotone at J = " + std::to_string(j));
            prev = cur;
        }
    }
    const LoopSpec overlap{2000, Continuation::overlap_matched, std::nullopt};
    const HoloResult holo = wilson_loop_phase(grid_params(0.0, 100.0), 0, Level(1), overlap);
    check.require(circle_distance(holo.reduced_phase, 0.0) < 0.02,
                  "numeric phase not suppressed at J = 100");
}

// --- criterion 5: Figure 1 reproduction ------------------------------------

void criterion_figure1(Checker& check) {
    const OutputTable table =
        cmd_sweep_figure1(SweepSpec::parse("jc:0:5:51"), {0, 1, 2, 3}, ModelParams{});
    for (const auto& row : table.rows) {
        const double j = std::get<double>(row[0]);
        const double n = static_cast<double>(std::get<long long>(row[1]));
        const double cos_alpha = std::get<double>(row[2]);
        const double identity = j / std::sqrt(j * j + (n + 1.0));
        check.require(std::abs(cos_alpha - identity) < 1e-12,
                      "cos_alpha identity fails at J=" + std::to_string(j));
    }
    const double spot = sector_cos(ModelParams{1.0, 1.0, 1.0, 1.0}, SectorLabel{Spin::e, 0});
    check.require(std::abs(spot - 0.707107) < 1e-6, "spot value at J = lambda");
    for (double j : {0.5, 2.0, 5.0}) {
        const ModelParams p{1.0, 1.0, 1.0, j};
        check.require(sector_cos(p, SectorLabel{Spin::e, 3}) <
                          sector_cos(p, SectorLabel{Spin::e, 0}),
                      "curve ordering in n fails at J=" + std::to_string(j));
    }
}

// --- criterion 6: two-mode phases -------------------------------------------

void criterion_two_mode(Checker& check) {
    const LoopSpec spec{4000, Continuation::natural_gauge, std::nullopt};
    for (double theta : {0.0, kPi / 3.0, kPi / 2.0}) {
        for (int n : {0, 1}) {
            for (int nprime : {0, 1}) {
                for (double j : {0.0, 1.0}) {
                    const ModelParams p = grid_params(0.0, j);
                    const Level level(1);
                    const double analytic = two_mode_berry_phase(p, n, nprime, theta, level);
                    const HoloResult holo =
                        two_mode_loop_phase(p, n, nprime, theta, level, spec);
                    check.require(circle_distance(analytic, holo.total_phase) < 1e-5,
                                  "two-mode mismatch at theta=" + std::to_string(theta) +
                                      " n=" + std::to_string(n) + " n'=" +
                                      std::to_string(nprime) + " J=" + std::to_string(j));
                    if (theta == kPi / 2.0) {
                        check.require(std::abs(holo.total_phase) < 1e-6,
                                      "theta = pi/2 phase not zero");
                    }
                }
            }
        }
    }
    // Strong-coupling limit: levels 1, 2 tend to {0, pi cos(theta)}.
    const ModelParams strong = grid_params(0.0, 100.0);
    for (double theta : {0.0, kPi / 3.0}) {
        const HoloResult l1 = two_mode_loop_phase(strong, 0, 0, theta, Level(1), spec);
        const HoloResult l2 = two_mode_loop_phase(strong, 0, 0, theta, Level(2), spec);
        check.require(circle_distance(l1.total_phase, 0.0) < 0.02,
                      "level 1 two-mode phase not suppressed at J = 100");
        check.require(circle_distance(l2.total_phase, kPi * std::cos(theta)) < 0.02,
                      "level 2 two-mode phase far from pi cos(theta) at J = 100");
    }
}

// --- criterion 7: mixed-state phases ----------------------------------------

void criterion_mixed(Checker& check) {
    const LoopSpec spec{2000, Continuation::natural_gauge, std::nullopt};
    for (double j : {0.0, 0.25, 1.0, 4.0}) {
        for (double det : kDetunings) {
            const ModelParams p = grid_params(det, j);
            for (int n : kPhotons) {
                for (int idx = 1; idx <= 4; ++idx) {
                    const double paper = mixed_state_phase(p, n, Level(idx)).total;
                    const double numeric =
                        mixed_phase_numeric(p, n, Level(idx), spec).reduced_phase;
                    const double dist = std::min(circle_distance(paper, numeric),
                                                 circle_distance(paper, -numeric));
                    check.require(dist < 1e-5,
                                  "mixed mismatch at J=" + std::to_string(j) + " det=" +
                                      std::to_string(det) + " n=" + std::to_string(n) +
                                      " level=" + std::to_string(idx));
                }
                const double sum = mixed_state_phase(p, n, Level(1)).total +
                                   mixed_state_phase(p, n, Level(2)).total;
                check.require(std::abs(sum - kTwoPi) < 1e-12, "mixed sum rule violated");
            }
        }
    }
}

// --- criterion 8: adiabaticity ----------------------------------------------

void criterion_adiabatic(Checker& check) {
    const double omega_prec = 0.01;
    for (double det : kDetunings) {
        for (double j : kCouplings) {
            const ModelParams p = grid_params(det, j);
            for (int n : kPhotons) {
                const double bound = adiabatic_ratio_bound(p, n, omega_prec);
                const double numeric = adiabatic_ratio_numeric(p, n, omega_prec, 1e-4);
                check.require(std::abs(bound - numeric) < 1e-6,
                              "numeric ratio mismatch at det=" + std::to_string(det) +
                                  " J=" + std::to_string(j) + " n=" + std::to_string(n));
                const double resonant = omega_prec / (4.0 * std::sqrt(n + 1.0));
                check.require(bound <= resonant + 1e-15,
                              "ratio exceeds the resonant J = 0 bound");
            }
        }
    }
    for (int n : kPhotons) {
        const double bound = adiabatic_ratio_bound(grid_params(0.0, 0.0), n, omega_prec);
        check.require(std::abs(bound - omega_prec / (4.0 * std::sqrt(n + 1.0))) < 1e-9,
                      "resonant closed form violated at n = " + std::to_string(n));
    }
    for (double j : {0.5, 1.0, 2.0, 4.0, 16.0, 100.0}) {
        check.require(adiabatic_ratio_bound(grid_params(0.0, j), 0, omega_prec) <=
                          omega_prec / 4.0 + 1e-15,
                      "J sweep exceeds the J = 0 resonant value");
    }
}

// --- criterion 9: property suite ---------------------------------------------

void criterion_properties(Checker& check) {
    // Gauge invariance of the reduced phase under random per-step rephasing.
    {
        const ModelParams p{1.3, 1.0, 1.0, 0.7};
        const ComplexMatrix h = build_hamiltonian(p, 6);
        const HamiltonianFamily family = [&h](double phi) {
            const ComplexMatrix u = phase_shift_unitary(phi, 6);
            return ComplexMatrix(u * h * u.adjoint());
        };
        EigenvectorPath path = eigenvector_path(family, numeric_eigenstate(p, 1, Level(1), 6), 300);
        const double before = holonomy_phase(path.kets);
        std::mt19937_64 rng(2024);
        std::uniform_real_distribution<double> phase(0.0, kTwoPi);
        for (Ket& ket : path.kets) ket *= std::polar(1.0, phase(rng));
        check.require(circle_distance(holonomy_phase(path.kets), before) < 1e-9,
                      "reduced phase not gauge invariant");
    }

    // Loop reversal negates the accumulated total.
    {
        const ModelParams p{1.2, 1.0, 1.0, 0.7};
        const int cutoff = 6;
        const LoopSpec spec{600, Continuation::natural_gauge, std::nullopt};
        const double forward = wilson_loop_phase(p, 1, Level(1), spec, cutoff).total_phase;
        const ComplexMatrix h = build_hamiltonian(p, cutoff);
        const HamiltonianFamily rev_family = [&h, cutoff](double phi) {
            const ComplexMatrix u = phase_shift_unitary(kTwoPi - phi, cutoff);
            return ComplexMatrix(u * h * u.adjoint());
        };
        const Transporter rev_transport = [cutoff](double phi) {
            return phase_shift_unitary(kTwoPi - phi, cutoff);
        };
        const double backward =
            wilson_loop_phase(rev_family, numeric_eigenstate(p, 1, Level(1), cutoff), spec,
                              rev_transport)
                .total_phase;
        check.require(std::abs(forward + backward) < 1e-9, "loop reversal not antisymmetric");
    }

    // Phase-sum rule (4n+2) pi on the grid.
    for (double det : kDetunings) {
        for (double j : kCouplings) {
            const ModelParams p = grid_params(det, j);
            for (int n : kPhotons) {
                const double s12 =
                    berry_phase(p, n, Level(1)).total + berry_phase(p, n, Level(2)).total;
                const double s34 =
                    berry_phase(p, n, Level(3)).total + berry_phase(p, n, Level(4)).total;
                check.require(std::abs(s12 - (4.0 * n + 2.0) * kPi) < 1e-12 &&
                                  std::abs(s34 - (4.0 * n + 2.0) * kPi) < 1e-12,
                              "phase-sum rule violated");
            }
        }
    }

    // Conservation commutators on random parameters.
    {
        std::mt19937_64 rng(4242);
        std::uniform_real_distribution<double> dist(-2.0, 2.0);
        const int cutoff = 5;
        ComplexMatrix n_exc = ComplexMatrix::Zero(basis_dim(cutoff), basis_dim(cutoff));
        ComplexMatrix s2z = ComplexMatrix::Zero(basis_dim(cutoff), basis_dim(cutoff));
        for (Spin s1 : {Spin::e, Spin::g}) {
            for (Spin s2 : {Spin::e, Spin::g}) {
                for (int n = 0; n < cutoff; ++n) {
                    const int i = basis_index(s1, s2, n, cutoff);
                    n_exc(i, i) = n + (s1 == Spin::e ? 1.0 : 0.0);
                    s2z(i, i) = s2 == Spin::e ? 1.0 : -1.0;
                }
            }
        }
        for (int trial = 0; trial < 20; ++trial) {
            const ModelParams p{dist(rng), dist(rng), std::abs(dist(rng)), dist(rng)};
            const ComplexMatrix h = build_hamiltonian(p, cutoff);
            check.require(inf_norm(h * n_exc - n_exc * h) < 1e-12, "[H, N_exc] != 0");
            check.require(inf_norm(h * s2z - s2z * h) < 1e-12, "[H, s2z] != 0");
        }
    }

    // eigh reconstruction on 200 random Hermitian matrices.
    {
        std::mt19937_64 rng(777);
        std::normal_distribution<double> dist(0.0, 1.0);
        std::uniform_int_distribution<int> dim_dist(2, 16);
        for (int trial = 0; trial < 200; ++trial) {
            const int dim = dim_dist(rng);
            ComplexMatrix a(dim, dim);
            for (int r = 0; r < dim; ++r) {
                for (int c = 0; c < dim; ++c) a(r, c) = Complex(dist(rng), dist(rng));
            }
            const ComplexMatrix m = (a + a.adjoint()) / 2.0;
            const Eigensystem es = eigh(m);
            const ComplexMatrix rebuilt =
                es.vectors * es.values.cast<Complex>().asDiagonal() * es.vectors.adjoint();
            check.require(inf_norm(m - rebuilt) < 1e-9 * inf_norm(m),
                          "eigh reconstruction failed");
            check.require(inf_norm(es.vectors.adjoint() * es.vectors -
                                   ComplexMatrix::Identity(dim, dim)) < 1e-10,
                          "eigh vectors not orthonormal");
        }
    }
}

struct Criterion {
    int id;
    const char* name;
    double time_limit_s; // 0 = no stated limit
    std::function<void(Checker&)> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "eigenvalue oracle (analytic vs eigh, 3x3x3x4 grid)", 1.0, criterion_eigenvalues},
        {2, "Berry-phase oracle (Wilson loops + winding recovery)", 30.0,
         criterion_berry_oracle},
        {3, "vacuum-induced phase pi", 0.0, criterion_vacuum},
        {4, "strong-coupling suppression at J = 100 lambda", 0.0, criterion_strong_coupling},
        {5, "figure-1 reproduction (cos alpha identity)", 0.0, criterion_figure1},
        {6, "two-mode phases vs transported loops", 180.0, criterion_two_mode},
        {7, "mixed-state phases (mod 2pi up to sign) + sum rule", 0.0, criterion_mixed},
        {8, "adiabaticity ratios and resonant bound", 0.0, criterion_adiabatic},
        {9, "property suite (gauge, reversal, sums, commutators, eigh)", 60.0,
         criterion_properties},
    };

    int failed = 0;
    for (const Criterion& criterion : criteria) {
        Checker check;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.run(check);
        } catch (const std::exception& e) {
            check.require(false, std::string("exception: ") + e.what());
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criterion.time_limit_s > 0.0 && elapsed > criterion.time_limit_s) {
            check.require(false, "runtime " + std::to_string(elapsed) + " s over the " +
                                     std::to_string(criterion.time_limit_s) + " s limit");
        }
        if (check.failures == 0) {
            std::printf("[PASS] criterion %d: %s (%.2f s)\n", criterion.id, criterion.name,
                        elapsed);
        } else {
            ++failed;
            std::printf("[FAIL] criterion %d: %s (%.2f s) - %d check(s) failed; first: %s\n",
                        criterion.id, criterion.name, elapsed, check.failures,
                        check.detail.c_str());
        }
    }
    if (failed == 0) {
        std::printf("all 9 acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria FAILED\n", failed);
    }
    return failed;
}

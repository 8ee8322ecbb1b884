#include "jcphase/commands.hpp"

#include "jcphase/analytic.hpp"
#include "jcphase/geomphase.hpp"
#include "jcphase/linalg.hpp"

#include <cmath>

namespace jcphase {

namespace {

// Tolerance for the mixed-state mod-2pi-up-to-sign match flag.
constexpr double kMatchTol = 1e-4;

long long as_int(int v) { return static_cast<long long>(v); }

} // namespace

OutputTable cmd_spectrum(const ModelParams& params, int n, int cutoff) {
    const ComplexMatrix h = build_hamiltonian(params, cutoff);
    OutputTable table;
    table.columns = {"level", "E_analytic", "E_numeric", "abs_diff"};
    for (int idx = 1; idx <= 4; ++idx) {
        const Level level(idx);
        const double analytic = level_energy(params, n, level);
        const Eigensystem block = eigh(extract_sector(h, level.sector_label(n)));
        const double numeric = level.upper_branch() ? block.values(1) : block.values(0);
        table.add_row({as_int(idx), analytic, numeric, std::abs(analytic - numeric)});
    }
    return table;
}

OutputTable cmd_berry(const ModelParams& params, int n, Level level, int steps,
                      BerryMode mode, int cutoff) {
    const PhaseResult analytic = berry_phase(params, n, level);

    OutputTable table;
    table.columns = {"level",   "method",  "gamma_analytic_total", "gamma_numeric_total",
                     "gamma_reduced", "winding", "min_gap",        "abs_diff"};

    const auto add = [&](int method, const HoloResult& holo) {
        table.add_row({as_int(level.index()), as_int(method), analytic.total,
                       holo.total_phase, holo.reduced_phase, as_int(holo.winding),
                       holo.min_gap, std::abs(analytic.total - holo.total_phase)});
    };

    if (mode == BerryMode::analytic) {
        const double gap = sector_splitting(params, level.sector_label(n));
        add(0, HoloResult{analytic.reduced, analytic.total, analytic.winding, gap});
        return table;
    }

    const LoopSpec spec{steps, Continuation::natural_gauge, std::nullopt};
    if (mode == BerryMode::wilson || mode == BerryMode::all) {
        add(1, wilson_loop_phase(params, n, level, spec, cutoff));
    }
    if (mode == BerryMode::connection || mode == BerryMode::all) {
        add(2, connection_integral(params, n, level, spec, cutoff));
    }
    return table;
}

OutputTable cmd_sweep_figure1(const SweepSpec& sweep, const std::vector<int>& n_list,
                              const ModelParams& fixed) {
    if (sweep.variable != SweepSpec::Variable::j_c) {
        throw std::invalid_argument("sweep-figure1 sweeps the spin-spin coupling; "
                                    "use a 'jc:start:stop:count' sweep");
    }
    if (n_list.empty()) {
        throw std::invalid_argument("sweep-figure1: need at least one photon number");
    }
    for (int n : n_list) {
        if (n < 0) throw std::invalid_argument("sweep-figure1: photon numbers must be >= 0");
    }

    OutputTable table;
    table.columns = {"J", "n", "cos_alpha", "cos_beta"};
    for (double j : sweep.grid()) {
        ModelParams p = fixed;
        p.j_c = j;
        for (int n : n_list) {
            table.add_row({j, as_int(n), sector_cos(p, SectorLabel{Spin::e, n}),
                           sector_cos(p, SectorLabel{Spin::g, n})});
        }
    }
    return table;
}

OutputTable cmd_two_mode(const ModelParams& params, int n, int nprime, double theta,
                         Level level, int steps, int cutoff) {
    const double analytic = two_mode_berry_phase(params, n, nprime, theta, level);
    const LoopSpec spec{steps, Continuation::natural_gauge, theta};
    const HoloResult holo = two_mode_loop_phase(params, n, nprime, theta, level, spec, cutoff);

    OutputTable table;
    table.columns = {"level", "gamma_analytic", "gamma_numeric_reduced", "abs_diff_mod_2pi"};
    table.add_row({as_int(level.index()), analytic, holo.reduced_phase,
                   circle_distance(analytic, holo.total_phase)});
    return table;
}

OutputTable cmd_mixed(const ModelParams& params, int n, Level level, int steps, int cutoff) {
    const PhaseResult paper = mixed_state_phase(params, n, level);
    const LoopSpec spec{steps, Continuation::natural_gauge, std::nullopt};
    const HoloResult holo = mixed_phase_numeric(params, n, level, spec, cutoff);

    const double direct = circle_distance(paper.total, holo.reduced_phase);
    const double flipped = circle_distance(paper.total, -holo.reduced_phase);
    const bool match = std::min(direct, flipped) < kMatchTol;

    OutputTable table;
    table.columns = {"level", "gamma_paper", "gamma_numeric", "match_mod_2pi_up_to_sign"};
    table.add_row({as_int(level.index()), paper.total, holo.reduced_phase,
                   as_int(match ? 1 : 0)});
    return table;
}

OutputTable cmd_adiabatic(const ModelParams& params, int n, double omega_prec,
                          double fd_step, int cutoff) {
    const double analytic = adiabatic_ratio_bound(params, n, omega_prec);
    const double numeric = adiabatic_ratio_numeric(params, n, omega_prec, fd_step, cutoff);
    const double resonant =
        omega_prec / (4.0 * params.lambda_c * std::sqrt(static_cast<double>(n + 1)));

    OutputTable table;
    table.columns = {"ratio_analytic", "ratio_numeric", "resonant_bound", "satisfied"};
    table.add_row({analytic, numeric, resonant, as_int(analytic < 0.1 ? 1 : 0)});
    return table;
}

} // namespace jcphase

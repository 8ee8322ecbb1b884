#pragma once

#include "jcphase/records.hpp"
#include "jcphase/types.hpp"
#include "jcphase/model.hpp"

#include <vector>

namespace jcphase {

// Table builders behind the CLI subcommands. Each returns a fixed column
// set; identical arguments always produce identical tables.

// {level, E_analytic, E_numeric, abs_diff} for the four levels at photon
// number n: closed-form sector eigenvalues against eigh of the extracted
// block of the numerically built Hamiltonian.
OutputTable cmd_spectrum(const ModelParams& params, int n, int cutoff = kDefaultCutoff);

enum class BerryMode { analytic, wilson, connection, all };

// {level, method, gamma_analytic_total, gamma_numeric_total, gamma_reduced,
//  winding, min_gap, abs_diff}. method: 0 analytic, 1 wilson, 2 connection;
// mode = all emits one row per numeric method.
OutputTable cmd_berry(const ModelParams& params, int n, Level level, int steps,
                      BerryMode mode, int cutoff = kDefaultCutoff);

// {J, n, cos_alpha, cos_beta} over a jc sweep for each requested photon
// number. Throws std::invalid_argument unless the sweep variable is jc.
OutputTable cmd_sweep_figure1(const SweepSpec& sweep, const std::vector<int>& n_list,
                              const ModelParams& fixed);

// {level, gamma_analytic, gamma_numeric_reduced, abs_diff_mod_2pi}
OutputTable cmd_two_mode(const ModelParams& params, int n, int nprime, double theta,
                         Level level, int steps, int cutoff = kDefaultCutoff);

// {level, gamma_paper, gamma_numeric, match_mod_2pi_up_to_sign}
OutputTable cmd_mixed(const ModelParams& params, int n, Level level, int steps,
                      int cutoff = kDefaultCutoff);

// {ratio_analytic, ratio_numeric, resonant_bound, satisfied}
OutputTable cmd_adiabatic(const ModelParams& params, int n, double omega_prec,
                          double fd_step = 1e-4, int cutoff = kDefaultCutoff);

} // namespace jcphase

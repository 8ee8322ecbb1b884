#include "jcphase/commands.hpp"
#include "jcphase/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

struct CommonOpts {
    jcphase::ModelParams params;
    int cutoff = jcphase::kDefaultCutoff;
    std::string out;
    std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--omega", opts.params.omega, "Spin transition frequency")
        ->capture_default_str();
    cmd->add_option("--nu", opts.params.nu, "Field frequency")->capture_default_str();
    cmd->add_option("--coupling", opts.params.lambda_c, "Spin-field coupling lambda")
        ->capture_default_str();
    cmd->add_option("--jc", opts.params.j_c, "Spin-spin Ising coupling J")
        ->capture_default_str();
    cmd->add_option("--cutoff", opts.cutoff, "Fock-space cutoff")->capture_default_str();
    cmd->add_option("--out", opts.out, "Write the table to FILE instead of stdout");
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

int emit(const jcphase::OutputTable& table, const CommonOpts& opts) {
    const std::string text =
        opts.format == "json" ? jcphase::to_json(table) : jcphase::to_csv(table);
    if (opts.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream file(opts.out, std::ios::binary);
    if (!file) {
        std::cerr << "error: InvalidArgument: cannot open output file '" << opts.out << "'\n";
        return 2;
    }
    file << text;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Geometric phases of two Ising-coupled spins driven by quantized field modes"};
    app.require_subcommand(1);

    CommonOpts opts;
    int n = 0;
    int nprime = 0;
    int level = 1;
    int steps = 2000;
    int two_mode_steps = 4000;
    double theta = 0.0;
    double omega_prec = 0.01;
    double fd_step = 1e-4;
    std::string mode = "wilson";
    std::string sweep_text = "jc:0:5:101";
    std::vector<int> n_list{0, 1, 2, 3};

    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "Closed-form sector eigenvalues against the numeric block");
    add_common(spectrum, opts);
    spectrum->add_option("--n", n, "Photon number of the driven sector")->capture_default_str();

    CLI::App* berry = app.add_subcommand(
        "berry", "Composite-system Berry phase: closed form and loop holonomy");
    add_common(berry, opts);
    berry->add_option("--n", n, "Photon number")->capture_default_str();
    berry->add_option("--level", level, "Eigenstate label 1..4")
        ->check(CLI::Range(1, 4))
        ->capture_default_str();
    berry->add_option("--steps", steps, "Loop discretization steps")->capture_default_str();
    berry->add_option("--mode", mode, "Numeric method")
        ->check(CLI::IsMember({"analytic", "wilson", "connection", "all"}))
        ->capture_default_str();

    CLI::App* figure1 = app.add_subcommand(
        "sweep-figure1", "cos(alpha), cos(beta) against the spin-spin coupling");
    add_common(figure1, opts);
    figure1->add_option("--sweep", sweep_text, "Sweep spec <variable>:<start>:<stop>:<count>")
        ->capture_default_str();
    figure1->add_option("--n", n_list, "Photon numbers (repeatable)")->capture_default_str();

    CLI::App* two_mode = app.add_subcommand(
        "two-mode", "Two-mode driving: phase at fixed polar angle theta");
    add_common(two_mode, opts);
    two_mode->add_option("--n", n, "Photon number of mode a")->capture_default_str();
    two_mode->add_option("--nprime", nprime, "Photon number of mode b")->capture_default_str();
    two_mode->add_option("--theta", theta, "Polar angle of the rotation axis")
        ->capture_default_str();
    two_mode->add_option("--level", level, "Eigenstate label 1..4")
        ->check(CLI::Range(1, 4))
        ->capture_default_str();
    two_mode->add_option("--steps", two_mode_steps, "Loop discretization steps")
        ->capture_default_str();

    CLI::App* mixed = app.add_subcommand(
        "mixed", "Subsystem-1 mixed-state geometric phase");
    add_common(mixed, opts);
    mixed->add_option("--n", n, "Photon number")->capture_default_str();
    mixed->add_option("--level", level, "Eigenstate label 1..4")
        ->check(CLI::Range(1, 4))
        ->capture_default_str();
    mixed->add_option("--steps", steps, "Loop discretization steps")->capture_default_str();

    CLI::App* adiabatic = app.add_subcommand(
        "adiabatic", "Adiabaticity ratio: closed form and finite differences");
    add_common(adiabatic, opts);
    adiabatic->add_option("--n", n, "Photon number")->capture_default_str();
    adiabatic->add_option("--omega-prec", omega_prec, "Precessing frequency of the loop")
        ->capture_default_str();
    adiabatic->add_option("--fd-step", fd_step, "Finite-difference step in phi")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e); // --help and friends
        }
        std::cerr << "error: InvalidArgument: " << e.what() << "\n";
        return 2;
    }

    try {
        jcphase::OutputTable table;
        if (spectrum->parsed()) {
            table = jcphase::cmd_spectrum(opts.params, n, opts.cutoff);
        } else if (berry->parsed()) {
            jcphase::BerryMode berry_mode = jcphase::BerryMode::wilson;
            if (mode == "analytic") berry_mode = jcphase::BerryMode::analytic;
            else if (mode == "connection") berry_mode = jcphase::BerryMode::connection;
            else if (mode == "all") berry_mode = jcphase::BerryMode::all;
            table = jcphase::cmd_berry(opts.params, n, jcphase::Level(level), steps,
                                       berry_mode, opts.cutoff);
        } else if (figure1->parsed()) {
            table = jcphase::cmd_sweep_figure1(jcphase::SweepSpec::parse(sweep_text), n_list,
                                               opts.params);
        } else if (two_mode->parsed()) {
            table = jcphase::cmd_two_mode(opts.params, n, nprime, theta,
                                          jcphase::Level(level), two_mode_steps, opts.cutoff);
        } else if (mixed->parsed()) {
            table = jcphase::cmd_mixed(opts.params, n, jcphase::Level(level), steps,
                                       opts.cutoff);
        } else if (adiabatic->parsed()) {
            table = jcphase::cmd_adiabatic(opts.params, n, omega_prec, fd_step, opts.cutoff);
        }
        return emit(table, opts);
    } catch (const jcphase::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: InvalidArgument: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: Internal: " << e.what() << "\n";
        return 3;
    }
}

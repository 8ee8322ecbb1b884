#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jcphase/analytic.hpp"
#include "jcphase/geomphase.hpp"
#include "jcphase/linalg.hpp"
#include "jcphase/model.hpp"

#include <sstream>

namespace py = pybind11;
using namespace jcphase;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Geometric phases of two Ising-coupled spins driven by quantized field modes";

    py::register_exception<Error>(m, "JcphaseError");

    py::enum_<Spin>(m, "Spin")
        .value("e", Spin::e)
        .value("g", Spin::g);

    py::enum_<FieldMode>(m, "FieldMode")
        .value("a", FieldMode::a)
        .value("b", FieldMode::b);

    py::enum_<Continuation>(m, "Continuation")
        .value("natural_gauge", Continuation::natural_gauge)
        .value("overlap_matched", Continuation::overlap_matched);

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init([](double omega, double nu, double lambda_c, double j_c) {
                 ModelParams p{omega, nu, lambda_c, j_c};
                 p.validate();
                 return p;
             }),
             py::arg("omega") = 1.0, py::arg("nu") = 1.0, py::arg("lambda_c") = 1.0,
             py::arg("j_c") = 0.0)
        .def_readwrite("omega", &ModelParams::omega)
        .def_readwrite("nu", &ModelParams::nu)
        .def_readwrite("lambda_c", &ModelParams::lambda_c)
        .def_readwrite("j_c", &ModelParams::j_c)
        .def("__repr__", [](const ModelParams& p) {
            std::ostringstream os;
            os << "ModelParams(omega=" << p.omega << ", nu=" << p.nu
               << ", lambda_c=" << p.lambda_c << ", j_c=" << p.j_c << ")";
            return os.str();
        });

    py::class_<SectorLabel>(m, "SectorLabel")
        .def(py::init([](Spin spin2_polarity, int n) {
                 return SectorLabel{spin2_polarity, n};
             }),
             py::arg("spin2_polarity"), py::arg("n"))
        .def_readwrite("spin2_polarity", &SectorLabel::spin2_polarity)
        .def_readwrite("n", &SectorLabel::n);

    py::class_<LoopSpec>(m, "LoopSpec")
        .def(py::init([](int steps, Continuation continuation, std::optional<double> theta) {
                 return LoopSpec{steps, continuation, theta};
             }),
             py::arg("steps") = 2000,
             py::arg("continuation") = Continuation::overlap_matched,
             py::arg("theta") = std::nullopt)
        .def_readwrite("steps", &LoopSpec::steps)
        .def_readwrite("continuation", &LoopSpec::continuation)
        .def_readwrite("theta", &LoopSpec::theta);

    py::class_<PhaseResult>(m, "PhaseResult")
        .def_readonly("total", &PhaseResult::total)
        .def_readonly("reduced", &PhaseResult::reduced)
        .def_readonly("winding", &PhaseResult::winding)
        .def("__repr__", [](const PhaseResult& r) {
            std::ostringstream os;
            os << "PhaseResult(total=" << r.total << ", reduced=" << r.reduced
               << ", winding=" << r.winding << ")";
            return os.str();
        });

    py::class_<HoloResult>(m, "HoloResult")
        .def_readonly("reduced_phase", &HoloResult::reduced_phase)
        .def_readonly("total_phase", &HoloResult::total_phase)
        .def_readonly("winding", &HoloResult::winding)
        .def_readonly("min_gap", &HoloResult::min_gap)
        .def("__repr__", [](const HoloResult& r) {
            std::ostringstream os;
            os << "HoloResult(reduced_phase=" << r.reduced_phase
               << ", total_phase=" << r.total_phase << ", winding=" << r.winding
               << ", min_gap=" << r.min_gap << ")";
            return os.str();
        });

    py::class_<MixingAngles>(m, "MixingAngles")
        .def_readonly("cos_alpha", &MixingAngles::cos_alpha)
        .def_readonly("cos_beta", &MixingAngles::cos_beta)
        .def_readonly("alpha", &MixingAngles::alpha)
        .def_readonly("beta", &MixingAngles::beta);

    py::class_<SectorEigenvalues>(m, "SectorEigenvalues")
        .def_readonly("e_plus", &SectorEigenvalues::e_plus)
        .def_readonly("e_minus", &SectorEigenvalues::e_minus)
        .def_readonly("cos_angle", &SectorEigenvalues::cos_angle)
        .def_readonly("angle", &SectorEigenvalues::angle);

    py::class_<Eigensystem>(m, "Eigensystem")
        .def_readonly("values", &Eigensystem::values)
        .def_readonly("vectors", &Eigensystem::vectors);

    // ---- linalg ----
    m.def("eigh", &eigh, py::arg("m"));
    m.def("expm_unitary", &expm_unitary, py::arg("h"), py::arg("t"));
    m.def("partial_trace", &partial_trace, py::arg("rho"), py::arg("dims"), py::arg("keep"));

    // ---- model ----
    m.def("basis_index", &basis_index, py::arg("spin1"), py::arg("spin2"), py::arg("n"),
          py::arg("cutoff"));
    m.def("two_mode_basis_index", &two_mode_basis_index, py::arg("spin1"), py::arg("spin2"),
          py::arg("n"), py::arg("nprime"), py::arg("cutoff"));
    m.def("build_hamiltonian", &build_hamiltonian, py::arg("params"),
          py::arg("cutoff") = kDefaultCutoff);
    m.def("build_two_mode_hamiltonian", &build_two_mode_hamiltonian, py::arg("params"),
          py::arg("cutoff") = kDefaultCutoff);
    m.def("phase_shift_unitary", &phase_shift_unitary, py::arg("phi"), py::arg("cutoff"),
          py::arg("which_mode") = FieldMode::a);
    m.def("schwinger_jz", &schwinger_jz, py::arg("cutoff"));
    m.def("schwinger_jy", &schwinger_jy, py::arg("cutoff"));
    m.def("two_mode_rotation", &two_mode_rotation, py::arg("theta"), py::arg("phi"),
          py::arg("cutoff") = kDefaultCutoff);
    m.def("extract_sector", &extract_sector, py::arg("h"), py::arg("label"));

    // ---- analytic ----
    m.def("sector_detuning", &sector_detuning, py::arg("params"), py::arg("sector"));
    m.def("sector_splitting", &sector_splitting, py::arg("params"), py::arg("sector"));
    m.def("sector_cos", &sector_cos, py::arg("params"), py::arg("sector"));
    m.def("mixing_angles", &mixing_angles, py::arg("params"), py::arg("n"));
    m.def("sector_eigensystem", &sector_eigensystem, py::arg("params"), py::arg("sector"));
    m.def(
        "level_energy",
        [](const ModelParams& p, int n, int level) { return level_energy(p, n, Level(level)); },
        py::arg("params"), py::arg("n"), py::arg("level"));
    m.def(
        "eigenstate",
        [](const ModelParams& p, int n, int level, double phi, int cutoff) {
            return eigenstate(p, n, Level(level), phi, cutoff);
        },
        py::arg("params"), py::arg("n"), py::arg("level"), py::arg("phi"),
        py::arg("cutoff") = kDefaultCutoff);
    m.def(
        "berry_phase",
        [](const ModelParams& p, int n, int level) { return berry_phase(p, n, Level(level)); },
        py::arg("params"), py::arg("n"), py::arg("level"));
    m.def(
        "two_mode_berry_phase",
        [](const ModelParams& p, int n, int nprime, double theta, int level) {
            return two_mode_berry_phase(p, n, nprime, theta, Level(level));
        },
        py::arg("params"), py::arg("n"), py::arg("nprime"), py::arg("theta"), py::arg("level"));
    m.def(
        "mixed_state_phase",
        [](const ModelParams& p, int n, int level) {
            return mixed_state_phase(p, n, Level(level));
        },
        py::arg("params"), py::arg("n"), py::arg("level"));
    m.def("adiabatic_ratio_bound", &adiabatic_ratio_bound, py::arg("params"), py::arg("n"),
          py::arg("omega_prec"));

    // ---- geomphase ----
    m.def(
        "numeric_eigenstate",
        [](const ModelParams& p, int n, int level, int cutoff) {
            return numeric_eigenstate(p, n, Level(level), cutoff);
        },
        py::arg("params"), py::arg("n"), py::arg("level"), py::arg("cutoff") = kDefaultCutoff);
    m.def(
        "wilson_loop_phase",
        [](const ModelParams& p, int n, int level, const LoopSpec& spec, int cutoff) {
            return wilson_loop_phase(p, n, Level(level), spec, cutoff);
        },
        py::arg("params"), py::arg("n"), py::arg("level"), py::arg("spec"),
        py::arg("cutoff") = kDefaultCutoff);
    m.def(
        "connection_integral",
        [](const ModelParams& p, int n, int level, const LoopSpec& spec, int cutoff) {
            return connection_integral(p, n, Level(level), spec, cutoff);
        },
        py::arg("params"), py::arg("n"), py::arg("level"), py::arg("spec"),
        py::arg("cutoff") = kDefaultCutoff);
    m.def(
        "two_mode_loop_phase",
        [](const ModelParams& p, int n, int nprime, double theta, int level,
           const LoopSpec& spec, int cutoff) {
            return two_mode_loop_phase(p, n, nprime, theta, Level(level), spec, cutoff);
        },
        py::arg("params"), py::arg("n"), py::arg("nprime"), py::arg("theta"), py::arg("level"),
        py::arg("spec"), py::arg("cutoff") = kDefaultCutoff);
    m.def(
        "mixed_phase_numeric",
        [](const ModelParams& p, int n, int level, const LoopSpec& spec, int cutoff) {
            return mixed_phase_numeric(p, n, Level(level), spec, cutoff);
        },
        py::arg("params"), py::arg("n"), py::arg("level"), py::arg("spec"),
        py::arg("cutoff") = kDefaultCutoff);
    m.def("adiabatic_ratio_pairs", &adiabatic_ratio_pairs, py::arg("params"), py::arg("n"),
          py::arg("omega_prec"), py::arg("fd_step") = 1e-4, py::arg("cutoff") = kDefaultCutoff);
    m.def("adiabatic_ratio_numeric", &adiabatic_ratio_numeric, py::arg("params"), py::arg("n"),
          py::arg("omega_prec"), py::arg("fd_step") = 1e-4, py::arg("cutoff") = kDefaultCutoff);
}

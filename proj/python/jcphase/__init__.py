"""Geometric phases of two Ising-coupled spins driven by quantized field modes."""

from ._core import (
    Continuation,
    Eigensystem,
    FieldMode,
    HoloResult,
    JcphaseError,
    LoopSpec,
    MixingAngles,
    ModelParams,
    PhaseResult,
    SectorEigenvalues,
    SectorLabel,
    Spin,
    adiabatic_ratio_bound,
    adiabatic_ratio_numeric,
    adiabatic_ratio_pairs,
    basis_index,
    berry_phase,
    build_hamiltonian,
    build_two_mode_hamiltonian,
    connection_integral,
    eigenstate,
    eigh,
    expm_unitary,
    extract_sector,
    level_energy,
    mixed_phase_numeric,
    mixed_state_phase,
    mixing_angles,
    numeric_eigenstate,
    partial_trace,
    phase_shift_unitary,
    schwinger_jy,
    schwinger_jz,
    sector_cos,
    sector_detuning,
    sector_eigensystem,
    sector_splitting,
    two_mode_basis_index,
    two_mode_berry_phase,
    two_mode_loop_phase,
    two_mode_rotation,
    wilson_loop_phase,
)

__version__ = "0.1.0"

__all__ = [
    "Continuation",
    "Eigensystem",
    "FieldMode",
    "HoloResult",
    "JcphaseError",
    "LoopSpec",
    "MixingAngles",
    "ModelParams",
    "PhaseResult",
    "SectorEigenvalues",
    "SectorLabel",
    "Spin",
    "adiabatic_ratio_bound",
    "adiabatic_ratio_numeric",
    "adiabatic_ratio_pairs",
    "basis_index",
    "berry_phase",
    "build_hamiltonian",
    "build_two_mode_hamiltonian",
    "connection_integral",
    "eigenstate",
    "eigh",
    "expm_unitary",
    "extract_sector",
    "level_energy",
    "mixed_phase_numeric",
    "mixed_state_phase",
    "mixing_angles",
    "numeric_eigenstate",
    "partial_trace",
    "phase_shift_unitary",
    "schwinger_jy",
    "schwinger_jz",
    "sector_cos",
    "sector_detuning",
    "sector_eigensystem",
    "sector_splitting",
    "two_mode_basis_index",
    "two_mode_berry_phase",
    "two_mode_loop_phase",
    "two_mode_rotation",
    "wilson_loop_phase",
]

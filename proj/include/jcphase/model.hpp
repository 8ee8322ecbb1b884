#pragma once

#include "jcphase/errors.hpp"
#include "jcphase/types.hpp"

namespace jcphase {

inline constexpr int kDefaultCutoff = 8;

// Basis layouts. Single mode: index = spin1*(2*cutoff) + spin2*cutoff + n
// with e = 0, g = 1. Two modes append n' as the fastest index.
int basis_dim(int cutoff) noexcept;          // 4*cutoff
int two_mode_basis_dim(int cutoff) noexcept; // 4*cutoff^2
int basis_index(Spin spin1, Spin spin2, int n, int cutoff);
int two_mode_basis_index(Spin spin1, Spin spin2, int n, int nprime, int cutoff);

// H = omega/2 (s1z + s2z) + nu a†a + lambda (s1+ a + s1- a†) + J s1z s2z
// on the enumerated basis {spin1 ⊗ spin2 ⊗ Fock(cutoff)}, with the ladder
// truncated at n = cutoff-1. Throws CutoffTooSmall for cutoff < 2.
ComplexMatrix build_hamiltonian(const ModelParams& params, int cutoff = kDefaultCutoff);

// Adds a second uncoupled mode at the same frequency: H + nu b†b,
// dim 4*cutoff^2.
ComplexMatrix build_two_mode_hamiltonian(const ModelParams& params, int cutoff = kDefaultCutoff);

enum class FieldMode { a, b };

// Diagonal unitary exp(-i phi n_mode), identity on everything else.
// Mode a lives on the single-mode layout (dim 4*cutoff); mode b on the
// two-mode layout (dim 4*cutoff^2), with the phase on the n' index.
ComplexMatrix phase_shift_unitary(double phi, int cutoff, FieldMode which_mode = FieldMode::a);

// Schwinger operators on the bare two-mode Fock space (dim cutoff^2):
// Jz = (a†a - b†b)/2, Jy = (a†b - a b†)/(2i).
ComplexMatrix schwinger_jz(int cutoff);
ComplexMatrix schwinger_jy(int cutoff);

// U(theta, phi) = exp(-i phi Jz) exp(-i theta Jy) on the two-mode layout,
// identity on the spins.
ComplexMatrix two_mode_rotation(double theta, double phi, int cutoff = kDefaultCutoff);

// The 2x2 submatrix of a single-mode-layout Hamiltonian on the ordered basis
// {|e1, y2, n>, |g1, y2, n+1>}. Throws SectorOutOfRange unless n+1 < cutoff,
// DimensionMismatch if h is not on the single-mode layout.
ComplexMatrix extract_sector(const ComplexMatrix& h, const SectorLabel& label);

} // namespace jcphase

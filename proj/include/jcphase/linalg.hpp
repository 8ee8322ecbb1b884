#pragma once

#include "jcphase/errors.hpp"
#include "jcphase/types.hpp"

#include <vector>

namespace jcphase {

// Hermiticity tolerance used by eigh/expm preconditions.
inline constexpr double kHermTol = 1e-10;
// Eigenvalues closer than this are treated as one degenerate cluster; the
// individual directions inside a cluster are unspecified (only the span is).
inline constexpr double kClusterGap = 1e-9;

double inf_norm(const ComplexMatrix& m) noexcept;

// max_ij |m(i,j) - conj(m(j,i))|
double hermiticity_defect(const ComplexMatrix& m) noexcept;

bool is_hermitian(const ComplexMatrix& m, double tol = kHermTol) noexcept;

// Eigendecomposition of a Hermitian matrix. Eigenvalues ascending, columns of
// `vectors` orthonormal. The phase gauge is fixed by making the
// largest-magnitude component of each eigenvector real positive (ties within
// 1e-12 broken by lowest index), so identical input gives identical output.
struct Eigensystem {
    RealVector values;
    ComplexMatrix vectors;

    int dim() const noexcept { return static_cast<int>(values.size()); }
    Ket vector(int i) const { return vectors.col(i); }
};

// Throws NonSquare / NonHermitianInput.
Eigensystem eigh(const ComplexMatrix& m);

// exp(-i t h) for Hermitian h, evaluated through the eigendecomposition
// (exact up to roundoff; the result is unitary). Throws NonHermitianInput.
ComplexMatrix expm_unitary(const ComplexMatrix& h, double t);

// Partial trace of a density matrix over the factors NOT listed in `keep`.
// `dims` are the tensor-factor dimensions in row-major order; `keep` is a
// strictly increasing list of factor indices. keep = {} returns the 1x1
// scalar trace. Throws DimensionMismatch / InvalidDensityMatrix (the input
// must be Hermitian, unit trace within 1e-10 and PSD within -1e-10).
ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::vector<int>& dims,
                            const std::vector<int>& keep);

} // namespace jcphase

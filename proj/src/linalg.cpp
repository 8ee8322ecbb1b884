#include "jcphase/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

namespace jcphase {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NonSquare: return "NonSquare";
        case ErrorKind::NonHermitianInput: return "NonHermitianInput";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::InvalidDensityMatrix: return "InvalidDensityMatrix";
        case ErrorKind::CutoffTooSmall: return "CutoffTooSmall";
        case ErrorKind::SectorOutOfRange: return "SectorOutOfRange";
        case ErrorKind::DegenerateSector: return "DegenerateSector";
        case ErrorKind::GapCollapse: return "GapCollapse";
        case ErrorKind::NonClosedLoop: return "NonClosedLoop";
        case ErrorKind::RankChange: return "RankChange";
        case ErrorKind::LoopTooCoarse: return "LoopTooCoarse";
    }
    return "Error";
}

void ModelParams::validate() const {
    if (!std::isfinite(omega) || !std::isfinite(nu) || !std::isfinite(lambda_c) ||
        !std::isfinite(j_c)) {
        throw std::invalid_argument("ModelParams: all fields must be finite");
    }
    if (lambda_c < 0.0) {
        throw std::invalid_argument("ModelParams: lambda_c must be >= 0");
    }
}

Level::Level(int index) : index_(index) {
    if (index < 1 || index > 4) {
        throw std::invalid_argument("Level: index must be in 1..4");
    }
}

double wrap_to_2pi(double x) noexcept {
    double y = x - kTwoPi * std::floor(x / kTwoPi);
    if (y >= kTwoPi) y -= kTwoPi;
    if (y < 0.0) y += kTwoPi;
    return y;
}

double circle_distance(double a, double b) noexcept {
    const double d = wrap_to_2pi(a - b);
    return std::min(d, kTwoPi - d);
}

PhaseResult PhaseResult::from_total(double total) {
    double w = std::floor(total / kTwoPi);
    double r = total - kTwoPi * w;
    if (r < 0.0) {
        r += kTwoPi;
        w -= 1.0;
    }
    if (r >= kTwoPi) {
        r -= kTwoPi;
        w += 1.0;
    }
    return PhaseResult{total, r, static_cast<int>(w)};
}

double inf_norm(const ComplexMatrix& m) noexcept {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexMatrix& m) noexcept {
    if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
    return inf_norm(m - m.adjoint());
}

bool is_hermitian(const ComplexMatrix& m, double tol) noexcept {
    return m.rows() == m.cols() && hermiticity_defect(m) < tol;
}

namespace {

// Largest-magnitude component real positive; ties within 1e-12 broken by
// lowest index.
void fix_column_gauge(ComplexMatrix& vectors) {
    constexpr double tie_tol = 1e-12;
    for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
        Eigen::Index pivot = 0;
        double best = std::abs(vectors(0, c));
        for (Eigen::Index r = 1; r < vectors.rows(); ++r) {
            const double mag = std::abs(vectors(r, c));
            if (mag > best + tie_tol) {
                best = mag;
                pivot = r;
            }
        }
        const Complex v = vectors(pivot, c);
        const double mag = std::abs(v);
        if (mag > 0.0) {
            vectors.col(c) *= std::conj(v) / mag;
        }
    }
}

} // namespace

Eigensystem eigh(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        throw NonSquare("eigh: matrix is " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()));
    }
    const double defect = hermiticity_defect(m);
    if (!(defect < kHermTol)) {
        throw NonHermitianInput("eigh: hermiticity defect " + std::to_string(defect));
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
    if (solver.info() != Eigen::Success) {
        throw NonHermitianInput("eigh: decomposition did not converge");
    }
    Eigensystem es;
    es.values = solver.eigenvalues();
    es.vectors = solver.eigenvectors();
    fix_column_gauge(es.vectors);
    return es;
}

ComplexMatrix expm_unitary(const ComplexMatrix& h, double t) {
    const Eigensystem es = eigh(h); // validates shape and hermiticity
    Ket phases(es.dim());
    for (int i = 0; i < es.dim(); ++i) {
        phases(i) = std::polar(1.0, -t * es.values(i));
    }
    return es.vectors * phases.asDiagonal() * es.vectors.adjoint();
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::vector<int>& dims,
                            const std::vector<int>& keep) {
    if (rho.rows() != rho.cols()) {
        throw DimensionMismatch("partial_trace: rho must be square");
    }
    if (dims.empty()) {
        throw DimensionMismatch("partial_trace: dims must be non-empty");
    }
    long long total = 1;
    for (int d : dims) {
        if (d < 1) throw DimensionMismatch("partial_trace: factor dims must be >= 1");
        total *= d;
    }
    if (total != rho.rows()) {
        throw DimensionMismatch("partial_trace: product(dims) != dim(rho)");
    }
    const int nfac = static_cast<int>(dims.size());
    for (size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= nfac) {
            throw DimensionMismatch("partial_trace: keep index out of range");
        }
        if (i > 0 && keep[i] <= keep[i - 1]) {
            throw DimensionMismatch("partial_trace: keep must be strictly increasing");
        }
    }

    if (std::abs(rho.trace() - Complex(1.0, 0.0)) > 1e-10) {
        throw InvalidDensityMatrix("partial_trace: trace differs from 1");
    }
    if (!is_hermitian(rho)) {
        throw InvalidDensityMatrix("partial_trace: input not Hermitian");
    }
    {
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho, Eigen::EigenvaluesOnly);
        if (solver.eigenvalues().minCoeff() < -1e-10) {
            throw InvalidDensityMatrix("partial_trace: negative eigenvalue below tolerance");
        }
    }

    std::vector<int> traced;
    for (int f = 0; f < nfac; ++f) {
        if (std::find(keep.begin(), keep.end(), f) == keep.end()) traced.push_back(f);
    }

    // Row-major strides per factor.
    std::vector<long long> stride(nfac, 1);
    for (int f = nfac - 2; f >= 0; --f) stride[f] = stride[f + 1] * dims[f + 1];

    long long kept_dim = 1;
    for (int f : keep) kept_dim *= dims[f];
    long long traced_dim = 1;
    for (int f : traced) traced_dim *= dims[f];

    // Flat offsets of every kept / traced multi-index combination,
    // enumerated in row-major order over `factors`.
    auto offsets = [&](const std::vector<int>& factors, long long count) {
        std::vector<long long> out(static_cast<size_t>(count), 0);
        for (long long flat = 0; flat < count; ++flat) {
            long long rem = flat;
            long long off = 0;
            for (size_t i = factors.size(); i-- > 0;) {
                const int f = factors[i];
                off += (rem % dims[f]) * stride[f];
                rem /= dims[f];
            }
            out[static_cast<size_t>(flat)] = off;
        }
        return out;
    };

    const std::vector<long long> kept_off = offsets(keep, kept_dim);
    const std::vector<long long> traced_off = offsets(traced, traced_dim);

    ComplexMatrix out = ComplexMatrix::Zero(kept_dim, kept_dim);
    for (long long i = 0; i < kept_dim; ++i) {
        for (long long j = 0; j < kept_dim; ++j) {
            Complex sum(0.0, 0.0);
            for (long long t = 0; t < traced_dim; ++t) {
                sum += rho(kept_off[static_cast<size_t>(i)] + traced_off[static_cast<size_t>(t)],
                           kept_off[static_cast<size_t>(j)] + traced_off[static_cast<size_t>(t)]);
            }
            out(i, j) = sum;
        }
    }
    return out;
}

} // namespace jcphase

#include "jcphase/model.hpp"

#include "jcphase/linalg.hpp"

#include <cmath>
#include <string>

namespace jcphase {

namespace {

void check_cutoff(int cutoff) {
    if (cutoff < 2) {
        throw CutoffTooSmall("cutoff must be >= 2, got " + std::to_string(cutoff));
    }
}

double sz(Spin s) noexcept { return s == Spin::e ? 1.0 : -1.0; }

} // namespace

int basis_dim(int cutoff) noexcept { return 4 * cutoff; }

int two_mode_basis_dim(int cutoff) noexcept { return 4 * cutoff * cutoff; }

int basis_index(Spin spin1, Spin spin2, int n, int cutoff) {
    if (n < 0 || n >= cutoff) {
        throw SectorOutOfRange("basis_index: photon number " + std::to_string(n) +
                               " outside Fock cutoff " + std::to_string(cutoff));
    }
    return static_cast<int>(spin1) * 2 * cutoff + static_cast<int>(spin2) * cutoff + n;
}

int two_mode_basis_index(Spin spin1, Spin spin2, int n, int nprime, int cutoff) {
    if (n < 0 || n >= cutoff || nprime < 0 || nprime >= cutoff) {
        throw SectorOutOfRange("two_mode_basis_index: photon numbers (" + std::to_string(n) +
                               ", " + std::to_string(nprime) + ") outside Fock cutoff " +
                               std::to_string(cutoff));
    }
    const int fock = n * cutoff + nprime;
    const int c2 = cutoff * cutoff;
    return static_cast<int>(spin1) * 2 * c2 + static_cast<int>(spin2) * c2 + fock;
}

ComplexMatrix build_hamiltonian(const ModelParams& params, int cutoff) {
    params.validate();
    check_cutoff(cutoff);
    const int dim = basis_dim(cutoff);
    ComplexMatrix h = ComplexMatrix::Zero(dim, dim);

    for (Spin s1 : {Spin::e, Spin::g}) {
        for (Spin s2 : {Spin::e, Spin::g}) {
            for (int n = 0; n < cutoff; ++n) {
                const int i = basis_index(s1, s2, n, cutoff);
                h(i, i) = params.omega / 2.0 * (sz(s1) + sz(s2)) + params.nu * n +
                          params.j_c * sz(s1) * sz(s2);
                // lambda (s1+ a + s1- a†): couples |g1, y2, n+1> to |e1, y2, n>
                if (s1 == Spin::e && n + 1 < cutoff) {
                    const int j = basis_index(Spin::g, s2, n + 1, cutoff);
                    const double g = params.lambda_c * std::sqrt(static_cast<double>(n + 1));
                    h(i, j) = g;
                    h(j, i) = g;
                }
            }
        }
    }
    return h;
}

ComplexMatrix build_two_mode_hamiltonian(const ModelParams& params, int cutoff) {
    params.validate();
    check_cutoff(cutoff);
    const ComplexMatrix single = build_hamiltonian(params, cutoff);
    const int dim = two_mode_basis_dim(cutoff);
    ComplexMatrix h = ComplexMatrix::Zero(dim, dim);

    // Single-mode part acts on (spin1, spin2, n); mode b enters only as nu b†b.
    for (Eigen::Index row = 0; row < single.rows(); ++row) {
        for (Eigen::Index col = 0; col < single.cols(); ++col) {
            const Complex v = single(row, col);
            if (v == Complex(0.0, 0.0)) continue;
            for (int np = 0; np < cutoff; ++np) {
                h(row * cutoff + np, col * cutoff + np) += v;
            }
        }
    }
    for (Eigen::Index row = 0; row < single.rows(); ++row) {
        for (int np = 0; np < cutoff; ++np) {
            h(row * cutoff + np, row * cutoff + np) += params.nu * np;
        }
    }
    return h;
}

ComplexMatrix phase_shift_unitary(double phi, int cutoff, FieldMode which_mode) {
    check_cutoff(cutoff);
    if (which_mode == FieldMode::a) {
        const int dim = basis_dim(cutoff);
        ComplexMatrix u = ComplexMatrix::Zero(dim, dim);
        for (int block = 0; block < 4; ++block) {
            for (int n = 0; n < cutoff; ++n) {
                u(block * cutoff + n, block * cutoff + n) = std::polar(1.0, -phi * n);
            }
        }
        return u;
    }
    const int dim = two_mode_basis_dim(cutoff);
    ComplexMatrix u = ComplexMatrix::Zero(dim, dim);
    for (int block = 0; block < 4 * cutoff; ++block) {
        for (int np = 0; np < cutoff; ++np) {
            u(block * cutoff + np, block * cutoff + np) = std::polar(1.0, -phi * np);
        }
    }
    return u;
}

ComplexMatrix schwinger_jz(int cutoff) {
    check_cutoff(cutoff);
    const int dim = cutoff * cutoff;
    ComplexMatrix jz = ComplexMatrix::Zero(dim, dim);
    for (int n = 0; n < cutoff; ++n) {
        for (int np = 0; np < cutoff; ++np) {
            jz(n * cutoff + np, n * cutoff + np) = 0.5 * (n - np);
        }
    }
    return jz;
}

ComplexMatrix schwinger_jy(int cutoff) {
    check_cutoff(cutoff);
    const int dim = cutoff * cutoff;
    ComplexMatrix jy = ComplexMatrix::Zero(dim, dim);
    const Complex half_over_i(0.0, -0.5); // 1/(2i)
    for (int n = 0; n < cutoff; ++n) {
        for (int np = 0; np < cutoff; ++np) {
            // a†b |n, np> = sqrt((n+1) np) |n+1, np-1>
            if (n + 1 < cutoff && np - 1 >= 0) {
                const double amp = std::sqrt(static_cast<double>((n + 1) * np));
                jy((n + 1) * cutoff + (np - 1), n * cutoff + np) += half_over_i * amp;
            }
            // -a b† |n, np> = -sqrt(n (np+1)) |n-1, np+1>
            if (n - 1 >= 0 && np + 1 < cutoff) {
                const double amp = std::sqrt(static_cast<double>(n * (np + 1)));
                jy((n - 1) * cutoff + (np + 1), n * cutoff + np) -= half_over_i * amp;
            }
        }
    }
    return jy;
}

namespace {

// kron(I_4, op) for an operator on the bare two-mode Fock space.
ComplexMatrix embed_on_spins(const ComplexMatrix& op, int cutoff) {
    const int f = cutoff * cutoff;
    const int dim = 4 * f;
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (int block = 0; block < 4; ++block) {
        out.block(block * f, block * f, f, f) = op;
    }
    return out;
}

} // namespace

ComplexMatrix two_mode_rotation(double theta, double phi, int cutoff) {
    check_cutoff(cutoff);
    const int f = cutoff * cutoff;
    // exp(-i phi Jz) is diagonal; exp(-i theta Jy) via the eigendecomposition.
    const ComplexMatrix ry = expm_unitary(schwinger_jy(cutoff), theta);
    ComplexMatrix rot(f, f);
    const ComplexMatrix jz = schwinger_jz(cutoff);
    for (int row = 0; row < f; ++row) {
        const Complex dz = std::polar(1.0, -phi * jz(row, row).real());
        rot.row(row) = dz * ry.row(row);
    }
    return embed_on_spins(rot, cutoff);
}

ComplexMatrix extract_sector(const ComplexMatrix& h, const SectorLabel& label) {
    if (h.rows() != h.cols() || h.rows() % 4 != 0) {
        throw DimensionMismatch("extract_sector: matrix is not on the single-mode layout");
    }
    const int cutoff = static_cast<int>(h.rows()) / 4;
    if (label.n < 0 || label.n + 1 >= cutoff) {
        throw SectorOutOfRange("extract_sector: sector n = " + std::to_string(label.n) +
                               " needs n+1 < cutoff = " + std::to_string(cutoff));
    }
    const int i = basis_index(Spin::e, label.spin2_polarity, label.n, cutoff);
    const int j = basis_index(Spin::g, label.spin2_polarity, label.n + 1, cutoff);
    ComplexMatrix block(2, 2);
    block << h(i, i), h(i, j), h(j, i), h(j, j);
    return block;
}

} // namespace jcphase

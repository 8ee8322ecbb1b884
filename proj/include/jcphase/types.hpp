#pragma once

#include <Eigen/Dense>

#include <complex>
#include <numbers>
#include <optional>

namespace jcphase {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using Ket = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Physical constants of the model. All frequencies are plain reals; the
// recommended convention is lambda_c = 1 so that j_c is measured in units
// of the spin-field coupling.
struct ModelParams {
    double omega = 1.0;    // spin transition frequency (same for both spins)
    double nu = 1.0;       // field frequency
    double lambda_c = 1.0; // spin-field coupling of spin 1
    double j_c = 0.0;      // Ising coupling between the spins

    // Throws std::invalid_argument unless all fields are finite and lambda_c >= 0.
    void validate() const;
};

enum class Spin : int { e = 0, g = 1 };

// One conserved 2x2 block of the single-mode Hamiltonian, spanned by
// {|e1, y2, n>, |g1, y2, n+1>}. spin2_polarity = e is the alpha-sector
// (levels 1, 2), spin2_polarity = g the beta-sector (levels 3, 4).
struct SectorLabel {
    Spin spin2_polarity = Spin::e;
    int n = 0;
};

// Eigenstate label 1..4. Odd labels are the upper branch of their sector.
class Level {
public:
    explicit Level(int index);

    int index() const noexcept { return index_; }
    Spin sector() const noexcept { return index_ <= 2 ? Spin::e : Spin::g; }
    bool upper_branch() const noexcept { return index_ % 2 == 1; }
    SectorLabel sector_label(int n) const noexcept { return SectorLabel{sector(), n}; }

private:
    int index_;
};

// Position of a basis ket |x1, y2, n> (optionally |x1, y2, n, n'>).
struct BasisIndex {
    Spin spin1 = Spin::e;
    Spin spin2 = Spin::e;
    int n = 0;
    std::optional<int> nprime;
};

// A geometric phase split into the accumulated total (windings included),
// the value reduced to [0, 2pi), and the winding integer.
struct PhaseResult {
    double total = 0.0;
    double reduced = 0.0;
    int winding = 0;

    static PhaseResult from_total(double total);
};

// Maps x to [0, 2pi).
double wrap_to_2pi(double x) noexcept;

// Distance between two angles on the circle, in [0, pi].
double circle_distance(double a, double b) noexcept;

} // namespace jcphase

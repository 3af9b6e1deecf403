#pragma once

#include <array>
#include <complex>
#include <vector>

#include "pointscat/extension.hpp"

namespace pointscat {

struct TravelingAmplitudes {
    cdouble r_plus, r_minus;  // reflection for right/left incidence
    cdouble t_plus, t_minus;  // transmission
    double k = 0.0;
};

enum class Basis { Traveling, PartialWave };
enum class MatrixKind { S, T };

struct ScatterMatrix {
    std::array<std::array<cdouble, 2>, 2> m{};
    Basis basis = Basis::PartialWave;
    MatrixKind kind = MatrixKind::S;

    cdouble& operator()(int i, int j) { return m[i][j]; }
    const cdouble& operator()(int i, int j) const { return m[i][j]; }
};

enum class PoleKind { Bound, Antibound, Threshold };

struct Pole {
    double kappa = 0.0;  // pole momentum k = i*kappa
    PoleKind kind = PoleKind::Threshold;
};

struct ScatteringObservables {
    double delta_plus = 0.0;
    double delta_minus = 0.0;
    double theta = 0.0;    // mixing angle, [0, pi]
    double phi_rel = 0.0;  // relative phase, (-pi, pi]
    bool phase_undefined = false;  // alpha == gamma and phi == 0
    std::vector<Pole> poles;
};

struct TAngles {
    double theta = 0.0;
    double phi_rel = 0.0;
    cdouble f_plus, f_minus;  // eigenvalue amplitudes
    bool phase_undefined = false;
};

enum class Direction { Right, Left };

struct PartialAmplitudes {
    cdouble f0, f1;
};

struct ParityEvenSummary {
    double a0 = 0.0, a1 = 0.0;
    bool a0_infinite = false, a1_infinite = false;
    double kappa_plus = 0.0, kappa_minus = 0.0;
    bool single_pole = false;  // delta == 0 branch: kappa_plus holds kappa0, a1 = 0
};

TravelingAmplitudes reflection_transmission(const ExtensionParams& p, double k);
std::vector<Pole> smatrix_poles(const ExtensionParams& p);
ScatterMatrix s_matrix(const ExtensionParams& p, double k, Basis basis);
ScatterMatrix t_matrix(const ExtensionParams& p, double k);
ScatteringObservables eigen_observables(const ExtensionParams& p, double k);
TAngles observables_from_t(const ScatterMatrix& t);
PartialAmplitudes partial_amplitudes(const ExtensionParams& p, double k, Direction dir);
ParityEvenSummary parity_even_summary(const ExtensionParams& p);
std::pair<cdouble, cdouble> maximal_tv_eigenvalues(const ExtensionParams& p, double k);
std::vector<cdouble> bound_state_wavefunction(const ExtensionParams& p,
                                              const std::vector<double>& x_grid);

// Eigenvalue amplitudes (f_plus, f_minus) at complex momentum, with the
// branch of sqrt(B.B) fixed by continuity from the parity-even limit along a
// parameter-space homotopy (the pole-connected labeling). Used for
// pole-approach tests; real-k observables use eigen_observables.
std::pair<cdouble, cdouble> continued_eigen_amplitudes(const ExtensionParams& p, cdouble k);

} // namespace pointscat

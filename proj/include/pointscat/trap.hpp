#pragma once

#include <vector>

#include "pointscat/extension.hpp"

namespace pointscat {

struct SpectrumLevel {
    double e_over_omega = 0.0;
    double bracket_lo = 0.0;  // bracket in the scaled variable x = E/(2 omega)
    double bracket_hi = 0.0;
    double residual = 0.0;    // |g(x) - target| at the root (0 for exact pole levels)
};

struct SpectrumResult {
    std::vector<SpectrumLevel> levels;
};

// Robin parameter of the impenetrable half-line problem: beta = -1/a.
double robin_parameter(double a);

// First `count` trapped levels of the 3D s-wave problem from the scattering
// length; inv_a = 1/a so that the unitary limit is inv_a = 0.
SpectrumResult busch_levels_3d_inverse(double inv_a, double m, double omega, int count);
SpectrumResult busch_levels_3d(double a, double m, double omega, int count);

// First `count` trapped levels of the general 1D point interaction.
SpectrumResult trap_levels_1d(const ExtensionParams& p, double m, double omega, int count);

struct AmplitudeRatio {
    cdouble ratio;           // N+/N-
    bool reciprocal = false; // U(0) at a Gamma pole: ratio holds N-/N+ instead
};

// Ratio of the two joining amplitudes of the trapped 1D eigenstate at energy
// E; carries the phi phase absent from the spectrum itself.
AmplitudeRatio trap_amplitude_ratio(const ExtensionParams& p, double e, double m, double omega);

} // namespace pointscat

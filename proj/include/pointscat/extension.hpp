#pragma once

#include <complex>
#include <utility>

#include "pointscat/errors.hpp"

namespace pointscat {

using cdouble = std::complex<double>;

// Self-adjoint point-interaction parameters: the transfer matrix across the
// origin is M = e^{i phi} [[alpha, beta], [delta, gamma]] acting on
// (psi', psi)^T, with alpha*gamma - beta*delta = 1 and phi in (-pi/2, pi/2].
struct ExtensionParams {
    double alpha = 1.0;
    double beta = 0.0;   // 1/length
    double gamma = 1.0;
    double delta = 0.0;  // length
    double phi = 0.0;    // radians

    double determinant() const { return alpha * gamma - beta * delta; }
};

struct SymmetryFlags {
    bool parity_even = false;
    bool time_reversal_even = false;
    bool pt_even = false;
    bool scale_invariant = false;
};

// Normalizes phi into (-pi/2, pi/2] (flipping the sign of the four matrix
// parameters when shifting by pi) and enforces the determinant constraint.
// Throws ConstraintViolation when |alpha*gamma - beta*delta - 1| > 1e-9.
ExtensionParams validate_extension(double alpha, double beta, double gamma, double delta,
                                   double phi);

// (psi'(0+), psi(0+)) from (psi'(0-), psi(0-)) through the transfer matrix.
// Returns (psi_right, dpsi_right).
std::pair<cdouble, cdouble> apply_joining(const ExtensionParams& p, cdouble psi_left,
                                          cdouble dpsi_left);

ExtensionParams parity_transform(const ExtensionParams& p);
ExtensionParams time_reversal_transform(const ExtensionParams& p);
// M -> diag(1, 1/lambda) M diag(1, lambda): beta -> lambda*beta, delta -> delta/lambda.
ExtensionParams scale_transform(const ExtensionParams& p, double lambda);

SymmetryFlags classify(const ExtensionParams& p);

} // namespace pointscat

#include "pointscat/extension.hpp"

#include <cmath>
#include <string>

namespace pointscat {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = kPi / 2.0;
} // namespace

ExtensionParams validate_extension(double alpha, double beta, double gamma, double delta,
                                   double phi) {
    if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(gamma) ||
        !std::isfinite(delta) || !std::isfinite(phi))
        throw ConstraintViolation("extension parameters must be finite");

    // Wrap phi into (-pi, pi], then fold into (-pi/2, pi/2] using the
    // (params, phi) -> (-params, phi -+ pi) redundancy of M.
    phi = std::remainder(phi, 2.0 * kPi);
    if (phi <= -kPi) phi += 2.0 * kPi;
    if (phi > kHalfPi) {
        phi -= kPi;
        alpha = -alpha; beta = -beta; gamma = -gamma; delta = -delta;
    } else if (phi <= -kHalfPi) {
        phi += kPi;
        alpha = -alpha; beta = -beta; gamma = -gamma; delta = -delta;
    }

    double det = alpha * gamma - beta * delta;
    if (std::abs(det - 1.0) > 1e-9)
        throw ConstraintViolation("determinant constraint violated: alpha*gamma - beta*delta = " +
                                  std::to_string(det));

    ExtensionParams p;
    p.alpha = alpha; p.beta = beta; p.gamma = gamma; p.delta = delta; p.phi = phi;
    return p;
}

std::pair<cdouble, cdouble> apply_joining(const ExtensionParams& p, cdouble psi_left,
                                          cdouble dpsi_left) {
    cdouble phase = std::polar(1.0, p.phi);
    cdouble dpsi_right = phase * (p.alpha * dpsi_left + p.beta * psi_left);
    cdouble psi_right = phase * (p.delta * dpsi_left + p.gamma * psi_left);
    return {psi_right, dpsi_right};
}

ExtensionParams parity_transform(const ExtensionParams& p) {
    ExtensionParams q = p;
    q.alpha = p.gamma;
    q.gamma = p.alpha;
    q.phi = -p.phi;
    return validate_extension(q.alpha, q.beta, q.gamma, q.delta, q.phi);
}

ExtensionParams time_reversal_transform(const ExtensionParams& p) {
    return validate_extension(p.alpha, p.beta, p.gamma, p.delta, -p.phi);
}

ExtensionParams scale_transform(const ExtensionParams& p, double lambda) {
    if (!(lambda > 0.0))
        throw NonPositiveScale("scale factor must be positive, got " + std::to_string(lambda));
    return validate_extension(p.alpha, lambda * p.beta, p.gamma, p.delta / lambda, p.phi);
}

SymmetryFlags classify(const ExtensionParams& p) {
    constexpr double tol = 1e-12;
    SymmetryFlags f;
    bool ag = std::abs(p.alpha - p.gamma) < tol;
    bool phi0 = std::abs(p.phi) < tol;
    f.pt_even = ag;
    f.time_reversal_even = phi0;
    f.parity_even = ag && phi0;
    f.scale_invariant = std::abs(p.beta) < tol && std::abs(p.delta) < tol;
    return f;
}

} // namespace pointscat

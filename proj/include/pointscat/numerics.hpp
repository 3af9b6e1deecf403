#pragma once

#include <functional>

#include "pointscat/errors.hpp"

namespace pointscat {

// Value represented as sign * exp(log_abs); keeps Gamma ratios finite for
// large negative arguments where Gamma itself overflows.
struct SignedLog {
    double log_abs = 0.0;
    int sign = 1;

    double value() const;
};

// log |Gamma(x)| and the sign of Gamma(x) for real x.
// Throws PoleArgument at nonpositive integers.
SignedLog log_gamma_signed(double x);

// True when 3/4 - x is a nonpositive integer, i.e. gamma_ratio diverges.
bool gamma_ratio_pole(double x);

// g(x) = Gamma(3/4 - x) / Gamma(1/4 - x), the trap-spectrum ratio.
// Returns exactly 0 at poles of the denominator (x = 1/4 + n); throws
// PoleArgument at poles of the numerator (x = 3/4 + n).
double gamma_ratio(double x);

// Deterministic bracketed scalar root finder: bisection with a secant step
// accepted only when it stays inside the current bracket. Never evaluates f
// outside [lo, hi]; at most 200 iterations.
double bracketed_root(const std::function<double(double)>& f, double lo, double hi,
                      double tol = 1e-13);

} // namespace pointscat

#include "pointscat/numerics.hpp"

#include <cmath>
#include <string>

namespace pointscat {

double SignedLog::value() const { return sign * std::exp(log_abs); }

namespace {

bool near_nonpositive_integer(double x, double tol = 1e-14) {
    if (x > 0.5) return false;
    double r = std::round(x);
    return r <= 0.0 && std::abs(x - r) < tol * std::max(1.0, std::abs(x));
}

} // namespace

SignedLog log_gamma_signed(double x) {
    if (near_nonpositive_integer(x))
        throw PoleArgument("log_gamma_signed: pole at nonpositive integer x=" + std::to_string(x));
    SignedLog out;
    out.log_abs = std::lgamma(x);
    if (x > 0.0) {
        out.sign = 1;
    } else {
        // Gamma alternates sign between consecutive negative integers:
        // x in (-1,0) -> negative, x in (-2,-1) -> positive, ...
        long long n = static_cast<long long>(std::floor(-x));
        out.sign = (n % 2 == 0) ? -1 : 1;
    }
    return out;
}

bool gamma_ratio_pole(double x) {
    double y = 0.75 - x;
    if (y > 0.5) return false;
    double r = std::round(y);
    return r <= 0.0 && std::abs(y - r) < 1e-12 * std::max(1.0, std::abs(y));
}

double gamma_ratio(double x) {
    double num = 0.75 - x;
    double den = 0.25 - x;
    if (gamma_ratio_pole(x))
        throw PoleArgument("gamma_ratio: numerator pole at x=" + std::to_string(x));
    if (near_nonpositive_integer(den, 1e-12)) return 0.0;
    SignedLog ln = log_gamma_signed(num);
    SignedLog ld = log_gamma_signed(den);
    return ln.sign * ld.sign * std::exp(ln.log_abs - ld.log_abs);
}

double bracketed_root(const std::function<double(double)>& f, double lo, double hi, double tol) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw NoSignChange("bracketed_root: f(lo) and f(hi) have the same sign");

    double x = lo, fx = flo;
    for (int iter = 0; iter < 200; ++iter) {
        if (hi - lo < tol * std::max(1.0, std::abs(lo) + std::abs(hi))) return 0.5 * (lo + hi);

        // Secant candidate from the bracket endpoints on alternate iterations
        // (pure bisection otherwise, so the bracket provably halves); fall
        // back to bisection when the secant lands outside the bracket.
        double mid = 0.5 * (lo + hi);
        x = mid;
        if (iter % 2 == 0 && fhi != flo) {
            double xs = lo - flo * (hi - lo) / (fhi - flo);
            double margin = 0.01 * (hi - lo);
            if (xs > lo + margin && xs < hi - margin) x = xs;
        }
        fx = f(x);
        if (fx == 0.0) return x;
        if ((fx > 0.0) == (flo > 0.0)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }
    }
    if (hi - lo < 1e-9 * std::max(1.0, std::abs(lo) + std::abs(hi))) return 0.5 * (lo + hi);
    throw ConvergenceFailure("bracketed_root: no convergence in 200 iterations");
}

} // namespace pointscat

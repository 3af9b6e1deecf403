#include "pointscat/trap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pointscat/numerics.hpp"
#include "pointscat/scattering.hpp"

namespace pointscat {

namespace {

// One root of g(x) = target per branch interval of the Gamma ratio; the
// branches are (x_min, 3/4), (3/4, 7/4), (7/4, 11/4), ... and g decreases
// from +inf to -inf across each of them.
SpectrumLevel branch_root(double target, double lo, double hi, bool lowest) {
    auto f = [target](double x) { return gamma_ratio(x) - target; };
    double eps = 1e-6 * (hi - lo < 10.0 ? hi - lo : 10.0);
    double a = lo, b = hi;
    for (int attempt = 0; attempt < 8; ++attempt) {
        a = lowest ? lo : lo + eps;
        b = hi - eps;
        if (f(a) > 0.0 && f(b) < 0.0) break;
        eps *= 0.01;
        if (attempt == 7) {
            // Monotonicity fallback: scan for a sign change.
            const int n = 64;
            double prev = a, fprev = f(a);
            bool ok = false;
            for (int i = 1; i <= n; ++i) {
                double x = a + (b - a) * i / n;
                double fx = f(x);
                if ((fprev > 0.0) != (fx > 0.0)) { a = prev; b = x; ok = true; break; }
                prev = x; fprev = fx;
            }
            if (!ok) throw ConvergenceFailure("trap spectrum: no sign change in branch");
        }
    }
    SpectrumLevel level;
    level.bracket_lo = a;
    level.bracket_hi = b;
    double x = bracketed_root(f, a, b, 1e-14);
    level.e_over_omega = 2.0 * x;
    level.residual = std::abs(f(x));
    return level;
}

SpectrumLevel exact_level(double x) {
    SpectrumLevel level;
    level.e_over_omega = 2.0 * x;
    level.bracket_lo = x;
    level.bracket_hi = x;
    level.residual = 0.0;
    return level;
}

SpectrumResult solve_families(const std::vector<double>& targets, bool even_pole_family,
                              bool odd_pole_family, int count) {
    if (count < 1) throw ValidationError("level count must be >= 1");
    double cmax = 0.0;
    for (double c : targets) cmax = std::max(cmax, std::abs(c));
    double x_min = -std::max(50.0, 4.0 * cmax * cmax);

    std::vector<SpectrumLevel> all;
    int per_family = count + 2;
    for (double c : targets)
        for (int n = 0; n < per_family; ++n) {
            double lo = n == 0 ? x_min : 0.75 + (n - 1);
            double hi = 0.75 + n;
            all.push_back(branch_root(c, lo, hi, n == 0));
        }
    for (int n = 0; n < per_family; ++n) {
        if (even_pole_family) all.push_back(exact_level(0.25 + n));
        if (odd_pole_family) all.push_back(exact_level(0.75 + n));
    }

    std::sort(all.begin(), all.end(), [](const SpectrumLevel& a, const SpectrumLevel& b) {
        return a.e_over_omega < b.e_over_omega;
    });
    SpectrumResult out;
    for (const SpectrumLevel& level : all) {
        if (!out.levels.empty() &&
            std::abs(level.e_over_omega - out.levels.back().e_over_omega) < 1e-8)
            continue;
        out.levels.push_back(level);
        if (static_cast<int>(out.levels.size()) == count) break;
    }
    if (static_cast<int>(out.levels.size()) < count)
        throw ConvergenceFailure("trap spectrum: fewer levels than requested");
    return out;
}

} // namespace

double robin_parameter(double a) {
    if (a == 0.0) throw ZeroScatteringLength("robin_parameter requires a != 0");
    return -1.0 / a;
}

SpectrumResult busch_levels_3d_inverse(double inv_a, double m, double omega, int count) {
    if (!(m > 0.0) || !(omega > 0.0)) throw ValidationError("m and omega must be positive");
    double sq = std::sqrt(m * omega);
    if (inv_a == 0.0) return solve_families({}, true, false, count);
    return solve_families({inv_a / (2.0 * sq)}, false, false, count);
}

SpectrumResult busch_levels_3d(double a, double m, double omega, int count) {
    if (a == 0.0) throw ZeroScatteringLength("busch_levels_3d requires a != 0");
    return busch_levels_3d_inverse(1.0 / a, m, omega, count);
}

SpectrumResult trap_levels_1d(const ExtensionParams& p, double m, double omega, int count) {
    if (!(m > 0.0) || !(omega > 0.0)) throw ValidationError("m and omega must be positive");
    constexpr double tol = 1e-12;
    double sq = std::sqrt(m * omega);
    std::vector<double> targets;
    bool even_exact = false;
    bool odd_exact = false;
    for (const Pole& q : smatrix_poles(p)) {
        if (q.kind == PoleKind::Threshold)
            even_exact = true;  // g = 0 family is exactly x = 1/4 + n
        else
            targets.push_back(q.kappa / (2.0 * sq));
    }
    if (std::abs(p.delta) < tol) odd_exact = true;  // free odd sector
    if (std::abs(p.delta) < tol && std::abs(p.beta) < tol)
        even_exact = true;  // scale invariant: plain oscillator
    return solve_families(targets, even_exact, odd_exact, count);
}

AmplitudeRatio trap_amplitude_ratio(const ExtensionParams& p, double e, double m, double omega) {
    constexpr double tol = 1e-12;
    double sq = std::sqrt(m * omega);
    double x = e / (2.0 * omega);

    // Residual of the spectrum condition, taken over every active family.
    double best = std::numeric_limits<double>::infinity();
    bool at_odd_pole = gamma_ratio_pole(x);
    for (const Pole& q : smatrix_poles(p)) {
        if (q.kind == PoleKind::Threshold) continue;
        if (!at_odd_pole) best = std::min(best, std::abs(gamma_ratio(x) - q.kappa / (2.0 * sq)));
    }
    double frac = x - std::floor(x);
    if (std::abs(p.delta) < tol || std::abs(p.beta) < tol)
        best = std::min(best, std::min(std::abs(frac - 0.25), std::abs(frac - 0.75)));
    if (std::abs(p.delta) < tol)
        best = std::min(best, std::abs(frac - 0.75));
    if (!(best < 1e-6))
        throw NotAnEigenvalue("trap_amplitude_ratio: E is not on the spectrum (residual " +
                              std::to_string(best) + ")");

    AmplitudeRatio out;
    cdouble phase = std::polar(1.0, p.phi);
    if (at_odd_pole) {
        // U(0) = 0: the symmetric component vanishes; report N-/N+ instead.
        out.reciprocal = true;
        out.ratio = std::abs(p.delta) > tol ? cdouble{0.0, 0.0}
                                            : -std::conj(phase) / p.alpha;
        return out;
    }
    // U'/U at the origin is -sqrt(2) g(x).
    out.ratio = phase * (p.gamma + 2.0 * p.delta * sq * gamma_ratio(x));
    return out;
}

} // namespace pointscat

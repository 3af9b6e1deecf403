#include "pointscat/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pointscat {

namespace {

constexpr cdouble kI{0.0, 1.0};

// Denominator D = k^2 delta + i k (alpha + gamma) - beta of every amplitude.
cdouble denom(const ExtensionParams& p, cdouble k) {
    return k * k * p.delta + kI * k * (p.alpha + p.gamma) - p.beta;
}

void check_denom(const cdouble& d) {
    if (std::abs(d) < 1e-300) throw ZeroDenominator("scattering denominator vanishes");
}

} // namespace

TravelingAmplitudes reflection_transmission(const ExtensionParams& p, double k) {
    cdouble d = denom(p, k);
    check_denom(d);
    TravelingAmplitudes a;
    a.k = k;
    cdouble even = k * k * p.delta + p.beta;
    cdouble odd = kI * k * (p.alpha - p.gamma);
    a.r_plus = (even + odd) / d;
    a.r_minus = (even - odd) / d;
    a.t_plus = 2.0 * kI * k * std::polar(1.0, p.phi) / d;
    a.t_minus = 2.0 * kI * k * std::polar(1.0, -p.phi) / d;
    return a;
}

std::vector<Pole> smatrix_poles(const ExtensionParams& p) {
    constexpr double tol = 1e-12;
    auto label = [](double kappa) {
        Pole q;
        q.kappa = kappa;
        q.kind = std::abs(kappa) < tol ? PoleKind::Threshold
                                       : (kappa > 0.0 ? PoleKind::Bound : PoleKind::Antibound);
        return q;
    };
    std::vector<Pole> out;
    if (std::abs(p.delta) > tol) {
        double disc = std::sqrt((p.alpha - p.gamma) * (p.alpha - p.gamma) + 4.0);
        out.push_back(label((-(p.alpha + p.gamma) + disc) / (2.0 * p.delta)));
        out.push_back(label((-(p.alpha + p.gamma) - disc) / (2.0 * p.delta)));
    } else if (std::abs(p.beta) > tol) {
        out.push_back(label(-p.beta / (p.alpha + p.gamma)));
    }
    return out;
}

ScatterMatrix s_matrix(const ExtensionParams& p, double k, Basis basis) {
    TravelingAmplitudes a = reflection_transmission(p, k);
    ScatterMatrix s;
    s.kind = MatrixKind::S;
    s.basis = basis;
    if (basis == Basis::Traveling) {
        s(0, 0) = a.t_plus;  s(0, 1) = a.r_minus;
        s(1, 0) = a.r_plus;  s(1, 1) = a.t_minus;
    } else {
        // U S U^dag with U = (1/sqrt2)[[1,1],[1,-1]].
        s(0, 0) = 0.5 * (a.t_plus + a.t_minus + a.r_plus + a.r_minus);
        s(0, 1) = 0.5 * (a.t_plus - a.t_minus + a.r_plus - a.r_minus);
        s(1, 0) = 0.5 * (a.t_plus - a.t_minus - a.r_plus + a.r_minus);
        s(1, 1) = 0.5 * (a.t_plus + a.t_minus - a.r_plus - a.r_minus);
    }
    return s;
}

ScatterMatrix t_matrix(const ExtensionParams& p, double k) {
    ScatterMatrix s = s_matrix(p, k, Basis::PartialWave);
    ScatterMatrix t;
    t.kind = MatrixKind::T;
    t.basis = Basis::PartialWave;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            t(i, j) = (s(i, j) - (i == j ? 1.0 : 0.0)) / (2.0 * kI);
    return t;
}

ScatteringObservables eigen_observables(const ExtensionParams& p, double k) {
    cdouble d = denom(p, k);
    check_denom(d);
    ScatteringObservables o;
    double b3 = p.beta + k * k * p.delta;
    double s2 = (p.alpha - p.gamma) * (p.alpha - p.gamma) +
                4.0 * std::sin(p.phi) * std::sin(p.phi);
    double s = std::sqrt(s2);
    double babs = std::sqrt(k * k * s2 + b3 * b3);
    // The +/- labels pair with the mixing-angle convention below: f_plus is
    // the eigenvalue whose weight in T00 is cos(Theta) with
    // k cot(Theta) = -B3 / s_perp.
    cdouble lam_plus = (2.0 * kI * k * std::cos(p.phi) - babs) / d;
    cdouble lam_minus = (2.0 * kI * k * std::cos(p.phi) + babs) / d;
    o.delta_plus = 0.5 * std::arg(lam_plus);
    o.delta_minus = 0.5 * std::arg(lam_minus);
    o.theta = std::atan2(k * s, -b3);
    if (std::abs(p.alpha - p.gamma) < 1e-12 && std::abs(p.phi) < 1e-12) {
        o.phase_undefined = true;
        o.phi_rel = 0.0;
    } else {
        o.phi_rel = std::atan2(-2.0 * std::sin(p.phi), p.alpha - p.gamma);
    }
    o.poles = smatrix_poles(p);
    return o;
}

TAngles observables_from_t(const ScatterMatrix& t) {
    TAngles a;
    cdouble t00 = t(0, 0), t01 = t(0, 1), t10 = t(1, 0), t11 = t(1, 1);
    if (std::abs(t01) < 1e-14 && std::abs(t10) < 1e-14) {
        a.theta = 0.0;
        a.phi_rel = 0.0;
        a.phase_undefined = true;
        a.f_plus = t00;
        a.f_minus = t11;
        return a;
    }
    cdouble fbar = 0.5 * (t00 + t11);
    cdouble half_gap = std::sqrt(0.25 * (t00 - t11) * (t00 - t11) + t01 * t10);
    // Label the eigenvalues so that (lam+ - lam-)/(lam+ + lam-) sits on the
    // non-negative imaginary axis, matching the eigen_observables labels
    // (it equals i|B|/(2k cos phi) there).
    cdouble lam_sum = 2.0 + 4.0 * kI * fbar;           // lam+ + lam- of S = 1 + 2iT
    cdouble lam_gap = 4.0 * kI * half_gap;             // lam+ - lam-
    bool flip;
    if (std::abs(lam_sum) > 1e-12) {
        flip = (lam_gap / lam_sum).imag() < 0.0;
    } else {
        flip = std::arg(lam_gap) > 0.0;  // maximal-TV degenerate sum
    }
    if (flip) half_gap = -half_gap;
    a.f_plus = fbar + half_gap;
    a.f_minus = fbar - half_gap;
    double cos_theta = ((t00 - t11) / (2.0 * half_gap)).real();
    cdouble w = -t01 / (kI * half_gap);  // sin(theta) e^{-i Phi}
    a.theta = std::atan2(std::abs(w), cos_theta);
    a.phi_rel = -std::arg(w);
    return a;
}

PartialAmplitudes partial_amplitudes(const ExtensionParams& p, double k, Direction dir) {
    TravelingAmplitudes a = reflection_transmission(p, k);
    cdouble r = dir == Direction::Right ? a.r_plus : a.r_minus;
    cdouble t = dir == Direction::Right ? a.t_plus : a.t_minus;
    PartialAmplitudes f;
    f.f0 = (t + r - 1.0) / (2.0 * kI);
    f.f1 = (t - r - 1.0) / (2.0 * kI);
    return f;
}

ParityEvenSummary parity_even_summary(const ExtensionParams& p) {
    SymmetryFlags flags = classify(p);
    if (!flags.parity_even)
        throw NotParityEven("parity_even_summary requires alpha == gamma and phi == 0");
    ParityEvenSummary s;
    constexpr double tol = 1e-12;
    if (std::abs(p.delta) > tol) {
        s.kappa_plus = (1.0 - p.alpha) / p.delta;
        s.kappa_minus = -(1.0 + p.alpha) / p.delta;
        s.a0_infinite = std::abs(1.0 - p.alpha) < tol;
        s.a1_infinite = std::abs(1.0 + p.alpha) < tol;
        if (!s.a0_infinite) s.a0 = p.delta / (1.0 - p.alpha);
        if (!s.a1_infinite) s.a1 = -p.delta / (1.0 + p.alpha);
    } else {
        // Pure delta branch: one pole kappa0, p-wave decoupled.
        s.single_pole = true;
        s.a1 = 0.0;
        if (std::abs(p.beta) > tol) {
            s.kappa_plus = -p.beta / (p.alpha + p.gamma);
            s.a0 = 1.0 / s.kappa_plus;
        } else {
            s.a0_infinite = true;  // free particle: threshold-trivial s-wave
        }
    }
    return s;
}

std::pair<cdouble, cdouble> maximal_tv_eigenvalues(const ExtensionParams& p, double k) {
    constexpr double half_pi = 1.57079632679489661923;
    if (std::abs(p.phi - half_pi) > 1e-12)
        throw NotMaximalTV("maximal_tv_eigenvalues requires phi = pi/2");
    cdouble num{1.0, 0.0}, den{1.0, 0.0};
    for (const Pole& q : smatrix_poles(p)) {
        num *= (k + kI * q.kappa);
        den *= (k - kI * q.kappa);
    }
    cdouble e1 = std::sqrt(num / den);
    return {e1, -e1};
}

std::vector<cdouble> bound_state_wavefunction(const ExtensionParams& p,
                                              const std::vector<double>& x_grid) {
    double kappa = 0.0;
    bool found = false;
    for (const Pole& q : smatrix_poles(p)) {
        if (q.kind == PoleKind::Bound && (!found || q.kappa > kappa)) {
            kappa = q.kappa;
            found = true;
        }
    }
    if (!found) throw NoBoundState("no kappa > 0 pole for these parameters");
    cdouble left_amp = p.alpha;
    cdouble right_amp = std::polar(1.0, p.phi) * p.alpha * (p.delta * kappa + p.gamma);
    std::vector<cdouble> psi(x_grid.size());
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        double x = x_grid[i];
        psi[i] = x < 0.0 ? left_amp * std::exp(kappa * x) : right_amp * std::exp(-kappa * x);
    }
    return psi;
}

std::pair<cdouble, cdouble> continued_eigen_amplitudes(const ExtensionParams& p, cdouble k) {
    double xi = p.alpha - p.gamma;
    double c = 1.0 + p.beta * p.delta;  // = alpha*gamma
    if (c < 0.0)
        throw NumericalError("continued_eigen_amplitudes: alpha*gamma < 0 not supported");
    double sign_sum = p.alpha + p.gamma >= 0.0 ? 1.0 : -1.0;

    // Deform from the parity-even member of the constraint surface (t = 0,
    // where the signed root is beta + k^2 delta) to the target parameters,
    // tracking sqrt(B.B) by sign continuity.
    const int steps = 400;
    cdouble s_prev = p.beta + k * k * p.delta;
    cdouble s = s_prev;
    for (int n = 1; n <= steps; ++n) {
        double t = static_cast<double>(n) / steps;
        double at = 0.5 * (t * xi + sign_sum * std::sqrt(t * t * xi * xi + 4.0 * c));
        double gt = c / at;
        double pt = t * p.phi;
        cdouble b1 = -2.0 * k * std::sin(pt);
        cdouble b2 = -k * (at - gt);
        cdouble b3 = p.beta + k * k * p.delta;
        cdouble bb = b1 * b1 + b2 * b2 + b3 * b3;
        s = std::sqrt(bb);
        if (std::abs(s - s_prev) > std::abs(-s - s_prev)) s = -s;
        s_prev = s;
    }
    cdouble d = denom(p, k);
    check_denom(d);
    cdouble lam_plus = (2.0 * kI * k * std::cos(p.phi) + s) / d;
    cdouble lam_minus = (2.0 * kI * k * std::cos(p.phi) - s) / d;
    return {(lam_plus - 1.0) / (2.0 * kI), (lam_minus - 1.0) / (2.0 * kI)};
}

} // namespace pointscat

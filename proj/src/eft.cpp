#include "pointscat/eft.hpp"

#include <cmath>
#include <string>

namespace pointscat {

namespace {
constexpr cdouble kI{0.0, 1.0};

ScatterMatrix make_t(cdouble t00, cdouble t01, cdouble t10, cdouble t11) {
    ScatterMatrix t;
    t.kind = MatrixKind::T;
    t.basis = Basis::PartialWave;
    t(0, 0) = t00; t(0, 1) = t01; t(1, 0) = t10; t(1, 1) = t11;
    return t;
}
} // namespace

Scheme Scheme::cutoff(double lambda) {
    if (!(lambda > 0.0)) throw InvalidScale("cutoff Lambda must be positive");
    return {SchemeKind::Cutoff, lambda};
}

Scheme Scheme::pds(double mu) {
    if (mu < 0.0) throw InvalidScale("PDS mu must be nonnegative");
    return {SchemeKind::PDS, mu};
}

Scheme Scheme::ndr() { return {SchemeKind::NDR, 0.0}; }

cdouble regulated_moment(int n, double k, const Scheme& s) {
    if (n < 0) throw UnsupportedMoment("moment index must be nonnegative");
    if (n == 0) return kI / (2.0 * k);
    if (n == 1) return kI * k / 2.0 + delta0(s);
    if (s.kind != SchemeKind::NDR)
        throw UnsupportedMoment("moments with n >= 2 are implemented in NDR only");
    // NDR recursion: each extra k^2 insertion contributes -k^2 times the
    // previous moment's convergent part; I_{2n} = (ik/2) k^{2(n-1)}.
    return kI * k / 2.0 * std::pow(k * k, n - 1);
}

double delta0(const Scheme& s) {
    switch (s.kind) {
        case SchemeKind::Cutoff: return s.scale / 3.14159265358979323846;
        case SchemeKind::PDS: return s.scale;
        case SchemeKind::NDR: return 0.0;
    }
    return 0.0;
}

ScatterMatrix t_matrix_even(double c0, double c2p, const Scheme& s, double k) {
    cdouble f0 = -kI * c0 / (-c0 - kI * k);
    cdouble f1 = 0.0;  // decoupled p-wave limit for c2p = 0
    if (c2p != 0.0) f1 = k / (1.0 / c2p - 2.0 * delta0(s) - kI * k);
    return make_t(f0, 0.0, 0.0, f1);
}

double run_c2p(double lambda_cutoff, double a1) {
    // Note: the running keeps f1 cutoff independent with c2p(Lambda) -> -a1
    // in the NDR/zero-cutoff limit (dimension: length).
    double d = 2.0 * lambda_cutoff / 3.14159265358979323846 - 1.0 / a1;
    if (std::abs(d) < 1e-12) throw LandauPole("run_c2p: 2 Lambda/pi = 1/a1");
    return 1.0 / d;
}

ScatterMatrix t_matrix_odd(double c0, double c1, double c1_tilde, const Scheme& s, double k) {
    cdouble cc1{c1, c1_tilde};
    double mod2 = c1 * c1 + c1_tilde * c1_tilde;
    cdouble i2 = regulated_moment(1, k, s);
    cdouble num = c0 + 2.0 * mod2 * i2;
    cdouble den = k - kI * num;
    return make_t(num / den, -kI * k * cc1 / den, kI * k * std::conj(cc1) / den,
                  kI * k * mod2 / den);
}

ContactCouplings renormalize_odd(const RenormConditions& c, const Scheme& s) {
    ContactCouplings out;
    out.scheme = s;
    if (c.a_theta == 0.0) {
        out.c0 = c.kappa0;
        return out;
    }
    double x = c.kappa0 * c.a_theta;
    if (std::abs(x) > 1.0)
        throw NonPerturbative("renormalize_odd requires |kappa0 * a_theta| <= 1");
    double mu = s.kind == SchemeKind::Cutoff ? s.scale / 3.14159265358979323846 : delta0(s);
    double root = (1.0 - std::sqrt(1.0 - x * x)) / x;  // -> 0 as a_theta -> 0
    cdouble cc1 = std::polar(1.0, -c.phi_rel) * root;
    out.c1 = cc1.real();
    out.c1_tilde = cc1.imag();
    out.c0 = c.kappa0 + (c.kappa0 - 2.0 * mu) * root * root;
    return out;
}

ScatterMatrix renormalized_t_odd(const RenormConditions& c, double k) {
    if (std::abs(c.kappa0 * c.a_theta) > 1.0)
        throw NonPerturbative("renormalized_t_odd requires |kappa0 * a_theta| <= 1");
    double amp = 1.0 - std::sqrt(1.0 - c.kappa0 * c.a_theta * c.kappa0 * c.a_theta);
    cdouble den = k / c.kappa0 - kI;
    cdouble phase = std::polar(1.0, c.phi_rel);
    return make_t((1.0 + kI * k * amp / (2.0 * c.kappa0)) / den,
                  -kI * k * c.a_theta / 2.0 / phase / den,
                  kI * k * c.a_theta / 2.0 * phase / den,
                  kI * k * amp / (2.0 * c.kappa0) / den);
}

AnomalyFlow anomaly_flow(double kappa0, double mu, double k) {
    if (!(kappa0 > 0.0) || !(2.0 * mu > kappa0))
        throw InvalidScale("anomaly_flow requires 2 mu > kappa0 > 0");
    AnomalyFlow out;
    out.c1_mod = std::sqrt(kappa0 / (2.0 * mu - kappa0));
    out.k_cot_theta = mu * out.c1_mod;
    cdouble den = k / kappa0 - kI;
    out.t_limit = make_t(1.0 / den, 0.0, 0.0, 0.0);
    return out;
}

ScatterMatrix t_matrix_full(const ContactCouplings& c, double k) {
    if (c.scheme.kind != SchemeKind::NDR)
        throw ValidationError("t_matrix_full is defined in NDR only");
    cdouble cc1 = c.c1_complex();
    double mod2 = std::norm(cc1);
    cdouble q = (1.0 - kI * k * c.c2p) * (k - kI * c.c0) + k * mod2;
    return make_t(((1.0 - kI * k * c.c2p) * c.c0 + kI * k * mod2) / q,
                  -kI * k * cc1 / q,
                  kI * k * std::conj(cc1) / q,
                  (k * c.c2p * (k - kI * c.c0) + kI * k * mod2) / q);
}

FullObservables full_observables(const ContactCouplings& c) {
    if (c.scheme.kind != SchemeKind::NDR)
        throw ValidationError("full_observables is defined in NDR only");
    FullObservables out;
    double mod2 = c.c1 * c.c1 + c.c1_tilde * c.c1_tilde;
    constexpr double tol = 1e-12;
    auto label = [](double kappa) {
        Pole q;
        q.kappa = kappa;
        q.kind = std::abs(kappa) < 1e-12 ? PoleKind::Threshold
                                         : (kappa > 0.0 ? PoleKind::Bound : PoleKind::Antibound);
        return q;
    };
    if (mod2 < tol * tol) {
        out.mixing_degenerate = true;
    } else {
        out.phi_rel = -std::atan2(c.c1_tilde, c.c1);
        double mod = std::sqrt(mod2);
        out.intercept = c.c0 / (2.0 * mod);
        out.slope = -c.c2p / (2.0 * mod);
    }
    if (std::abs(c.c2p) > tol) {
        double u = 1.0 + mod2 - c.c2p * c.c0;
        double disc = std::sqrt(u * u + 4.0 * c.c2p * c.c0);
        out.poles.push_back(label((-u + disc) / (2.0 * c.c2p)));
        out.poles.push_back(label((-u - disc) / (2.0 * c.c2p)));
    } else if (std::abs(c.c0) > tol) {
        out.poles.push_back(label(c.c0 / (1.0 + mod2)));
    }
    return out;
}

ContactCouplings sae_to_couplings(const ExtensionParams& p) {
    double d = p.alpha + p.gamma + 2.0 * std::cos(p.phi);
    if (std::abs(d) < 1e-12)
        throw DictionarySingular("dictionary denominator alpha + gamma + 2 cos(phi) vanishes");
    ContactCouplings c;
    c.scheme = Scheme::ndr();
    c.c0 = -2.0 * p.beta / d;
    c.c2p = 2.0 * p.delta / d;
    c.c1 = (p.alpha - p.gamma) / d;
    c.c1_tilde = 2.0 * std::sin(p.phi) / d;
    return c;
}

ExtensionParams couplings_to_sae(const ContactCouplings& c) {
    if (c.scheme.kind != SchemeKind::NDR)
        throw ValidationError("couplings_to_sae is defined for NDR couplings");
    double mod2 = c.c1 * c.c1 + c.c1_tilde * c.c1_tilde;
    // The determinant constraint fixes the dictionary denominator D through
    // D^2 (Q^2 + 4 c1_tilde^2) = 16 with Q = 1 - |cc1|^2 + c0 c2p.
    double q = 1.0 - mod2 + c.c0 * c.c2p;
    double r2 = q * q + 4.0 * c.c1_tilde * c.c1_tilde;
    if (r2 < 1e-24)
        throw NoInverse("couplings on the degenerate dictionary boundary (|c1|^2 - c0 c2p = 1)");
    double sign = q != 0.0 ? (q > 0.0 ? 1.0 : -1.0) : (c.c1_tilde > 0.0 ? 1.0 : -1.0);
    double d = sign * 4.0 / std::sqrt(r2);
    double sin_phi = c.c1_tilde * d / 2.0;
    double cos2 = 1.0 - sin_phi * sin_phi;
    if (cos2 < -1e-12) throw NoInverse("no real phi in (-pi/2, pi/2] solves the dictionary");
    double cos_phi = cos2 > 0.0 ? std::sqrt(cos2) : 0.0;
    double phi = std::atan2(sin_phi, cos_phi);
    double sum = d - 2.0 * cos_phi;
    double diff = c.c1 * d;
    return validate_extension(0.5 * (sum + diff), -c.c0 * d / 2.0, 0.5 * (sum - diff),
                              c.c2p * d / 2.0, phi);
}

} // namespace pointscat

#pragma once

#include "pointscat/scattering.hpp"

namespace pointscat {

enum class SchemeKind { Cutoff, PDS, NDR };

// Regularization scheme: hard momentum cutoff Lambda, power-divergence
// subtraction at scale mu, or dimensional regularization (NDR).
struct Scheme {
    SchemeKind kind = SchemeKind::NDR;
    double scale = 0.0;  // Lambda for Cutoff, mu for PDS, unused for NDR

    static Scheme cutoff(double lambda);
    static Scheme pds(double mu);
    static Scheme ndr();
};

struct ContactCouplings {
    double c0 = 0.0;        // 1/length
    double c1 = 0.0;        // dimensionless
    double c1_tilde = 0.0;  // dimensionless
    double c2p = 0.0;       // length
    Scheme scheme;

    cdouble c1_complex() const { return {c1, c1_tilde}; }
};

struct RenormConditions {
    double kappa0 = 0.0;   // pole momentum, sign free
    double phi_rel = 0.0;  // relative phase Phi
    double a_theta = 0.0;  // mixing length: k cot(Theta) = 1/a_theta at LO
};

struct AnomalyFlow {
    double c1_mod = 0.0;       // |c1(mu)| with bare c0 = 0
    double k_cot_theta = 0.0;  // mu-dependent: the anomaly
    ScatterMatrix t_limit;     // mu -> infinity T-matrix (s-wave only)
};

struct FullObservables {
    double phi_rel = 0.0;
    double intercept = 0.0;  // k cot(Theta) = intercept + slope * k^2
    double slope = 0.0;
    std::vector<Pole> poles;
    bool mixing_degenerate = false;  // c1 = c1_tilde = 0
};

// Loop moments I_{2n}(k) of the contact theory; n=0 is i/(2k) in every
// scheme, n=1 is scheme dependent. delta0(s) = I_2(k=0) is the regulated
// delta(0). Odd moments vanish in all parity-preserving schemes.
cdouble regulated_moment(int n, double k, const Scheme& s);
double delta0(const Scheme& s);

ScatterMatrix t_matrix_even(double c0, double c2p, const Scheme& s, double k);
// Running p-wave coupling c2p(Lambda) that keeps f1 cutoff independent.
double run_c2p(double lambda_cutoff, double a1);
ScatterMatrix t_matrix_odd(double c0, double c1, double c1_tilde, const Scheme& s, double k);
ContactCouplings renormalize_odd(const RenormConditions& c, const Scheme& s);
ScatterMatrix renormalized_t_odd(const RenormConditions& c, double k);
AnomalyFlow anomaly_flow(double kappa0, double mu, double k);
ScatterMatrix t_matrix_full(const ContactCouplings& c, double k);
FullObservables full_observables(const ContactCouplings& c);
ContactCouplings sae_to_couplings(const ExtensionParams& p);
ExtensionParams couplings_to_sae(const ContactCouplings& c);

} // namespace pointscat

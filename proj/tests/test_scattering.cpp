#include "doctest.h"

#include <cmath>

#include "pointscat/scattering.hpp"

using namespace pointscat;

static constexpr double kPi = 3.14159265358979323846;
static const cdouble kJ{0.0, 1.0};

TEST_CASE("reflection/transmission at the hand-worked point") {
    ExtensionParams p = validate_extension(2.0, -2.5, 0.5, 0.0, 0.0);
    TravelingAmplitudes a = reflection_transmission(p, 1.0);
    CHECK(std::abs(a.r_plus - cdouble{-0.2, 0.8}) < 1e-14);
    CHECK(std::abs(a.t_plus - cdouble{0.4, 0.4}) < 1e-14);
    CHECK(std::abs(a.t_minus - a.t_plus) < 1e-15);  // phi = 0
    CHECK(std::norm(a.r_plus) + std::norm(a.t_plus) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::norm(a.r_minus) + std::norm(a.t_minus) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("pole inventory covers all three parameter branches") {
    // delta = 0, single pole kappa0 = -beta/(alpha+gamma) = 1 (bound).
    auto poles = smatrix_poles(validate_extension(2.0, -2.5, 0.5, 0.0, 0.0));
    REQUIRE(poles.size() == 1);
    CHECK(poles[0].kappa == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(poles[0].kind == PoleKind::Bound);

    // delta != 0: two poles, product beta/delta.
    ExtensionParams p2 = validate_extension(0.0, 1.0, 0.0, -1.0, 0.0);
    poles = smatrix_poles(p2);
    REQUIRE(poles.size() == 2);
    CHECK(poles[0].kappa * poles[1].kappa == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(poles[0].kappa == doctest::Approx(-1.0));  // antibound
    CHECK(poles[1].kappa == doctest::Approx(1.0));   // bound
    CHECK(poles[0].kind == PoleKind::Antibound);
    CHECK(poles[1].kind == PoleKind::Bound);

    // beta = 0, delta != 0: one threshold pole plus a finite one.
    poles = smatrix_poles(validate_extension(0.5, 0.0, 2.0, 1.0, 0.0));
    REQUIRE(poles.size() == 2);
    bool has_threshold = poles[0].kind == PoleKind::Threshold ||
                         poles[1].kind == PoleKind::Threshold;
    CHECK(has_threshold);

    // beta = delta = 0: no poles.
    CHECK(smatrix_poles(validate_extension(2.0, 0.0, 0.5, 0.0, 0.4)).empty());
}

TEST_CASE("partial-wave T matrix at the hand-worked point") {
    ExtensionParams p = validate_extension(2.0, -2.5, 0.5, 0.0, 0.0);
    ScatterMatrix t = t_matrix(p, 1.0);
    CHECK(std::abs(t(0, 0) - cdouble{0.45, 0.55}) < 1e-14);
    CHECK(std::abs(t(0, 1) - cdouble{0.15, -0.15}) < 1e-14);
    CHECK(std::abs(t(1, 0) - cdouble{-0.15, 0.15}) < 1e-14);
    CHECK(std::abs(t(1, 1) - cdouble{-0.05, 0.05}) < 1e-14);
}

TEST_CASE("mixing angles at the hand-worked point") {
    ExtensionParams p = validate_extension(2.0, -2.5, 0.5, 0.0, 0.0);
    ScatteringObservables o = eigen_observables(p, 1.0);
    CHECK(1.0 / std::tan(o.theta) == doctest::Approx(5.0 / 3.0).epsilon(1e-14));
    CHECK(o.phi_rel == doctest::Approx(0.0));
    CHECK(!o.phase_undefined);
    REQUIRE(o.poles.size() == 1);
    CHECK(o.poles[0].kappa == doctest::Approx(1.0));

    // Same angles recovered from the matrix alone.
    TAngles ang = observables_from_t(t_matrix(p, 1.0));
    CHECK(ang.theta == doctest::Approx(o.theta).epsilon(1e-13));
    CHECK(ang.phi_rel == doctest::Approx(0.0));
    CHECK(std::abs(ang.f_plus -
                   (std::polar(1.0, 2.0 * o.delta_plus) - 1.0) / (2.0 * kJ)) < 1e-13);
}

TEST_CASE("PT-even interactions mix with relative phase -pi/2") {
    ExtensionParams p = validate_extension(1.0, 0.0, 1.0, 0.0, kPi / 4.0);
    ScatteringObservables o = eigen_observables(p, 0.7);
    CHECK(o.phi_rel == doctest::Approx(-kPi / 2.0).epsilon(1e-14));
    CHECK(o.theta == doctest::Approx(kPi / 2.0).epsilon(1e-14));  // beta = delta = 0
}

TEST_CASE("parity-even interactions do not mix partial waves") {
    ExtensionParams p = validate_extension(0.0, 1.0, 0.0, -1.0, 0.0);
    for (double k : {0.4, 1.0, 2.5}) {
        ScatterMatrix t = t_matrix(p, k);
        CHECK(std::abs(t(0, 1)) < 1e-15);
        CHECK(std::abs(t(1, 0)) < 1e-15);
        // k tan(delta0) = kappa+ and k cot(delta1) = -kappa-.
        double d0 = 0.5 * std::arg(1.0 + 2.0 * kJ * t(0, 0));
        double d1 = 0.5 * std::arg(1.0 + 2.0 * kJ * t(1, 1));
        CHECK(k * std::tan(d0) == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(k / std::tan(d1) == doctest::Approx(-1.0).epsilon(1e-12));
    }
    ScatteringObservables o = eigen_observables(p, 0.5);
    CHECK(o.phase_undefined);

    ParityEvenSummary s = parity_even_summary(p);
    CHECK(s.a0 == doctest::Approx(-1.0));
    CHECK(s.a1 == doctest::Approx(1.0));
    CHECK(s.kappa_plus == doctest::Approx(-1.0));
    CHECK(s.kappa_minus == doctest::Approx(1.0));
    CHECK_THROWS_AS(parity_even_summary(validate_extension(2.0, -2.5, 0.5, 0.0, 0.0)),
                    NotParityEven);

    // Pure delta branch.
    ParityEvenSummary d = parity_even_summary(validate_extension(1.0, -2.0, 1.0, 0.0, 0.0));
    CHECK(d.single_pole);
    CHECK(d.kappa_plus == doctest::Approx(1.0));
    CHECK(d.a0 == doctest::Approx(1.0));
    CHECK(d.a1 == doctest::Approx(0.0));
}

TEST_CASE("partial amplitudes reproduce the delta-interaction values") {
    ExtensionParams p = validate_extension(1.0, -2.0, 1.0, 0.0, 0.0);  // c0 = 1
    PartialAmplitudes f = partial_amplitudes(p, 1.0, Direction::Right);
    CHECK(std::abs(f.f0 - cdouble{0.5, 0.5}) < 1e-14);
    CHECK(std::abs(f.f1) < 1e-15);
    // Left amplitudes are the parity transform of the right ones.
    PartialAmplitudes l = partial_amplitudes(p, 1.0, Direction::Left);
    PartialAmplitudes r = partial_amplitudes(parity_transform(p), 1.0, Direction::Right);
    CHECK(std::abs(l.f0 - r.f0) < 1e-15);
    CHECK(std::abs(l.f1 - r.f1) < 1e-15);
}

TEST_CASE("maximal time-reversal violation eigenvalues") {
    ExtensionParams p = validate_extension(1.0, 0.0, 1.0, 1.0, kPi / 2.0);
    auto [e1, e2] = maximal_tv_eigenvalues(p, 2.0);
    cdouble expect = std::polar(1.0, -kPi / 4.0);
    bool hit = std::abs(e1 - expect) < 1e-13 || std::abs(e2 - expect) < 1e-13;
    CHECK(hit);
    CHECK(std::abs(e1 + e2) < 1e-13);
    CHECK(std::abs(std::abs(e1) - 1.0) < 1e-13);
    CHECK_THROWS_AS(maximal_tv_eigenvalues(validate_extension(1, 0, 1, 0, 0), 1.0),
                    NotMaximalTV);
}

TEST_CASE("bound state decays on both sides and obeys the joining") {
    ExtensionParams p = validate_extension(2.0, -2.5, 0.5, 0.0, 0.4);
    std::vector<double> grid = {-2.0, -1.0, 0.0, 1.0, 2.0};
    std::vector<cdouble> psi = bound_state_wavefunction(p, grid);
    CHECK(std::abs(psi[0]) < std::abs(psi[1]));
    CHECK(std::abs(psi[4]) < std::abs(psi[3]));
    CHECK(std::abs(psi[1] / psi[0] - std::exp(1.0)) < 1e-12);
    CHECK(std::abs(psi[3] / psi[4] - std::exp(1.0)) < 1e-12);
    auto [psi_r, dpsi_r] = apply_joining(p, psi[2 - 2] * std::exp(2.0), 1.0 * psi[2 - 2] * std::exp(2.0));
    CHECK(std::abs(psi[2] - psi_r) < 1e-12);
    CHECK_THROWS_AS(bound_state_wavefunction(validate_extension(2.0, 0.0, 0.5, 0.0, 0.0), grid),
                    NoBoundState);
}

TEST_CASE("pole decoupling near k = i kappa0") {
    // delta = 0: the pole sits in f_plus only.
    ExtensionParams p = validate_extension(2.0, -2.5, 0.5, 0.0, 0.0);
    auto near = continued_eigen_amplitudes(p, cdouble(1e-2, 1.0));
    auto close = continued_eigen_amplitudes(p, cdouble(1e-4, 1.0));
    CHECK(std::abs(close.first) / std::abs(near.first) ==
          doctest::Approx(100.0).epsilon(0.05));
    CHECK(std::abs(near.second) < 1.0);
    CHECK(std::abs(close.second) < 1.0);

    // beta = 0: the roles swap.
    ExtensionParams q = validate_extension(0.5, 0.0, 2.0, -2.5, 0.0);
    double kappa = -(-2.5) / (2.0 * -2.5);  // from the quadratic: product = 0, sum root
    (void)kappa;
    auto poles = smatrix_poles(q);
    double kb = 0.0;
    for (const Pole& pl : poles)
        if (pl.kind == PoleKind::Bound) kb = pl.kappa;
    REQUIRE(kb > 0.0);
    auto near_b = continued_eigen_amplitudes(q, cdouble(1e-2, kb));
    auto close_b = continued_eigen_amplitudes(q, cdouble(1e-4, kb));
    CHECK(std::abs(close_b.second) / std::abs(near_b.second) ==
          doctest::Approx(100.0).epsilon(0.05));
    CHECK(std::abs(close_b.first) < 10.0);
}

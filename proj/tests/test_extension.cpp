#include "doctest.h"

#include <cmath>

#include "pointscat/extension.hpp"

using namespace pointscat;

static constexpr double kPi = 3.14159265358979323846;

TEST_CASE("validate_extension enforces the determinant constraint") {
    ExtensionParams p = validate_extension(2.0, -2.5, 0.5, 0.0, 0.0);
    CHECK(p.determinant() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(validate_extension(1.0, 0.0, 1.5, 0.0, 0.0), ConstraintViolation);
    CHECK_THROWS_AS(validate_extension(1.0, 0.0, 1.0 + 1e-8, 0.0, 0.0), ConstraintViolation);
    // Inside tolerance passes.
    CHECK_NOTHROW(validate_extension(1.0, 0.0, 1.0 + 1e-10, 0.0, 0.0));
    CHECK_THROWS_AS(validate_extension(1.0, 0.0, NAN, 0.0, 0.0), ConstraintViolation);
}

TEST_CASE("phi folds into (-pi/2, pi/2] with the sign-flip redundancy") {
    ExtensionParams p = validate_extension(1.0, 0.0, 1.0, 0.0, 0.75 * kPi);
    CHECK(p.phi == doctest::Approx(-0.25 * kPi).epsilon(1e-15));
    CHECK(p.alpha == doctest::Approx(-1.0));
    ExtensionParams q = validate_extension(1.0, 2.0, 1.0 + 2.0 * 3.0, 3.0, -0.6 * kPi);
    CHECK(q.phi == doctest::Approx(0.4 * kPi).epsilon(1e-12));
    CHECK(q.beta == doctest::Approx(-2.0));
    // Boundary: phi = pi/2 stays, phi = -pi/2 maps to +pi/2 with flipped signs.
    CHECK(validate_extension(1.0, 0.0, 1.0, 0.0, kPi / 2.0).phi ==
          doctest::Approx(kPi / 2.0));
    ExtensionParams r = validate_extension(1.0, 0.0, 1.0, 0.0, -kPi / 2.0);
    CHECK(r.phi == doctest::Approx(kPi / 2.0));
    CHECK(r.alpha == doctest::Approx(-1.0));
}

TEST_CASE("apply_joining is the transfer-matrix action") {
    ExtensionParams p = validate_extension(2.0, -2.5, 0.5, 0.0, 0.3);
    cdouble psi{0.7, -0.2}, dpsi{1.1, 0.4};
    auto [psi_r, dpsi_r] = apply_joining(p, psi, dpsi);
    cdouble ph = std::polar(1.0, 0.3);
    CHECK(std::abs(dpsi_r - ph * (2.0 * dpsi - 2.5 * psi)) < 1e-15);
    CHECK(std::abs(psi_r - ph * (0.5 * psi)) < 1e-15);
}

TEST_CASE("symmetry transforms act as stated") {
    ExtensionParams p = validate_extension(2.0, -2.5, 0.5, 0.0, 0.3);
    ExtensionParams par = parity_transform(p);
    CHECK(par.alpha == doctest::Approx(0.5));
    CHECK(par.gamma == doctest::Approx(2.0));
    CHECK(par.phi == doctest::Approx(-0.3));
    CHECK(time_reversal_transform(p).phi == doctest::Approx(-0.3));

    ExtensionParams s = scale_transform(p, 2.0);
    CHECK(s.beta == doctest::Approx(-5.0));
    CHECK(s.delta == doctest::Approx(0.0));
    CHECK(s.determinant() == doctest::Approx(1.0));
    CHECK_THROWS_AS(scale_transform(p, 0.0), NonPositiveScale);
    CHECK_THROWS_AS(scale_transform(p, -1.0), NonPositiveScale);
}

TEST_CASE("classify identifies the symmetry classes") {
    SymmetryFlags f = classify(validate_extension(0.0, 1.0, 0.0, -1.0, 0.0));
    CHECK(f.parity_even);
    CHECK(f.time_reversal_even);
    CHECK(f.pt_even);
    CHECK(!f.scale_invariant);

    f = classify(validate_extension(1.0, 0.0, 1.0, 0.0, kPi / 4.0));
    CHECK(!f.parity_even);
    CHECK(!f.time_reversal_even);
    CHECK(f.pt_even);
    CHECK(f.scale_invariant);

    f = classify(validate_extension(2.0, 0.0, 0.5, 0.0, 0.4));
    CHECK(f.scale_invariant);
    CHECK(!f.pt_even);

    f = classify(validate_extension(1.0, -2.0, 1.0, 0.0, 0.0));
    CHECK(f.time_reversal_even);
    CHECK(f.pt_even);
    CHECK(f.parity_even);
    CHECK(!f.scale_invariant);
}

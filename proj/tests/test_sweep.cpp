#include "doctest.h"

#include <cmath>

#include "pointscat/sweep.hpp"

using namespace pointscat;

TEST_CASE("momentum_grid endpoints, spacing, and validation") {
    auto lin = momentum_grid(1.0, 3.0, 5, false);
    REQUIRE(lin.size() == 5);
    CHECK(lin.front() == doctest::Approx(1.0));
    CHECK(lin.back() == doctest::Approx(3.0));
    CHECK(lin[2] == doctest::Approx(2.0));

    auto lg = momentum_grid(0.01, 100.0, 5, true);
    CHECK(lg[2] == doctest::Approx(1.0).epsilon(1e-12));

    CHECK(momentum_grid(0.7, 100.0, 1, true) == std::vector<double>{0.7});
    CHECK_THROWS_AS(momentum_grid(0.0, 1.0, 3, false), ValidationError);
    CHECK_THROWS_AS(momentum_grid(1.0, 1.0, 3, false), ValidationError);
    CHECK_THROWS_AS(momentum_grid(1.0, 2.0, 0, false), ValidationError);
}

TEST_CASE("parallel sweeps match the serial reference bitwise") {
    ExtensionParams p = validate_extension(2.0, -1.0, 0.3, 0.4, 0.3);
    auto ks = momentum_grid(0.05, 30.0, 777, true);
    auto a = scatter_sweep_serial(p, ks);
    auto b = scatter_sweep(p, ks);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].k == b[i].k);
        CHECK(a[i].r_plus == b[i].r_plus);
        CHECK(a[i].t_minus == b[i].t_minus);
        CHECK(a[i].delta_plus == b[i].delta_plus);
        CHECK(a[i].theta == b[i].theta);
        CHECK(a[i].phi_rel == b[i].phi_rel);
    }

    RenormConditions conds{1.0, 0.2, 0.5};
    auto mus = momentum_grid(0.6, 80.0, 333, true);
    auto fa = rgflow_sweep_serial(conds, mus, false);
    auto fb = rgflow_sweep(conds, mus, false);
    for (std::size_t i = 0; i < fa.size(); ++i) {
        CHECK(fa[i].c1_mod == fb[i].c1_mod);
        CHECK(fa[i].c0_mu == fb[i].c0_mu);
        CHECK(fa[i].k_cot_theta == fb[i].k_cot_theta);
    }
}

TEST_CASE("renormalized flow keeps the physical mixing angle fixed") {
    RenormConditions conds{1.0, 0.0, 0.6};
    auto mus = momentum_grid(0.6, 50.0, 40, true);
    for (const RgFlowRow& row : rgflow_sweep_serial(conds, mus, false))
        CHECK(row.k_cot_theta == doctest::Approx(1.0 / 0.6).epsilon(1e-12));

    // Bare c0 = 0 flow: the angle runs (the anomaly) and mixing dies at large mu.
    auto rows = rgflow_sweep_serial(RenormConditions{1.0, 0.0, 0.0}, mus, true);
    CHECK(rows.front().k_cot_theta < rows.back().k_cot_theta);
    CHECK(rows.back().c1_mod < rows.front().c1_mod);
}

TEST_CASE("sweep_threads respects the environment cap") {
    CHECK(sweep_threads() >= 1);
}

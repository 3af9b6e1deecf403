#include "pointscat/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pointscat {

namespace {

ScatterRow scatter_point(const ExtensionParams& p, double k) {
    ScatterRow row;
    row.k = k;
    TravelingAmplitudes a = reflection_transmission(p, k);
    row.r_plus = a.r_plus;
    row.r_minus = a.r_minus;
    row.t_plus = a.t_plus;
    row.t_minus = a.t_minus;
    ScatteringObservables o = eigen_observables(p, k);
    row.delta_plus = o.delta_plus;
    row.delta_minus = o.delta_minus;
    row.theta = o.theta;
    row.phi_rel = o.phi_rel;
    row.phase_undefined = o.phase_undefined;
    return row;
}

RgFlowRow rgflow_point(const RenormConditions& conds, double mu, bool anomaly) {
    RgFlowRow row;
    row.mu = mu;
    if (anomaly) {
        AnomalyFlow flow = anomaly_flow(conds.kappa0, mu, 1.0);
        row.c1_mod = flow.c1_mod;
        row.c0_mu = 0.0;
        row.k_cot_theta = flow.k_cot_theta;
    } else {
        ContactCouplings c = renormalize_odd(conds, Scheme::pds(mu));
        row.c1_mod = std::hypot(c.c1, c.c1_tilde);
        row.c0_mu = c.c0;
        row.k_cot_theta =
            row.c1_mod > 0.0 ? (c.c0 + 2.0 * mu * row.c1_mod * row.c1_mod) / (2.0 * row.c1_mod)
                             : 0.0;  // a_theta = 0: no mixing, angle identically zero
    }
    return row;
}

} // namespace

std::vector<double> momentum_grid(double k_min, double k_max, int steps, bool log_spacing) {
    if (!(k_min > 0.0)) throw ValidationError("k_min must be positive");
    if (steps < 1) throw ValidationError("k_steps must be >= 1");
    if (steps > 1 && !(k_max > k_min)) throw ValidationError("k_max must exceed k_min");
    std::vector<double> grid(steps);
    if (steps == 1) {
        grid[0] = k_min;
        return grid;
    }
    if (log_spacing) {
        double l0 = std::log(k_min), l1 = std::log(k_max);
        for (int i = 0; i < steps; ++i)
            grid[i] = std::exp(l0 + (l1 - l0) * i / (steps - 1));
    } else {
        for (int i = 0; i < steps; ++i)
            grid[i] = k_min + (k_max - k_min) * i / (steps - 1);
    }
    return grid;
}

int sweep_threads() {
    int cap = 0;
    if (const char* env = std::getenv("POINTSCAT_THREADS")) cap = std::atoi(env);
#ifdef _OPENMP
    int hw = omp_get_max_threads();
    return cap > 0 ? std::min(cap, hw) : hw;
#else
    return 1;
#endif
}

std::vector<ScatterRow> scatter_sweep_serial(const ExtensionParams& p,
                                             const std::vector<double>& k_grid) {
    std::vector<ScatterRow> rows(k_grid.size());
    for (std::size_t i = 0; i < k_grid.size(); ++i) rows[i] = scatter_point(p, k_grid[i]);
    return rows;
}

std::vector<ScatterRow> scatter_sweep(const ExtensionParams& p,
                                      const std::vector<double>& k_grid) {
    std::vector<ScatterRow> rows(k_grid.size());
    const long long n = static_cast<long long>(k_grid.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(sweep_threads())
#endif
    for (long long i = 0; i < n; ++i) rows[i] = scatter_point(p, k_grid[i]);
    return rows;
}

std::vector<RgFlowRow> rgflow_sweep_serial(const RenormConditions& conds,
                                           const std::vector<double>& mu_grid, bool anomaly) {
    std::vector<RgFlowRow> rows(mu_grid.size());
    for (std::size_t i = 0; i < mu_grid.size(); ++i)
        rows[i] = rgflow_point(conds, mu_grid[i], anomaly);
    return rows;
}

std::vector<RgFlowRow> rgflow_sweep(const RenormConditions& conds,
                                    const std::vector<double>& mu_grid, bool anomaly) {
    std::vector<RgFlowRow> rows(mu_grid.size());
    const long long n = static_cast<long long>(mu_grid.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(sweep_threads())
#endif
    for (long long i = 0; i < n; ++i) rows[i] = rgflow_point(conds, mu_grid[i], anomaly);
    return rows;
}

} // namespace pointscat

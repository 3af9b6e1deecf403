#pragma once

#include <vector>

#include "pointscat/eft.hpp"
#include "pointscat/scattering.hpp"

namespace pointscat {

struct ScatterRow {
    double k = 0.0;
    cdouble r_plus, r_minus, t_plus, t_minus;
    double delta_plus = 0.0, delta_minus = 0.0;
    double theta = 0.0, phi_rel = 0.0;
    bool phase_undefined = false;
};

struct RgFlowRow {
    double mu = 0.0;
    double c1_mod = 0.0;
    double c0_mu = 0.0;
    double k_cot_theta = 0.0;
};

// Grid of k values, linear or logarithmic; steps == 1 returns {k_min}.
std::vector<double> momentum_grid(double k_min, double k_max, int steps, bool log_spacing);

// Serial reference implementations and OpenMP kernels computing the same
// rows; the parallel versions fill a pre-sized buffer by index, so the output
// order (and bytes) match the serial ones exactly.
std::vector<ScatterRow> scatter_sweep_serial(const ExtensionParams& p,
                                             const std::vector<double>& k_grid);
std::vector<ScatterRow> scatter_sweep(const ExtensionParams& p,
                                      const std::vector<double>& k_grid);

// Renormalized parity-odd flow over a mu grid; anomaly = true uses the bare
// c0 = 0 theory (conds.kappa0 only), exhibiting the scale-dependent mixing.
std::vector<RgFlowRow> rgflow_sweep_serial(const RenormConditions& conds,
                                           const std::vector<double>& mu_grid, bool anomaly);
std::vector<RgFlowRow> rgflow_sweep(const RenormConditions& conds,
                                    const std::vector<double>& mu_grid, bool anomaly);

// Effective parallel thread count: POINTSCAT_THREADS caps it (0 or unset = auto).
int sweep_threads();

} // namespace pointscat

#pragma once

#include <vector>

#include "core.hpp"

namespace dfv {

struct RiemannData {
    double rho_l = 0.0, u_l = 0.0;
    double rho_r = 0.0, u_r = 0.0;
};

// Closed-form delta-shock parameters for a Riemann problem. position() is
// the shock path; weight() the mass carried at time t. has_path is false for
// the pressure model, where only the growth rate has a usable closed form
// (the known speed expression does not match observed trajectories, so we
// refuse to evaluate it rather than report a wrong curve).
struct DeltaShockParams {
    double v_delta = 0.0;
    double w_delta_rate = 0.0;
    double beta = 0.0;
    bool has_path = true;

    double position(double t) const;   // v_delta*t + beta*t^2/2
    double weight(double t) const { return w_delta_rate * t; }
};

// Sticky-particle delta shock (friction optional): requires u_l > u_r.
// v_delta is the sqrt(rho)-weighted velocity average; the growth rate is
// sqrt(rho_l*rho_r)*(u_l - u_r).
DeltaShockParams pgd_delta_params(const RiemannData& d, double beta = 0.0);

// Pressure-model delta shock: requires u_l >= u_r, densities > 0,
// 0 < alpha < 1. Growth rate sqrt(rho_l*rho_r*du^2 - drho*dP) with
// differences taken left minus right and P = s*rho^-alpha. No path.
DeltaShockParams cgd_delta_params(const RiemannData& d, double s, double alpha);

// Rarefaction-into-vacuum exact solution: requires u_l < u_r. Density is
// rho_l left of edge u_l*t + beta*t^2/2, rho_r right of edge
// u_r*t + beta*t^2/2, zero between.
struct VacuumProfile {
    RiemannData data;
    double beta = 0.0;

    double left_edge(double t) const;
    double right_edge(double t) const;
    double density_at(double x, double t) const;
    // Exact cell averages of the density on a grid (exact integration of the
    // piecewise-constant profile); this is the right target for L1 errors of
    // a finite-volume field.
    std::vector<double> cell_averages(const Grid1D& grid, double t) const;
};

VacuumProfile pgd_vacuum_exact(const RiemannData& d, double beta = 0.0);

// h * sum |numeric - exact|; sizes must match.
double l1_error(const std::vector<double>& numeric,
                const std::vector<double>& exact, double h);

// Successive convergence-rate slopes log(e_k/e_{k+1}) / log(h_k/h_{k+1}).
std::vector<double> eoc(const std::vector<double>& errors,
                        const std::vector<double>& hs);

}  // namespace dfv

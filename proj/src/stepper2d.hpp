#pragma once

#include <vector>

#include "core.hpp"
#include "stepper1d.hpp"

namespace dfv {

// Boundary outflux accumulators for a 2D run, already weighted by dt and the
// transverse cell width, so total mass obeys
//   sum hx*hy*rho (final) = sum hx*hy*rho (initial) - mass.
struct BoundaryFlow2D {
    double mass = 0.0;
    double wx = 0.0;
    double wy = 0.0;
};

// Largest effective speed along each axis: max |g(u) + beta*t| resp.
// max |g(v) + beta*t| over cells.
double max_speed_x(const State2D& s, const ModelSpec& model, double t,
                   double vacuum_eps);
double max_speed_y(const State2D& s, const ModelSpec& model, double t,
                   double vacuum_eps);

// One x-directional sweep: every row advances (rho, wx) by the configured 1D
// step; wy rides the mass flux with upwind cell velocity. flow, if given,
// accumulates boundary fluxes (weighted by dt*hy).
void sweep_x(State2D& s, const ModelSpec& model, const SchemeConfig& cfg,
             const Grid2D& grid, double t, double dt,
             BoundaryFlow2D* flow = nullptr);

// Mirror of sweep_x along y: columns advance (rho, wy); wx is passive.
void sweep_y(State2D& s, const ModelSpec& model, const SchemeConfig& cfg,
             const Grid2D& grid, double t, double dt,
             BoundaryFlow2D* flow = nullptr);

struct Snapshot2D {
    double time = 0.0;
    State2D state;
};

struct RunStats2D {
    double mass_initial = 0.0, mass_final = 0.0;
    double momentum_x_initial = 0.0, momentum_x_final = 0.0;
    double momentum_y_initial = 0.0, momentum_y_final = 0.0;
    double momentum_x_abs_initial = 0.0, momentum_y_abs_initial = 0.0;
    BoundaryFlow2D boundary;
    double rho_min = 0.0;
    double u_min = 0.0, u_max = 0.0;   // over run, cells above vacuum
    double v_min = 0.0, v_max = 0.0;
    double wy_abs_max = 0.0;           // for the v == 0 invariant check
    long steps = 0;
};

struct Run2DResult {
    std::vector<Snapshot2D> snapshots;
    RunStats2D stats;
};

// Dimensionally split driver: per step, dt from the additive bound
// cfl / (max_speed_x/hx + max_speed_y/hy), then both sweeps with the full
// dt, order alternating between steps (x-first on even steps). Snapshot
// times are landed exactly, as in 1D.
Run2DResult run_2d(const State2D& init, const ModelSpec& model,
                   const SchemeConfig& cfg, const Grid2D& grid, double T,
                   const std::vector<double>& snapshot_times);

}  // namespace dfv

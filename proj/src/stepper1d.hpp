#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"
#include "interface_flux.hpp"

namespace dfv {

// Per-step record: the dt actually used and the interface fluxes, indexed
// j = 0..m (j between interior cells j-1 and j; 0 and m are the domain
// edges). For a two-stage step these are the averaged effective fluxes, so
// sum h*U always telescopes onto them exactly.
struct StepReport {
    double dt = 0.0;
    double max_speed = 0.0;
    std::vector<double> flux_rho;
    std::vector<double> flux_w;
    std::vector<double> flux_passive;  // filled when a passive field is transported
};

// Largest effective transport speed max_i |g(u_i) + beta*t|.
double max_speed(const State1D& s, const ModelSpec& model, double t,
                 double vacuum_eps);

// dt = min(cfl*h/max_speed, h, remaining); the h cap guards the
// max_speed ~ 0 case. remaining must be positive.
TimeStep select_dt(double max_speed_val, double h, double cfl, double remaining);

// Slopes in half-jump units: face values are z_p -/+ sigma[p]. Computed on
// ghost-padded arrays; entry p corresponds to padded cell p, valid for
// p in [1, size-2] (zero at the outermost ghosts).
std::vector<double> limited_slopes(const std::vector<double>& padded, Limiter lim);

// Face traces for one reconstructed field at interfaces j = 0..m.
struct FaceTraces {
    std::vector<double> left;   // from the cell left of the interface
    std::vector<double> right;  // from the cell right of the interface
};

// Reconstruct rho and u on a padded state; rho slopes clipped for
// positivity. Used by the second-order stage and exposed for tests.
struct Reconstruction {
    FaceTraces rho;
    FaceTraces u;
};
Reconstruction reconstruct(const std::vector<double>& rho_padded,
                           const std::vector<double>& u_padded, Limiter lim);

// One first-order update (direct form): fluxes evaluated on cell traces
// (rho_i, rho_i*u_i). Throws numeric_error on emergent negative density,
// non-finite values, or a CFL violation. If passive is given (size m), it is
// transported with upwind cell velocities (passive = transverse momentum in
// dimensional splitting).
State1D step_first_order(const State1D& s, const ModelSpec& model,
                         const SchemeConfig& cfg, double h, double t, double dt,
                         StepReport* report = nullptr,
                         std::vector<double>* passive = nullptr);

// One forward-Euler stage of the second-order scheme: reconstruct, flux the
// face traces, update cell averages. With Limiter::zero this must equal
// step_first_order bitwise.
State1D muscl_euler_stage(const State1D& s, const ModelSpec& model,
                          const SchemeConfig& cfg, double h, double t, double dt,
                          Limiter lim, StepReport* report = nullptr,
                          std::vector<double>* passive = nullptr);

// Full second-order step: U* = E(U^n), U** = E(U*), U^{n+1} = (U^n + U**)/2,
// both stages with the same dt and friction speeds frozen at t^n.
State1D step_muscl_ssprk2(const State1D& s, const ModelSpec& model,
                          const SchemeConfig& cfg, double h, double t, double dt,
                          StepReport* report = nullptr,
                          std::vector<double>* passive = nullptr);

struct Snapshot1D {
    double time = 0.0;
    State1D state;
};

// Accumulated run diagnostics; drifts and residuals are derived from these
// by the audit helpers.
struct RunStats {
    double mass_initial = 0.0, mass_final = 0.0;
    double momentum_initial = 0.0, momentum_final = 0.0;
    double momentum_abs_initial = 0.0;
    double boundary_mass_integral = 0.0;      // integral of (F_right - F_left) dt
    double boundary_momentum_integral = 0.0;
    double rho_min = 0.0;                      // over run and cells
    double u_min = 0.0, u_max = 0.0;           // over run, cells above vacuum
    long steps = 0;
    std::map<std::string, double> entropy_residual_max;  // per S label
};

struct Run1DResult {
    std::vector<Snapshot1D> snapshots;
    RunStats stats;
};

// Advance from t=0 to T, landing exactly on every snapshot time and on T.
// snapshot_times must be strictly increasing within [0, T]; T is always
// snapshotted (once, if it is also listed). Entropy residuals are tracked
// when cfg.entropy_check is set (the inequality is a first-order property;
// second-order runs report it informatively).
Run1DResult run_1d(const State1D& init, const ModelSpec& model,
                   const SchemeConfig& cfg, const Grid1D& grid, double T,
                   const std::vector<double>& snapshot_times);

}  // namespace dfv

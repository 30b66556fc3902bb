#pragma once

#include <cmath>

#include "core.hpp"

namespace dfv {

// Limit interface flux for a scalar conservation law whose advection speed
// jumps from a (left) to b (right) across the interface, transporting the
// piecewise density (rl | rr). Covers sign-changing speeds; the
// overcompressive case a >= 0 >= b concentrates mass at the interface and
// carries zero flux unless the densities have opposite signs.
double interface_flux_linear(double a, double b, double rl, double rr);

// One side of the regularized flux: q(rho) = coef * rho * (1 - eps*|rho|),
// the parabola-blend whose monotone envelope defines the epsilon flux.
// Its extremum on rho >= 0 sits at rho = 1/(2 eps).
struct RegularizedFlux {
    double coef = 0.0;
    double eps = 0.0;
    double operator()(double rho) const { return coef * rho * (1.0 - eps * std::fabs(rho)); }
    double cap() const { return 0.5 / eps; }  // envelope evaluation point
};

// Godunov flux of the regularized two-sided problem. Converges to
// interface_flux_linear as eps -> 0 on every branch (for bounded inputs).
double epsilon_interface_flux(double eps, double a, double b, double rl, double rr);

// Everything a flux evaluation needs to know about one interface.
// a and b are the effective advection speeds, already including the
// friction shift (+beta*t) and the vacuum-transparency rule: a side at
// exact vacuum copies the speed of the other side so that vacuum does not
// act as fluid at rest (see build_trace).
struct InterfaceTrace {
    double rho_l = 0.0, rho_r = 0.0;
    double w_l = 0.0, w_r = 0.0;
    double u_l = 0.0, u_r = 0.0;  // vacuum convention: 0 at rho <= vacuum_eps
    double a = 0.0, b = 0.0;      // effective speeds
};

InterfaceTrace build_trace(double rho_l, double w_l, double rho_r, double w_r,
                           const ModelSpec& model, double t, double vacuum_eps);

// Density flux through the interface: interface_flux_linear on the trace's
// effective speeds.
double density_flux(const InterfaceTrace& tr);

// Momentum flux for convex-transport models (PGD/GPGD):
//   max( F(rho_l, max(w_l,0)), F(rho_r, min(w_r,0)) ),  F(rho,w) = w*g(w/rho),
// with F := 0 on a vacuum side.
double momentum_flux_convex(double rl, double wl, double rr, double wr,
                            const ModelSpec& model, double vacuum_eps);

// Momentum flux with pressure P(rho) = s*rho^-alpha (CGD):
//   max( (max(wl,0))^2/rl + P(rl), (min(wr,0))^2/rr + P(rr) ).
// Vacuum on either side is a hard error: the pressure diverges there.
double momentum_flux_pressure(double rl, double wl, double rr, double wr,
                              double s, double alpha, double vacuum_eps);

// Momentum flux with Coulomb friction (PGDS), clamp point G = -rho*beta*t/2
// per side:
//   max( q(rl, max(wl, G_l)), q(rr, min(wr, G_r)) ),  q(rho,w) = w*(w/rho).
// full_flux additionally adds beta*t*w to each arm before the max.
double momentum_flux_friction(double rl, double wl, double rr, double wr,
                              double beta, double t, bool full_flux,
                              double vacuum_eps);

// Model dispatch used by the steppers.
double momentum_flux(const InterfaceTrace& tr, const ModelSpec& model,
                     double t, bool pgds_full_flux, double vacuum_eps);

// Traces at all m+1 interfaces of a ghost-padded state using the cell-value
// convention: each side contributes (rho_p, rho_p * u_p). Shared by the
// first-order step and the entropy residual so their fluxes agree bitwise.
std::vector<InterfaceTrace> cell_traces(const std::vector<double>& rho_padded,
                                        const std::vector<double>& u_padded,
                                        const ModelSpec& model, double t,
                                        double vacuum_eps);

}  // namespace dfv

#include "interface_flux.hpp"

#include <algorithm>
#include <cmath>

namespace dfv {

double interface_flux_linear(double a, double b, double rl, double rr) {
    if (a >= 0.0 && b > 0.0) return a * rl;   // both speeds push right: upwind left
    if (a < 0.0 && b <= 0.0) return b * rr;   // both push left: upwind right
    if (a >= 0.0 && b <= 0.0) {
        // overcompressive: characteristics meet at the interface. Mass of one
        // sign concentrates there (zero flux); opposite signs can cancel
        // through the interface, with the dominant side setting the rate.
        if (rl < 0.0 && rr > 0.0) return std::max(a * rl, b * rr);
        if (rl > 0.0 && rr < 0.0) return std::min(a * rl, b * rr);
        return 0.0;
    }
    return 0.0;  // a < 0 && b > 0: characteristics diverge, interface drains
}

double epsilon_interface_flux(double eps, double a, double b, double rl, double rr) {
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw config_error("epsilon_interface_flux: eps must be positive");
    const RegularizedFlux g{a, eps};
    const RegularizedFlux f{b, eps};
    const double cap = g.cap();  // 1/(2 eps), extremum of either parabola
    if (a >= 0.0 && b > 0.0)
        return std::min(g(std::min(rl, cap)), f(std::max(rr, cap)));
    if (a < 0.0 && b <= 0.0)
        return std::max(g(std::max(rl, cap)), f(std::min(rr, cap)));
    if (a >= 0.0 && b <= 0.0) {
        if (rl < 0.0 && rr > 0.0) return std::max(g(rl), f(rr));
        if (rl > 0.0 && rr < 0.0) return std::min(g(rl), f(rr));
        // same-sign states: the regularized solution develops interface
        // traces at the zeros of g_eps/f_eps, where both fluxes vanish
        return 0.0;
    }
    return 0.0;
}

InterfaceTrace build_trace(double rho_l, double w_l, double rho_r, double w_r,
                           const ModelSpec& model, double t, double vacuum_eps) {
    InterfaceTrace tr;
    tr.rho_l = rho_l;
    tr.rho_r = rho_r;
    tr.w_l = w_l;
    tr.w_r = w_r;
    tr.u_l = velocity_of(rho_l, w_l, vacuum_eps);
    tr.u_r = velocity_of(rho_r, w_r, vacuum_eps);
    const double shift = model.beta * t;  // friction makes transport speeds age
    double a = model.g(tr.u_l) + shift;
    double b = model.g(tr.u_r) + shift;
    // Vacuum transparency: an empty side has no characteristics of its own
    // and must not behave like fluid at rest (that would freeze advancing
    // fronts while momentum still leaks into massless cells). The empty side
    // inherits the fluid side's speed, so mass and momentum cross together.
    const bool vac_l = rho_l <= vacuum_eps;
    const bool vac_r = rho_r <= vacuum_eps;
    if (vac_l && !vac_r)
        a = b;
    else if (vac_r && !vac_l)
        b = a;
    tr.a = a;
    tr.b = b;
    return tr;
}

double density_flux(const InterfaceTrace& tr) {
    return interface_flux_linear(tr.a, tr.b, tr.rho_l, tr.rho_r);
}

namespace {

double convex_arm(double rho, double w, const ModelSpec& model, double vacuum_eps) {
    if (rho <= vacuum_eps) return 0.0;
    return w * model.g(w / rho);
}

double friction_arm(double rho, double w, double betat, bool full, double vacuum_eps) {
    if (rho <= vacuum_eps) return 0.0;
    double q = w * (w / rho);
    if (full) q += betat * w;
    return q;
}

}  // namespace

double momentum_flux_convex(double rl, double wl, double rr, double wr,
                            const ModelSpec& model, double vacuum_eps) {
    const double left = convex_arm(rl, std::max(wl, 0.0), model, vacuum_eps);
    const double right = convex_arm(rr, std::min(wr, 0.0), model, vacuum_eps);
    return std::max(left, right);
}

double momentum_flux_pressure(double rl, double wl, double rr, double wr,
                              double s, double alpha, double vacuum_eps) {
    if (rl <= vacuum_eps || rr <= vacuum_eps)
        throw numeric_error("momentum_flux_pressure: vacuum state, pressure undefined");
    const double pl = std::max(wl, 0.0);
    const double pr = std::min(wr, 0.0);
    const double left = pl * (pl / rl) + s * std::pow(rl, -alpha);
    const double right = pr * (pr / rr) + s * std::pow(rr, -alpha);
    return std::max(left, right);
}

double momentum_flux_friction(double rl, double wl, double rr, double wr,
                              double beta, double t, bool full_flux,
                              double vacuum_eps) {
    const double betat = beta * t;
    // q(rho, w) = w^2/rho has its minimum over the admissible fan at
    // w = G = -rho*beta*t/2, the friction analogue of the w=0 clamp
    const double gl = -0.5 * rl * betat;
    const double gr = -0.5 * rr * betat;
    const double left = friction_arm(rl, std::max(wl, gl), betat, full_flux, vacuum_eps);
    const double right = friction_arm(rr, std::min(wr, gr), betat, full_flux, vacuum_eps);
    return std::max(left, right);
}

std::vector<InterfaceTrace> cell_traces(const std::vector<double>& rho_padded,
                                        const std::vector<double>& u_padded,
                                        const ModelSpec& model, double t,
                                        double vacuum_eps) {
    const int m = static_cast<int>(rho_padded.size()) - 4;
    std::vector<InterfaceTrace> traces;
    traces.reserve(m + 1);
    for (int j = 0; j <= m; ++j) {
        const int pl = j + 1, pr = j + 2;
        traces.push_back(build_trace(rho_padded[pl], rho_padded[pl] * u_padded[pl],
                                     rho_padded[pr], rho_padded[pr] * u_padded[pr],
                                     model, t, vacuum_eps));
    }
    return traces;
}

double momentum_flux(const InterfaceTrace& tr, const ModelSpec& model,
                     double t, bool pgds_full_flux, double vacuum_eps) {
    switch (model.kind) {
        case ModelKind::PGD:
        case ModelKind::GPGD:
            return momentum_flux_convex(tr.rho_l, tr.w_l, tr.rho_r, tr.w_r,
                                        model, vacuum_eps);
        case ModelKind::PGDS:
            return momentum_flux_friction(tr.rho_l, tr.w_l, tr.rho_r, tr.w_r,
                                          model.beta, t, pgds_full_flux,
                                          vacuum_eps);
        case ModelKind::CGD:
            return momentum_flux_pressure(tr.rho_l, tr.w_l, tr.rho_r, tr.w_r,
                                          model.s, model.alpha, vacuum_eps);
    }
    throw numeric_error("momentum_flux: unknown model kind");
}

}  // namespace dfv

#include "exact.hpp"

#include <cmath>

namespace dfv {

double DeltaShockParams::position(double t) const {
    if (!has_path)
        throw numeric_error("delta shock: no closed-form path for this model");
    return v_delta * t + 0.5 * beta * t * t;
}

DeltaShockParams pgd_delta_params(const RiemannData& d, double beta) {
    if (!(d.rho_l >= 0.0) || !(d.rho_r >= 0.0))
        throw config_error("delta params: densities must be nonnegative");
    if (!(d.u_l > d.u_r))
        throw config_error("delta params: not in the delta regime (u_l <= u_r)");
    const double sl = std::sqrt(d.rho_l), sr = std::sqrt(d.rho_r);
    if (sl + sr <= 0.0)
        throw config_error("delta params: both states are vacuum");
    DeltaShockParams p;
    p.v_delta = (sl * d.u_l + sr * d.u_r) / (sl + sr);
    p.w_delta_rate = std::sqrt(d.rho_l * d.rho_r) * (d.u_l - d.u_r);
    p.beta = beta;
    return p;
}

DeltaShockParams cgd_delta_params(const RiemannData& d, double s, double alpha) {
    if (!(d.rho_l > 0.0) || !(d.rho_r > 0.0))
        throw config_error("delta params: pressure model needs positive densities");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw config_error("delta params: alpha must be in (0,1)");
    if (!(s >= 0.0))
        throw config_error("delta params: s must be nonnegative");
    if (!(d.u_l >= d.u_r))
        throw config_error("delta params: not in the delta regime (u_l < u_r)");
    const double du = d.u_l - d.u_r;
    const double drho = d.rho_l - d.rho_r;
    const double dP = s * std::pow(d.rho_l, -alpha) - s * std::pow(d.rho_r, -alpha);
    const double arg = d.rho_l * d.rho_r * du * du - drho * dP;
    if (arg < 0.0)
        throw config_error("delta params: negative weight-rate discriminant");
    DeltaShockParams p;
    p.w_delta_rate = std::sqrt(arg);
    p.has_path = false;
    return p;
}

double VacuumProfile::left_edge(double t) const {
    return data.u_l * t + 0.5 * beta * t * t;
}

double VacuumProfile::right_edge(double t) const {
    return data.u_r * t + 0.5 * beta * t * t;
}

double VacuumProfile::density_at(double x, double t) const {
    if (x < left_edge(t)) return data.rho_l;
    if (x > right_edge(t)) return data.rho_r;
    return 0.0;
}

std::vector<double> VacuumProfile::cell_averages(const Grid1D& grid,
                                                 double t) const {
    const double el = left_edge(t), er = right_edge(t);
    const double h = grid.h();
    std::vector<double> out(grid.m);
    for (int i = 0; i < grid.m; ++i) {
        const double a = grid.xmin + i * h;
        const double b = a + h;
        const double len_l = std::max(0.0, std::min(b, el) - a);
        const double len_r = std::max(0.0, b - std::max(a, er));
        out[i] = (data.rho_l * len_l + data.rho_r * len_r) / h;
    }
    return out;
}

VacuumProfile pgd_vacuum_exact(const RiemannData& d, double beta) {
    if (!(d.rho_l >= 0.0) || !(d.rho_r >= 0.0))
        throw config_error("vacuum profile: densities must be nonnegative");
    if (!(d.u_l < d.u_r))
        throw config_error("vacuum profile: needs u_l < u_r");
    return VacuumProfile{d, beta};
}

double l1_error(const std::vector<double>& numeric,
                const std::vector<double>& exact, double h) {
    if (numeric.size() != exact.size())
        throw config_error("l1_error: profile lengths differ");
    double sum = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < numeric.size(); ++i) {
        const double y = std::fabs(numeric[i] - exact[i]) - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return h * sum;
}

std::vector<double> eoc(const std::vector<double>& errors,
                        const std::vector<double>& hs) {
    if (errors.size() != hs.size())
        throw config_error("eoc: errors and hs lengths differ");
    std::vector<double> slopes;
    if (errors.size() < 2) return slopes;
    slopes.reserve(errors.size() - 1);
    for (std::size_t k = 0; k + 1 < errors.size(); ++k)
        slopes.push_back(std::log(errors[k] / errors[k + 1]) /
                         std::log(hs[k] / hs[k + 1]));
    return slopes;
}

}  // namespace dfv

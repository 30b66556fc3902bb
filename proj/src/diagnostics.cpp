#include "diagnostics.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>

namespace dfv {

std::vector<double> primitive(const std::vector<double>& rho, double h) {
    std::vector<double> out(rho.size());
    double sum = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < rho.size(); ++i) {
        const double y = rho[i] - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        out[i] = h * sum;
    }
    return out;
}

DeltaMeasure delta_measure(const std::vector<double>& rho, const Grid1D& grid,
                           double background_left, double background_right,
                           int window) {
    DeltaMeasure dm;
    const int m = static_cast<int>(rho.size());
    if (m == 0) return dm;

    int peak = 0;
    double lo = rho[0], hi = rho[0];
    for (int i = 1; i < m; ++i) {
        if (rho[i] > rho[peak]) peak = i;
        lo = std::min(lo, rho[i]);
        hi = std::max(hi, rho[i]);
    }
    if (hi - lo <= 1e-12 * std::max(1.0, std::fabs(hi))) return dm;  // flat

    dm.found = true;
    dm.cell_index = peak;
    dm.location = grid.cell_center(peak);

    const int a = std::max(0, peak - window);
    const int b = std::min(m - 1, peak + window);
    const double h = grid.h();
    double sum = 0.0, comp = 0.0;
    for (int i = a; i <= b; ++i) {
        double bg;
        if (i < peak)
            bg = background_left;
        else if (i > peak)
            bg = background_right;
        else
            bg = 0.5 * (background_left + background_right);
        const double y = (rho[i] - bg) - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    dm.weight = h * sum;
    return dm;
}

double entropy_flux(const InterfaceTrace& tr, const ModelSpec& model, double t,
                    bool pgds_full_flux, const EntropyFunction& S,
                    double vacuum_eps) {
    const double a = tr.a, b = tr.b;
    if (a >= 0.0 && b > 0.0) return S(tr.u_l) * tr.rho_l * a;
    if (a < 0.0 && b <= 0.0) return S(tr.u_r) * tr.rho_r * b;
    if (a >= 0.0 && b <= 0.0) {
        if (tr.u_r == tr.u_l) return 0.0;
        const double fw = momentum_flux(tr, model, t, pgds_full_flux, vacuum_eps);
        return fw * (S(tr.u_r) - S(tr.u_l)) / (tr.u_r - tr.u_l);
    }
    return 0.0;  // divergent: nothing crosses
}

double entropy_residual(const State1D& before, const State1D& after,
                        const ModelSpec& model, double h, double t, double dt,
                        bool pgds_full_flux, const EntropyFunction& S,
                        double vacuum_eps) {
    const int m = static_cast<int>(before.rho.size());
    const double lam = dt / h;

    const std::vector<double> rho_p = with_ghost_cells(before.rho);
    const std::vector<double> w_p = with_ghost_cells(before.w);
    std::vector<double> u_p(rho_p.size());
    for (std::size_t i = 0; i < rho_p.size(); ++i)
        u_p[i] = velocity_of(rho_p[i], w_p[i], vacuum_eps);
    const auto traces = cell_traces(rho_p, u_p, model, t, vacuum_eps);

    std::vector<double> fs(m + 1);
    for (int j = 0; j <= m; ++j)
        fs[j] = entropy_flux(traces[j], model, t, pgds_full_flux, S, vacuum_eps);

    double worst = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
        const double u0 = velocity_of(before.rho[i], before.w[i], vacuum_eps);
        const double u1 = velocity_of(after.rho[i], after.w[i], vacuum_eps);
        const double r = after.rho[i] * S(u1) - before.rho[i] * S(u0) +
                         lam * (fs[i + 1] - fs[i]);
        worst = std::max(worst, r);
    }
    return worst;
}

ConservationAudit audit_conservation(const RunStats& st) {
    ConservationAudit a;
    a.mass_initial = st.mass_initial;
    a.mass_final = st.mass_final;
    a.momentum_initial = st.momentum_initial;
    a.momentum_final = st.momentum_final;

    const double mden = std::max(std::fabs(st.mass_initial), DBL_MIN);
    a.mass_drift_rel = (st.mass_final - st.mass_initial) / mden;
    a.mass_corrected_rel =
        (st.mass_final - st.mass_initial + st.boundary_mass_integral) / mden;

    const double wden = std::max({std::fabs(st.momentum_initial),
                                  st.momentum_abs_initial, DBL_MIN});
    a.momentum_drift_rel = (st.momentum_final - st.momentum_initial) / wden;
    a.momentum_corrected_rel = (st.momentum_final - st.momentum_initial +
                                st.boundary_momentum_integral) / wden;
    return a;
}

}  // namespace dfv

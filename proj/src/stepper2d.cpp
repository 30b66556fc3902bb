#include "stepper2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace dfv {

namespace {

double axis_max_speed(const std::vector<double>& rho,
                      const std::vector<double>& w, const ModelSpec& model,
                      double t, double vacuum_eps) {
    double ms = 0.0;
    for (std::size_t k = 0; k < rho.size(); ++k) {
        const double u = velocity_of(rho[k], w[k], vacuum_eps);
        ms = std::max(ms, std::fabs(model.g(u) + model.beta * t));
    }
    return ms;
}

State1D line_step(const State1D& line, const ModelSpec& model,
                  const SchemeConfig& cfg, double h, double t, double dt,
                  StepReport* rep, std::vector<double>* passive) {
    return cfg.order == 2
               ? step_muscl_ssprk2(line, model, cfg, h, t, dt, rep, passive)
               : step_first_order(line, model, cfg, h, t, dt, rep, passive);
}

}  // namespace

double max_speed_x(const State2D& s, const ModelSpec& model, double t,
                   double vacuum_eps) {
    return axis_max_speed(s.rho, s.wx, model, t, vacuum_eps);
}

double max_speed_y(const State2D& s, const ModelSpec& model, double t,
                   double vacuum_eps) {
    return axis_max_speed(s.rho, s.wy, model, t, vacuum_eps);
}

void sweep_x(State2D& s, const ModelSpec& model, const SchemeConfig& cfg,
             const Grid2D& grid, double t, double dt, BoundaryFlow2D* flow) {
    const int mx = s.mx, my = s.my;
    const double hx = grid.hx(), hy = grid.hy();
    State1D line(mx);
    std::vector<double> passive(mx);
    for (int j = 0; j < my; ++j) {
        for (int i = 0; i < mx; ++i) {
            const std::size_t k = s.idx(i, j);
            line.rho[i] = s.rho[k];
            line.w[i] = s.wx[k];
            passive[i] = s.wy[k];
        }
        StepReport rep;
        const State1D out =
            line_step(line, model, cfg, hx, t, dt, &rep, &passive);
        for (int i = 0; i < mx; ++i) {
            const std::size_t k = s.idx(i, j);
            s.rho[k] = out.rho[i];
            s.wx[k] = out.w[i];
            s.wy[k] = passive[i];
        }
        if (flow) {
            flow->mass += dt * hy * (rep.flux_rho[mx] - rep.flux_rho[0]);
            flow->wx += dt * hy * (rep.flux_w[mx] - rep.flux_w[0]);
            flow->wy += dt * hy * (rep.flux_passive[mx] - rep.flux_passive[0]);
        }
    }
}

void sweep_y(State2D& s, const ModelSpec& model, const SchemeConfig& cfg,
             const Grid2D& grid, double t, double dt, BoundaryFlow2D* flow) {
    const int mx = s.mx, my = s.my;
    const double hx = grid.hx(), hy = grid.hy();
    State1D line(my);
    std::vector<double> passive(my);
    for (int i = 0; i < mx; ++i) {
        for (int j = 0; j < my; ++j) {
            const std::size_t k = s.idx(i, j);
            line.rho[j] = s.rho[k];
            line.w[j] = s.wy[k];
            passive[j] = s.wx[k];
        }
        StepReport rep;
        const State1D out =
            line_step(line, model, cfg, hy, t, dt, &rep, &passive);
        for (int j = 0; j < my; ++j) {
            const std::size_t k = s.idx(i, j);
            s.rho[k] = out.rho[j];
            s.wy[k] = out.w[j];
            s.wx[k] = passive[j];
        }
        if (flow) {
            flow->mass += dt * hx * (rep.flux_rho[my] - rep.flux_rho[0]);
            flow->wy += dt * hx * (rep.flux_w[my] - rep.flux_w[0]);
            flow->wx += dt * hx * (rep.flux_passive[my] - rep.flux_passive[0]);
        }
    }
}

Run2DResult run_2d(const State2D& init, const ModelSpec& model,
                   const SchemeConfig& cfg, const Grid2D& grid, double T,
                   const std::vector<double>& snapshot_times) {
    model.validate();
    cfg.validate();
    const std::size_t n = static_cast<std::size_t>(grid.mx) * grid.my;
    if (init.mx != grid.mx || init.my != grid.my || init.rho.size() != n ||
        init.wx.size() != n || init.wy.size() != n)
        throw config_error("run: state shape does not match the grid");
    if (!(T > 0.0) || !std::isfinite(T))
        throw config_error("run: T must be positive and finite");
    for (std::size_t k = 0; k < snapshot_times.size(); ++k) {
        const double tk = snapshot_times[k];
        if (!std::isfinite(tk) || tk < 0.0 || tk > T)
            throw config_error("run: snapshot time outside [0, T]");
        if (k > 0 && !(tk > snapshot_times[k - 1]))
            throw config_error("run: snapshot times must be strictly increasing");
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (!(init.rho[k] >= 0.0) || !std::isfinite(init.rho[k]) ||
            !std::isfinite(init.wx[k]) || !std::isfinite(init.wy[k]))
            throw config_error("run: initial state must be finite with rho >= 0");
    }

    std::vector<double> events = snapshot_times;
    if (events.empty() || events.back() != T) events.push_back(T);

    const double hx = grid.hx(), hy = grid.hy();
    const double cell = hx * hy;
    Run2DResult res;
    RunStats2D& st = res.stats;
    st.mass_initial = cell * sum_kahan(init.rho);
    st.momentum_x_initial = cell * sum_kahan(init.wx);
    st.momentum_y_initial = cell * sum_kahan(init.wy);
    st.momentum_x_abs_initial = cell * sum_abs_kahan(init.wx);
    st.momentum_y_abs_initial = cell * sum_abs_kahan(init.wy);
    st.rho_min = std::numeric_limits<double>::infinity();
    st.u_min = st.v_min = std::numeric_limits<double>::infinity();
    st.u_max = st.v_max = -std::numeric_limits<double>::infinity();

    State2D state = init;
    auto track = [&](const State2D& s) {
        for (std::size_t k = 0; k < n; ++k) {
            st.rho_min = std::min(st.rho_min, s.rho[k]);
            st.wy_abs_max = std::max(st.wy_abs_max, std::fabs(s.wy[k]));
            if (s.rho[k] > cfg.vacuum_eps) {
                const double u = velocity_of(s.rho[k], s.wx[k], cfg.vacuum_eps);
                const double v = velocity_of(s.rho[k], s.wy[k], cfg.vacuum_eps);
                st.u_min = std::min(st.u_min, u);
                st.u_max = std::max(st.u_max, u);
                st.v_min = std::min(st.v_min, v);
                st.v_max = std::max(st.v_max, v);
            }
        }
    };
    track(state);

    double t = 0.0;
    std::size_t ev = 0;
    if (!snapshot_times.empty() && snapshot_times[0] == 0.0) {
        res.snapshots.push_back({0.0, state});
        ev = 1;
    }

    while (t < T) {
        while (ev < events.size() && events[ev] <= t) ++ev;
        const double target = (ev < events.size()) ? events[ev] : T;
        const double remaining = target - t;
        if (!(remaining > 0.0)) break;

        const double msx = max_speed_x(state, model, t, cfg.vacuum_eps);
        const double msy = max_speed_y(state, model, t, cfg.vacuum_eps);
        const double denom = msx / hx + msy / hy;
        double dt = std::min(hx, hy);  // cap for the all-quiet case
        if (denom > 0.0) dt = std::min(dt, cfg.cfl / denom);
        dt = std::min(dt, remaining);

        const bool x_first = (st.steps % 2 == 0);
        if (x_first) {
            sweep_x(state, model, cfg, grid, t, dt, &st.boundary);
            sweep_y(state, model, cfg, grid, t, dt, &st.boundary);
        } else {
            sweep_y(state, model, cfg, grid, t, dt, &st.boundary);
            sweep_x(state, model, cfg, grid, t, dt, &st.boundary);
        }
        ++st.steps;
        track(state);

        if (dt == remaining) {
            t = target;
            res.snapshots.push_back({target, state});
            ++ev;
        } else {
            t += dt;
            if (t >= target) {
                t = target;
                res.snapshots.push_back({target, state});
                ++ev;
            }
        }
    }

    if (st.u_min > st.u_max) st.u_min = st.u_max = 0.0;
    if (st.v_min > st.v_max) st.v_min = st.v_max = 0.0;
    st.mass_final = cell * sum_kahan(state.rho);
    st.momentum_x_final = cell * sum_kahan(state.wx);
    st.momentum_y_final = cell * sum_kahan(state.wy);
    return res;
}

}  // namespace dfv

#include "stepper1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "diagnostics.hpp"

namespace dfv {

double max_speed(const State1D& s, const ModelSpec& model, double t,
                 double vacuum_eps) {
    const double shift = model.beta * t;
    double ms = 0.0;
    for (int i = 0; i < s.size(); ++i) {
        const double u = velocity_of(s.rho[i], s.w[i], vacuum_eps);
        ms = std::max(ms, std::fabs(model.g(u) + shift));
    }
    return ms;
}

TimeStep select_dt(double max_speed_val, double h, double cfl, double remaining) {
    if (!(remaining > 0.0))
        throw numeric_error("select_dt: no time left to advance");
    if (!(max_speed_val >= 0.0) || !std::isfinite(max_speed_val))
        throw numeric_error("select_dt: bad max speed");
    double dt = h;  // cap: keeps steps finite when the state is at rest
    if (max_speed_val > 0.0) dt = std::min(dt, cfl * h / max_speed_val);
    dt = std::min(dt, remaining);
    return {dt, dt / h};
}

namespace {

double minmod2(double a, double b) {
    if (a > 0.0 && b > 0.0) return std::min(a, b);
    if (a < 0.0 && b < 0.0) return std::max(a, b);
    return 0.0;
}

double maxmod2(double a, double b) {
    if (a > 0.0 && b > 0.0) return std::max(a, b);
    if (a < 0.0 && b < 0.0) return std::min(a, b);
    return 0.0;
}

double limiter_value(double dm, double dp, Limiter lim) {
    switch (lim) {
        case Limiter::zero:
            return 0.0;
        case Limiter::minmod:
            return minmod2(dm, dp);
        case Limiter::superbee:
            return maxmod2(minmod2(2.0 * dm, dp), minmod2(dm, 2.0 * dp));
    }
    return 0.0;
}

// the hard stability bound for the stage type; config cfl must sit under it
void check_cfl(double lam, double ms, int order) {
    const double bound = (order == 2) ? 1.0 / 3.0 : 1.0;
    if (lam * ms > bound * (1.0 + 1e-9))
        throw numeric_error("step: CFL violation, dt too large for current speeds");
}

std::vector<double> passive_fluxes(const std::vector<double>& rho_padded,
                                   const std::vector<double>& passive_interior,
                                   const std::vector<double>& frho,
                                   double vacuum_eps) {
    const int m = static_cast<int>(passive_interior.size());
    const auto pw = with_ghost_cells(passive_interior);
    std::vector<double> fp(m + 1, 0.0);
    for (int j = 0; j <= m; ++j) {
        const double F = frho[j];
        if (F > 0.0)
            fp[j] = velocity_of(rho_padded[j + 1], pw[j + 1], vacuum_eps) * F;
        else if (F < 0.0)
            fp[j] = velocity_of(rho_padded[j + 2], pw[j + 2], vacuum_eps) * F;
    }
    return fp;
}

void transport_passive(std::vector<double>& passive, const std::vector<double>& fp,
                       double lam) {
    const int m = static_cast<int>(passive.size());
    for (int i = 0; i < m; ++i) {
        const double p = passive[i] - lam * (fp[i + 1] - fp[i]);
        if (!std::isfinite(p))
            throw numeric_error("step: non-finite passive momentum at cell " +
                                std::to_string(i));
        passive[i] = p;
    }
}

}  // namespace

std::vector<double> limited_slopes(const std::vector<double>& padded, Limiter lim) {
    const size_t n = padded.size();
    std::vector<double> sig(n, 0.0);
    for (size_t p = 1; p + 1 < n; ++p) {
        const double dm = padded[p] - padded[p - 1];
        const double dp = padded[p + 1] - padded[p];
        sig[p] = 0.5 * limiter_value(dm, dp, lim);
    }
    return sig;
}

Reconstruction reconstruct(const std::vector<double>& rho_padded,
                           const std::vector<double>& u_padded, Limiter lim) {
    const int m = static_cast<int>(rho_padded.size()) - 4;
    auto sig_rho = limited_slopes(rho_padded, lim);
    const auto sig_u = limited_slopes(u_padded, lim);
    // clip density slopes so both faces stay nonnegative
    for (size_t p = 0; p < sig_rho.size(); ++p) {
        const double cap = rho_padded[p];
        sig_rho[p] = std::clamp(sig_rho[p], -cap, cap);
    }
    Reconstruction rec;
    rec.rho.left.resize(m + 1);
    rec.rho.right.resize(m + 1);
    rec.u.left.resize(m + 1);
    rec.u.right.resize(m + 1);
    for (int j = 0; j <= m; ++j) {
        const int pl = j + 1, pr = j + 2;
        rec.rho.left[j] = rho_padded[pl] + sig_rho[pl];
        rec.rho.right[j] = rho_padded[pr] - sig_rho[pr];
        rec.u.left[j] = u_padded[pl] + sig_u[pl];
        rec.u.right[j] = u_padded[pr] - sig_u[pr];
    }
    return rec;
}

State1D step_first_order(const State1D& s, const ModelSpec& model,
                         const SchemeConfig& cfg, double h, double t, double dt,
                         StepReport* report, std::vector<double>* passive) {
    const int m = s.size();
    if (m < 4) throw numeric_error("step: need at least 4 cells");
    if (passive && static_cast<int>(passive->size()) != m)
        throw numeric_error("step: passive field size mismatch");
    if (!(dt > 0.0) || !(h > 0.0))
        throw numeric_error("step: dt and h must be positive");

    const auto rho_p = with_ghost_cells(s.rho);
    const auto w_p = with_ghost_cells(s.w);
    const int n = m + 4;
    std::vector<double> u_p(n);
    for (int p = 0; p < n; ++p)
        u_p[p] = velocity_of(rho_p[p], w_p[p], cfg.vacuum_eps);

    const double shift = model.beta * t;
    double ms = 0.0;
    for (int i = 0; i < m; ++i)
        ms = std::max(ms, std::fabs(model.g(u_p[i + 2]) + shift));
    const double lam = dt / h;
    check_cfl(lam, ms, 1);

    const auto traces = cell_traces(rho_p, u_p, model, t, cfg.vacuum_eps);
    std::vector<double> frho(m + 1), fw(m + 1);
    for (int j = 0; j <= m; ++j) {
        frho[j] = density_flux(traces[j]);
        fw[j] = momentum_flux(traces[j], model, t, cfg.pgds_full_flux,
                              cfg.vacuum_eps);
    }

    State1D out(m);
    for (int i = 0; i < m; ++i) {
        const double r = s.rho[i] - lam * (frho[i + 1] - frho[i]);
        const double w = s.w[i] - lam * (fw[i + 1] - fw[i]);
        if (!(r >= 0.0) || !std::isfinite(r))
            throw numeric_error("step: negative or non-finite density at cell " +
                                std::to_string(i));
        if (!std::isfinite(w))
            throw numeric_error("step: non-finite momentum at cell " +
                                std::to_string(i));
        out.rho[i] = r;
        out.w[i] = w;
    }

    std::vector<double> fp;
    if (passive) {
        fp = passive_fluxes(rho_p, *passive, frho, cfg.vacuum_eps);
        transport_passive(*passive, fp, lam);
    }
    if (report) {
        report->dt = dt;
        report->max_speed = ms;
        report->flux_rho = std::move(frho);
        report->flux_w = std::move(fw);
        report->flux_passive = std::move(fp);
    }
    return out;
}

State1D muscl_euler_stage(const State1D& s, const ModelSpec& model,
                          const SchemeConfig& cfg, double h, double t, double dt,
                          Limiter lim, StepReport* report,
                          std::vector<double>* passive) {
    const int m = s.size();
    if (m < 4) throw numeric_error("step: need at least 4 cells");
    if (passive && static_cast<int>(passive->size()) != m)
        throw numeric_error("step: passive field size mismatch");
    if (!(dt > 0.0) || !(h > 0.0))
        throw numeric_error("step: dt and h must be positive");

    const auto rho_p = with_ghost_cells(s.rho);
    const auto w_p = with_ghost_cells(s.w);
    const int n = m + 4;
    std::vector<double> u_p(n);
    for (int p = 0; p < n; ++p)
        u_p[p] = velocity_of(rho_p[p], w_p[p], cfg.vacuum_eps);

    const double shift = model.beta * t;
    double ms = 0.0;
    for (int i = 0; i < m; ++i)
        ms = std::max(ms, std::fabs(model.g(u_p[i + 2]) + shift));
    const double lam = dt / h;
    check_cfl(lam, ms, lim == Limiter::zero ? 1 : cfg.order);

    const auto rec = reconstruct(rho_p, u_p, lim);
    std::vector<double> frho(m + 1), fw(m + 1);
    for (int j = 0; j <= m; ++j) {
        const double rl = rec.rho.left[j], rr = rec.rho.right[j];
        const double ul = rec.u.left[j], ur = rec.u.right[j];
        const auto tr = build_trace(rl, rl * ul, rr, rr * ur, model, t,
                                    cfg.vacuum_eps);
        frho[j] = density_flux(tr);
        fw[j] = momentum_flux(tr, model, t, cfg.pgds_full_flux, cfg.vacuum_eps);
    }

    State1D out(m);
    for (int i = 0; i < m; ++i) {
        const double r = s.rho[i] - lam * (frho[i + 1] - frho[i]);
        const double w = s.w[i] - lam * (fw[i + 1] - fw[i]);
        if (!(r >= 0.0) || !std::isfinite(r))
            throw numeric_error("step: negative or non-finite density at cell " +
                                std::to_string(i));
        if (!std::isfinite(w))
            throw numeric_error("step: non-finite momentum at cell " +
                                std::to_string(i));
        out.rho[i] = r;
        out.w[i] = w;
    }

    std::vector<double> fp;
    if (passive) {
        fp = passive_fluxes(rho_p, *passive, frho, cfg.vacuum_eps);
        transport_passive(*passive, fp, lam);
    }
    if (report) {
        report->dt = dt;
        report->max_speed = ms;
        report->flux_rho = std::move(frho);
        report->flux_w = std::move(fw);
        report->flux_passive = std::move(fp);
    }
    return out;
}

State1D step_muscl_ssprk2(const State1D& s, const ModelSpec& model,
                          const SchemeConfig& cfg, double h, double t, double dt,
                          StepReport* report, std::vector<double>* passive) {
    const int m = s.size();
    StepReport r1, r2;
    std::vector<double> pass_work;
    std::vector<double>* pw = nullptr;
    if (passive) {
        pass_work = *passive;
        pw = &pass_work;
    }
    // both stages use dt and the friction speeds frozen at the step start t
    const State1D u1 =
        muscl_euler_stage(s, model, cfg, h, t, dt, cfg.limiter, &r1, pw);
    const State1D u2 =
        muscl_euler_stage(u1, model, cfg, h, t, dt, cfg.limiter, &r2, pw);

    State1D out(m);
    for (int i = 0; i < m; ++i) {
        out.rho[i] = 0.5 * (s.rho[i] + u2.rho[i]);
        out.w[i] = 0.5 * (s.w[i] + u2.w[i]);
    }
    if (passive) {
        for (int i = 0; i < m; ++i)
            (*passive)[i] = 0.5 * ((*passive)[i] + pass_work[i]);
    }
    if (report) {
        report->dt = dt;
        report->max_speed = r1.max_speed;
        // effective conservative fluxes of the composite step
        auto avg = [](std::vector<double>& a, const std::vector<double>& b) {
            for (size_t k = 0; k < a.size(); ++k) a[k] = 0.5 * (a[k] + b[k]);
        };
        avg(r1.flux_rho, r2.flux_rho);
        avg(r1.flux_w, r2.flux_w);
        avg(r1.flux_passive, r2.flux_passive);
        report->flux_rho = std::move(r1.flux_rho);
        report->flux_w = std::move(r1.flux_w);
        report->flux_passive = std::move(r1.flux_passive);
    }
    return out;
}

Run1DResult run_1d(const State1D& init, const ModelSpec& model,
                   const SchemeConfig& cfg, const Grid1D& grid, double T,
                   const std::vector<double>& snapshot_times) {
    model.validate();
    cfg.validate();
    if (init.size() != grid.m || static_cast<int>(init.w.size()) != grid.m)
        throw config_error("run: state size does not match the grid");
    if (!(T > 0.0) || !std::isfinite(T))
        throw config_error("run: T must be positive and finite");
    for (size_t k = 0; k < snapshot_times.size(); ++k) {
        const double tk = snapshot_times[k];
        if (!std::isfinite(tk) || tk < 0.0 || tk > T)
            throw config_error("run: snapshot time outside [0, T]");
        if (k > 0 && !(tk > snapshot_times[k - 1]))
            throw config_error("run: snapshot times must be strictly increasing");
    }
    for (int i = 0; i < grid.m; ++i) {
        if (!(init.rho[i] >= 0.0) || !std::isfinite(init.rho[i]) ||
            !std::isfinite(init.w[i]))
            throw config_error("run: initial state must be finite with rho >= 0");
    }

    std::vector<double> events = snapshot_times;
    if (events.empty() || events.back() != T) events.push_back(T);

    const double h = grid.h();
    Run1DResult res;
    RunStats& st = res.stats;
    st.mass_initial = h * sum_kahan(init.rho);
    st.momentum_initial = h * sum_kahan(init.w);
    st.momentum_abs_initial = h * sum_abs_kahan(init.w);
    st.rho_min = std::numeric_limits<double>::infinity();
    st.u_min = std::numeric_limits<double>::infinity();
    st.u_max = -std::numeric_limits<double>::infinity();

    State1D state = init;
    auto track = [&](const State1D& s) {
        for (int i = 0; i < grid.m; ++i) {
            st.rho_min = std::min(st.rho_min, s.rho[i]);
            if (s.rho[i] > cfg.vacuum_eps) {
                const double u = velocity_of(s.rho[i], s.w[i], cfg.vacuum_eps);
                st.u_min = std::min(st.u_min, u);
                st.u_max = std::max(st.u_max, u);
            }
        }
    };
    track(state);

    double t = 0.0;
    size_t ev = 0;
    if (!snapshot_times.empty() && snapshot_times[0] == 0.0) {
        res.snapshots.push_back({0.0, state});
        ev = 1;
    }

    while (t < T) {
        while (ev < events.size() && events[ev] <= t) ++ev;
        const double target = (ev < events.size()) ? events[ev] : T;
        const double remaining = target - t;
        if (!(remaining > 0.0)) break;

        const double ms = max_speed(state, model, t, cfg.vacuum_eps);
        const TimeStep ts = select_dt(ms, h, cfg.cfl, remaining);

        State1D prev;
        if (cfg.entropy_check) prev = state;

        StepReport rep;
        state = (cfg.order == 2)
                    ? step_muscl_ssprk2(state, model, cfg, h, t, ts.dt, &rep)
                    : step_first_order(state, model, cfg, h, t, ts.dt, &rep);
        ++st.steps;
        st.boundary_mass_integral +=
            ts.dt * (rep.flux_rho[grid.m] - rep.flux_rho[0]);
        st.boundary_momentum_integral +=
            ts.dt * (rep.flux_w[grid.m] - rep.flux_w[0]);
        track(state);

        if (cfg.entropy_check) {
            for (const auto& S : cfg.entropies) {
                const double r =
                    entropy_residual(prev, state, model, h, t, ts.dt,
                                     cfg.pgds_full_flux, S, cfg.vacuum_eps);
                auto [it, fresh] = st.entropy_residual_max.try_emplace(
                    S.label(), -std::numeric_limits<double>::infinity());
                it->second = std::max(it->second, r);
            }
        }

        if (ts.dt == remaining) {
            t = target;
            res.snapshots.push_back({target, state});
            ++ev;
        } else {
            t += ts.dt;
            if (t >= target) {
                // accumulated rounding landed us on the event anyway
                t = target;
                res.snapshots.push_back({target, state});
                ++ev;
            }
        }
    }

    if (st.u_min > st.u_max) st.u_min = st.u_max = 0.0;  // never left vacuum
    st.mass_final = h * sum_kahan(state.rho);
    st.momentum_final = h * sum_kahan(state.w);
    return res;
}

}  // namespace dfv

#include "experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "diagnostics.hpp"
#include "exact.hpp"
#include "io.hpp"

namespace dfv {

namespace {

std::string snap_name(std::size_t k, const char* ext) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "snap_%02zu.%s", k, ext);
    return buf;
}

std::string snap_key(std::size_t k, const char* field) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "snapshot.%02zu.%s", k, field);
    return buf;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string entropy_echo(const SchemeConfig& sch) {
    if (!sch.entropy_check) return "off";
    std::string out;
    for (const auto& S : sch.entropies) {
        if (!out.empty()) out += ',';
        out += S.label();
    }
    return out.empty() ? "on" : out;
}

void echo_config(const ExperimentConfig& cfg,
                 std::map<std::string, std::string>& m) {
    m["version"] = version_string();
    m["preset"] = cfg.preset_name.empty() ? "custom" : cfg.preset_name;
    m["model.kind"] = model_kind_name(cfg.model.kind);
    m["model.g_power"] = std::to_string(cfg.model.g_power);
    m["model.beta"] = format_sci(cfg.model.beta);
    m["model.s"] = format_sci(cfg.model.s);
    m["model.alpha"] = format_sci(cfg.model.alpha);
    m["grid.xmin"] = format_sci(cfg.xmin);
    m["grid.xmax"] = format_sci(cfg.xmax);
    m["grid.m"] = std::to_string(cfg.m);
    if (cfg.two_d()) {
        m["grid.ymin"] = format_sci(*cfg.ymin);
        m["grid.ymax"] = format_sci(*cfg.ymax);
        m["grid.my"] = std::to_string(*cfg.my);
        m["scheme.splitting"] = "alternating";
    }
    m["scheme.order"] = std::to_string(cfg.scheme.order);
    m["scheme.limiter"] = limiter_name(cfg.scheme.limiter);
    m["scheme.cfl"] = format_sci(cfg.scheme.cfl);
    m["scheme.vacuum_eps"] = format_sci(cfg.scheme.vacuum_eps);
    m["scheme.pgds_full_flux"] = bool_str(cfg.scheme.pgds_full_flux);
    m["scheme.entropy_check"] = entropy_echo(cfg.scheme);
    m["flux.overcompressive_zero"] = "true";
    switch (cfg.init.type) {
        case InitSpec::Type::riemann:
            m["init.type"] = "riemann";
            m["init.rho_l"] = format_sci(*cfg.init.rho_l);
            m["init.u_l"] = format_sci(*cfg.init.u_l);
            m["init.rho_r"] = format_sci(*cfg.init.rho_r);
            m["init.u_r"] = format_sci(*cfg.init.u_r);
            break;
        case InitSpec::Type::regions:
            m["init.type"] = "regions";
            m["init.region_count"] = std::to_string(cfg.init.regions.size());
            break;
        case InitSpec::Type::named:
            m["init.type"] = "named";
            m["init.name"] = cfg.init.name;
            break;
        case InitSpec::Type::none:
            break;
    }
    m["run.T"] = format_sci(cfg.T);
    m["run.emit_svg"] = bool_str(cfg.emit_svg);
    for (std::size_t k = 0; k < cfg.reference_locations.size(); ++k) {
        char key[48];
        std::snprintf(key, sizeof key, "reference.location.%02zu", k);
        m[key] = format_sci(cfg.reference_locations[k]);
    }
}

void manifest_1d(const ExperimentConfig& cfg, const Run1DResult& run,
                 std::map<std::string, std::string>& m) {
    const Grid1D grid = cfg.grid_1d();
    const RunStats& st = run.stats;
    const ConservationAudit audit = audit_conservation(st);

    m["steps"] = std::to_string(st.steps);
    m["conservation.mass_initial"] = format_sci(audit.mass_initial);
    m["conservation.mass_final"] = format_sci(audit.mass_final);
    m["conservation.mass_drift_rel"] = format_sci(audit.mass_drift_rel);
    m["conservation.mass_corrected_rel"] = format_sci(audit.mass_corrected_rel);
    m["conservation.momentum_initial"] = format_sci(audit.momentum_initial);
    m["conservation.momentum_final"] = format_sci(audit.momentum_final);
    m["conservation.momentum_drift_rel"] = format_sci(audit.momentum_drift_rel);
    m["conservation.momentum_corrected_rel"] =
        format_sci(audit.momentum_corrected_rel);
    m["range.rho_min"] = format_sci(st.rho_min);
    m["range.u_min"] = format_sci(st.u_min);
    m["range.u_max"] = format_sci(st.u_max);
    for (const auto& [label, r] : st.entropy_residual_max)
        m["entropy.max_residual." + label] = format_sci(r);

    // closed-form references where they exist
    const auto rd = config_riemann_data(cfg);
    std::optional<DeltaShockParams> delta;
    std::optional<VacuumProfile> vac;
    if (rd) {
        const ModelKind k = cfg.model.kind;
        if ((k == ModelKind::PGD || k == ModelKind::PGDS) && rd->u_l > rd->u_r)
            delta = pgd_delta_params(*rd, cfg.model.beta);
        else if (k == ModelKind::CGD && rd->u_l >= rd->u_r)
            delta = cgd_delta_params(*rd, cfg.model.s, cfg.model.alpha);
        else if ((k == ModelKind::PGD || k == ModelKind::PGDS) &&
                 rd->u_l < rd->u_r)
            vac = pgd_vacuum_exact(*rd, cfg.model.beta);
    }
    if (delta) {
        m["exact.w_delta_rate"] = format_sci(delta->w_delta_rate);
        m["exact.weight_T"] = format_sci(delta->weight(cfg.T));
        if (delta->has_path) {
            m["exact.v_delta"] = format_sci(delta->v_delta);
            m["exact.path_T"] = format_sci(delta->position(cfg.T));
        }
    }

    const double bg_l = rd ? rd->rho_l : 0.0;
    const double bg_r = rd ? rd->rho_r : 0.0;
    m["delta.window"] = "10";

    for (std::size_t k = 0; k < run.snapshots.size(); ++k) {
        const Snapshot1D& snap = run.snapshots[k];
        m[snap_key(k, "time")] = format_sci(snap.time);
        m[snap_key(k, "file")] = snap_name(k, "csv");
        const DeltaMeasure dm =
            delta_measure(snap.state.rho, grid, bg_l, bg_r);
        m[snap_key(k, "delta_found")] = bool_str(dm.found);
        if (dm.found) {
            m[snap_key(k, "delta_location")] = format_sci(dm.location);
            m[snap_key(k, "delta_weight")] = format_sci(dm.weight);
        }
        if (delta) {
            m[snap_key(k, "exact_weight")] = format_sci(delta->weight(snap.time));
            if (delta->has_path)
                m[snap_key(k, "exact_location")] =
                    format_sci(delta->position(snap.time));
        }
        if (vac) {
            const auto exact_rho = vac->cell_averages(grid, snap.time);
            m[snap_key(k, "l1_error")] =
                format_sci(l1_error(snap.state.rho, exact_rho, grid.h()));
        }
    }
}

void manifest_2d(const ExperimentConfig& cfg, const Run2DResult& run,
                 std::map<std::string, std::string>& m) {
    const Grid2D grid = cfg.grid_2d();
    const RunStats2D& st = run.stats;

    m["steps"] = std::to_string(st.steps);
    m["conservation.mass_initial"] = format_sci(st.mass_initial);
    m["conservation.mass_final"] = format_sci(st.mass_final);
    const double mden = std::max(std::fabs(st.mass_initial), 1e-308);
    m["conservation.mass_drift_rel"] =
        format_sci((st.mass_final - st.mass_initial) / mden);
    m["conservation.mass_corrected_rel"] = format_sci(
        (st.mass_final - st.mass_initial + st.boundary.mass) / mden);
    const double xden = std::max({std::fabs(st.momentum_x_initial),
                                  st.momentum_x_abs_initial, 1e-308});
    const double yden = std::max({std::fabs(st.momentum_y_initial),
                                  st.momentum_y_abs_initial, 1e-308});
    m["conservation.momentum_x_initial"] = format_sci(st.momentum_x_initial);
    m["conservation.momentum_x_final"] = format_sci(st.momentum_x_final);
    m["conservation.momentum_x_corrected_rel"] = format_sci(
        (st.momentum_x_final - st.momentum_x_initial + st.boundary.wx) / xden);
    m["conservation.momentum_y_initial"] = format_sci(st.momentum_y_initial);
    m["conservation.momentum_y_final"] = format_sci(st.momentum_y_final);
    m["conservation.momentum_y_corrected_rel"] = format_sci(
        (st.momentum_y_final - st.momentum_y_initial + st.boundary.wy) / yden);
    m["range.rho_min"] = format_sci(st.rho_min);
    m["range.u_min"] = format_sci(st.u_min);
    m["range.u_max"] = format_sci(st.u_max);
    m["range.v_min"] = format_sci(st.v_min);
    m["range.v_max"] = format_sci(st.v_max);
    m["range.wy_abs_max"] = format_sci(st.wy_abs_max);

    for (std::size_t k = 0; k < run.snapshots.size(); ++k) {
        const Snapshot2D& snap = run.snapshots[k];
        m[snap_key(k, "time")] = format_sci(snap.time);
        m[snap_key(k, "file")] = snap_name(k, "csv");
        std::size_t arg = 0;
        for (std::size_t q = 1; q < snap.state.rho.size(); ++q)
            if (snap.state.rho[q] > snap.state.rho[arg]) arg = q;
        const int ai = static_cast<int>(arg) % grid.mx;
        const int aj = static_cast<int>(arg) / grid.mx;
        m[snap_key(k, "rho_max")] = format_sci(snap.state.rho[arg]);
        m[snap_key(k, "rho_max_x")] = format_sci(grid.cell_center_x(ai));
        m[snap_key(k, "rho_max_y")] = format_sci(grid.cell_center_y(aj));
    }
}

}  // namespace

ExperimentResult run_experiment_in_memory(const ExperimentConfig& cfg) {
    ExperimentResult res;
    res.cfg = cfg;
    echo_config(cfg, res.manifest);
    if (cfg.two_d()) {
        const State2D init = build_initial_2d(cfg);
        res.run2d = run_2d(init, cfg.model, cfg.scheme, cfg.grid_2d(), cfg.T,
                           cfg.snapshots);
        manifest_2d(cfg, *res.run2d, res.manifest);
    } else {
        const State1D init = build_initial_1d(cfg);
        res.run1d = run_1d(init, cfg.model, cfg.scheme, cfg.grid_1d(), cfg.T,
                           cfg.snapshots);
        manifest_1d(cfg, *res.run1d, res.manifest);
    }
    return res;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    ExperimentResult res = run_experiment_in_memory(cfg);
    create_directories(cfg.outdir);
    const auto path = [&](const std::string& name) {
        return cfg.outdir + "/" + name;
    };
    if (res.run1d) {
        const Grid1D grid = cfg.grid_1d();
        for (std::size_t k = 0; k < res.run1d->snapshots.size(); ++k) {
            const Snapshot1D& snap = res.run1d->snapshots[k];
            write_text_file(path(snap_name(k, "csv")),
                            csv_1d(grid, snap.state, cfg.scheme.vacuum_eps));
            res.files_written.push_back(path(snap_name(k, "csv")));
            if (cfg.emit_svg) {
                write_text_file(path(snap_name(k, "svg")),
                                svg_1d(grid, snap.state, cfg.scheme.vacuum_eps));
                res.files_written.push_back(path(snap_name(k, "svg")));
            }
        }
    } else {
        const Grid2D grid = cfg.grid_2d();
        for (std::size_t k = 0; k < res.run2d->snapshots.size(); ++k) {
            const Snapshot2D& snap = res.run2d->snapshots[k];
            write_text_file(path(snap_name(k, "csv")),
                            csv_2d(grid, snap.state, cfg.scheme.vacuum_eps));
            res.files_written.push_back(path(snap_name(k, "csv")));
            if (cfg.emit_svg) {
                write_text_file(path(snap_name(k, "svg")),
                                svg_2d(grid, snap.state));
                res.files_written.push_back(path(snap_name(k, "svg")));
            }
        }
    }
    write_text_file(path("manifest.txt"), manifest_text(res.manifest));
    res.files_written.push_back(path("manifest.txt"));
    return res;
}

std::vector<ConvergenceRow> run_convergence(const ExperimentConfig& base,
                                            int levels) {
    if (base.two_d())
        throw config_error("convergence: only 1D configurations are supported");
    if (levels < 1 || levels > 12)
        throw config_error("convergence: levels must be in [1, 12]");
    const auto rd = config_riemann_data(base);
    const bool vacuum_model = base.model.kind == ModelKind::PGD ||
                              base.model.kind == ModelKind::PGDS;
    if (!rd || !vacuum_model || !(rd->u_l < rd->u_r))
        throw config_error(
            "convergence: needs Riemann data opening a vacuum (u_l < u_r) "
            "with a closed-form solution");
    const VacuumProfile prof = pgd_vacuum_exact(*rd, base.model.beta);

    std::vector<ConvergenceRow> rows;
    for (int lvl = 0; lvl < levels; ++lvl) {
        ExperimentConfig cfg = base;
        cfg.m = base.m << lvl;
        cfg.snapshots.clear();
        cfg.reference_locations.clear();
        const Grid1D grid = cfg.grid_1d();
        const Run1DResult run = run_1d(build_initial_1d(cfg), cfg.model,
                                       cfg.scheme, grid, cfg.T, {});
        const State1D& fin = run.snapshots.back().state;
        ConvergenceRow row;
        row.m = cfg.m;
        row.h = grid.h();
        row.l1 = l1_error(fin.rho, prof.cell_averages(grid, cfg.T), grid.h());
        if (!rows.empty()) {
            const ConvergenceRow& prev = rows.back();
            row.rate = std::log(prev.l1 / row.l1) / std::log(prev.h / row.h);
        }
        rows.push_back(row);
    }
    return rows;
}

std::string convergence_table(const std::vector<ConvergenceRow>& rows) {
    std::string out = "       m               h        L1_error       EOC\n";
    char buf[128];
    for (const ConvergenceRow& r : rows) {
        if (r.rate) {
            std::snprintf(buf, sizeof buf, "%8d  %14.7e  %14.7e  %8.4f\n",
                          r.m, r.h, r.l1, *r.rate);
        } else {
            std::snprintf(buf, sizeof buf, "%8d  %14.7e  %14.7e         -\n",
                          r.m, r.h, r.l1);
        }
        out += buf;
    }
    return out;
}

}  // namespace dfv

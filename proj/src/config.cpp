#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace dfv {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& msg) {
    throw config_error(where + ": " + msg);
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double parse_num(const std::string& v, const std::string& where) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        while (pos < v.size() && (v[pos] == ' ' || v[pos] == '\t')) ++pos;
        if (pos != v.size()) fail(where, "trailing characters in number '" + v + "'");
        if (!std::isfinite(x)) fail(where, "number must be finite: '" + v + "'");
        return x;
    } catch (const std::invalid_argument&) {
        fail(where, "not a number: '" + v + "'");
    } catch (const std::out_of_range&) {
        fail(where, "number out of range: '" + v + "'");
    }
}

int parse_int(const std::string& v, const std::string& where) {
    const double x = parse_num(v, where);
    const int i = static_cast<int>(x);
    if (static_cast<double>(i) != x)
        fail(where, "expected an integer, got '" + v + "'");
    return i;
}

bool parse_bool(const std::string& v, const std::string& where) {
    if (v == "true" || v == "on" || v == "1") return true;
    if (v == "false" || v == "off" || v == "0") return false;
    fail(where, "expected a boolean (true/false), got '" + v + "'");
}

std::vector<double> parse_num_list(const std::string& v,
                                   const std::string& where) {
    std::vector<double> out;
    std::string item;
    std::istringstream ss(v);
    while (std::getline(ss, item, ',')) {
        const std::string it = trim(item);
        if (it.empty()) fail(where, "empty entry in list '" + v + "'");
        out.push_back(parse_num(it, where));
    }
    return out;
}

Limiter limiter_from_name(const std::string& v, const std::string& where) {
    if (v == "minmod") return Limiter::minmod;
    if (v == "superbee") return Limiter::superbee;
    if (v == "zero") return Limiter::zero;
    fail(where, "unknown limiter '" + v + "'");
}

std::vector<EntropyFunction> parse_entropy_list(const std::string& v,
                                                const std::string& where) {
    std::vector<EntropyFunction> out;
    std::string item;
    std::istringstream ss(v);
    while (std::getline(ss, item, ',')) {
        const std::string it = trim(item);
        if (it == "u2") {
            out.push_back({EntropyFunction::Kind::square, 0.0});
        } else if (it.rfind("abs:", 0) == 0) {
            out.push_back({EntropyFunction::Kind::abs_shift,
                           parse_num(it.substr(4), where)});
        } else {
            fail(where, "unknown entropy token '" + it +
                            "' (expected u2 or abs:<c>)");
        }
    }
    if (out.empty()) fail(where, "entropy list is empty");
    return out;
}

void set_key(ExperimentConfig& cfg, const std::string& section,
             const std::string& key, const std::string& value,
             const std::string& where) {
    if (section == "model") {
        if (key == "kind") {
            try {
                cfg.model.kind = model_kind_from_name(value);
            } catch (const config_error& e) {
                fail(where, e.what());
            }
        } else if (key == "g_power") {
            cfg.model.g_power = parse_int(value, where);
        } else if (key == "beta") {
            cfg.model.beta = parse_num(value, where);
        } else if (key == "s") {
            cfg.model.s = parse_num(value, where);
        } else if (key == "alpha") {
            cfg.model.alpha = parse_num(value, where);
        } else {
            fail(where, "unknown key '" + key + "' in [model]");
        }
    } else if (section == "grid") {
        if (key == "xmin") cfg.xmin = parse_num(value, where);
        else if (key == "xmax") cfg.xmax = parse_num(value, where);
        else if (key == "m") cfg.m = parse_int(value, where);
        else if (key == "ymin") cfg.ymin = parse_num(value, where);
        else if (key == "ymax") cfg.ymax = parse_num(value, where);
        else if (key == "my") cfg.my = parse_int(value, where);
        else fail(where, "unknown key '" + key + "' in [grid]");
    } else if (section == "scheme") {
        if (key == "order") cfg.scheme.order = parse_int(value, where);
        else if (key == "limiter") cfg.scheme.limiter = limiter_from_name(value, where);
        else if (key == "cfl") cfg.scheme.cfl = parse_num(value, where);
        else if (key == "vacuum_eps") cfg.scheme.vacuum_eps = parse_num(value, where);
        else if (key == "pgds_full_flux") cfg.scheme.pgds_full_flux = parse_bool(value, where);
        else if (key == "entropy_check") {
            if (value == "off") {
                cfg.scheme.entropy_check = false;
                cfg.scheme.entropies.clear();
            } else if (value == "on") {
                cfg.scheme.entropy_check = true;
                cfg.scheme.entropies.clear();  // finalize() fills the defaults
            } else {
                cfg.scheme.entropy_check = true;
                cfg.scheme.entropies = parse_entropy_list(value, where);
            }
        } else {
            fail(where, "unknown key '" + key + "' in [scheme]");
        }
    } else if (section == "init") {
        if (key == "type") {
            if (value == "riemann") cfg.init.type = InitSpec::Type::riemann;
            else if (value == "regions") cfg.init.type = InitSpec::Type::regions;
            else if (value == "named") cfg.init.type = InitSpec::Type::named;
            else fail(where, "unknown init type '" + value + "'");
        } else if (key == "rho_l") cfg.init.rho_l = parse_num(value, where);
        else if (key == "u_l") cfg.init.u_l = parse_num(value, where);
        else if (key == "rho_r") cfg.init.rho_r = parse_num(value, where);
        else if (key == "u_r") cfg.init.u_r = parse_num(value, where);
        else if (key == "background") cfg.init.background = parse_num_list(value, where);
        else if (key == "region") cfg.init.regions.push_back({parse_num_list(value, where)});
        else if (key == "name") cfg.init.name = value;
        else if (key == "rho") cfg.init.named_rho = parse_num(value, where);
        else if (key == "speed") cfg.init.named_speed = parse_num(value, where);
        else fail(where, "unknown key '" + key + "' in [init]");
    } else if (section == "run") {
        if (key == "T") cfg.T = parse_num(value, where);
        else if (key == "snapshots") cfg.snapshots = parse_num_list(value, where);
        else if (key == "reference_locations")
            cfg.reference_locations = parse_num_list(value, where);
        else if (key == "outdir") {
            if (value.empty()) fail(where, "outdir must not be empty");
            cfg.outdir = value;
        } else if (key == "emit_svg") cfg.emit_svg = parse_bool(value, where);
        else fail(where, "unknown key '" + key + "' in [run]");
    } else {
        fail(where, "unknown section [" + section + "]");
    }
}

ExperimentConfig parse_raw(const std::string& text);

ExperimentConfig fresh_config() {
    ExperimentConfig cfg;
    cfg.scheme.cfl = -1.0;  // sentinel: finalize() picks the per-order default
    return cfg;
}

ExperimentConfig parse_raw(const std::string& text) {
    ExperimentConfig cfg = fresh_config();
    std::istringstream ss(text);
    std::string raw;
    std::string section;
    int lineno = 0;
    bool any_setting = false;
    while (std::getline(ss, raw)) {
        ++lineno;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        const std::string where = "config line " + std::to_string(lineno);
        if (line.front() == '[') {
            if (line.back() != ']')
                fail(where, "malformed section header '" + line + "'");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty()) fail(where, "empty section name");
            any_setting = true;
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            fail(where, "expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail(where, "empty key");
        if (section.empty()) {
            if (key == "preset") {
                if (any_setting)
                    fail(where, "preset reference must come before other settings");
                cfg = parse_raw(preset_text(value));
                cfg.preset_name = value;
                any_setting = true;
                continue;
            }
            fail(where, "key '" + key + "' outside a [section]");
        }
        set_key(cfg, section, key, value, where);
        any_setting = true;
    }
    return cfg;
}

void check_init(const ExperimentConfig& cfg) {
    const InitSpec& in = cfg.init;
    const bool two_d = cfg.two_d();
    switch (in.type) {
        case InitSpec::Type::none:
            throw config_error("init: type is required (riemann, regions, or named)");
        case InitSpec::Type::riemann: {
            if (two_d)
                throw config_error("init: riemann initial data is 1D-only");
            if (!in.rho_l || !in.u_l || !in.rho_r || !in.u_r)
                throw config_error("init: riemann needs rho_l, u_l, rho_r, u_r");
            if (!(*in.rho_l >= 0.0) || !(*in.rho_r >= 0.0))
                throw config_error("init: densities must be nonnegative");
            break;
        }
        case InitSpec::Type::regions: {
            const std::size_t bg_n = two_d ? 3 : 2;
            if (!in.background || in.background->size() != bg_n)
                throw config_error(two_d
                    ? "init: 2D regions need background = rho,u,v"
                    : "init: regions need background = rho,u");
            if (!((*in.background)[0] >= 0.0))
                throw config_error("init: background density must be nonnegative");
            const std::size_t reg_n = two_d ? 7 : 4;
            for (const RegionSpec& r : in.regions) {
                if (r.values.size() != reg_n)
                    throw config_error(two_d
                        ? "init: 2D region needs x0,x1,y0,y1,rho,u,v"
                        : "init: region needs x0,x1,rho,u");
                if (!(r.values[0] < r.values[1]))
                    throw config_error("init: region needs x0 < x1");
                if (two_d && !(r.values[2] < r.values[3]))
                    throw config_error("init: region needs y0 < y1");
                if (!(r.values[two_d ? 4 : 2] >= 0.0))
                    throw config_error("init: region density must be nonnegative");
            }
            break;
        }
        case InitSpec::Type::named: {
            if (in.name == "mixed_wave") {
                if (two_d)
                    throw config_error("init: mixed_wave is 1D-only");
                if (in.named_rho || in.named_speed)
                    throw config_error("init: mixed_wave takes no parameters");
            } else if (in.name == "radial_inflow") {
                if (!two_d)
                    throw config_error("init: radial_inflow is 2D-only");
                if (in.named_rho && !(*in.named_rho >= 0.0))
                    throw config_error("init: rho must be nonnegative");
            } else {
                throw config_error("init: unknown named profile '" + in.name + "'");
            }
            break;
        }
    }
}

}  // namespace

bool ExperimentConfig::operator==(const ExperimentConfig& o) const {
    return model == o.model && xmin == o.xmin && xmax == o.xmax && m == o.m &&
           ymin == o.ymin && ymax == o.ymax && my == o.my &&
           scheme == o.scheme && init == o.init && T == o.T &&
           snapshots == o.snapshots &&
           reference_locations == o.reference_locations &&
           outdir == o.outdir && emit_svg == o.emit_svg;
}

Grid2D ExperimentConfig::grid_2d() const {
    if (!two_d())
        throw config_error("grid: y-axis keys (ymin, ymax, my) are required for 2D");
    return Grid2D(xmin, xmax, m, *ymin, *ymax, *my);
}

void finalize_config(ExperimentConfig& cfg) {
    cfg.scheme.finalize();
    cfg.scheme.validate();
    cfg.model.validate();
    const int y_keys = int(cfg.ymin.has_value()) + int(cfg.ymax.has_value()) +
                       int(cfg.my.has_value());
    if (y_keys != 0 && y_keys != 3)
        throw config_error("grid: 2D needs all of ymin, ymax, my");
    if (cfg.two_d())
        (void)cfg.grid_2d();
    else
        (void)cfg.grid_1d();
    check_init(cfg);
    if (!(cfg.T > 0.0) || !std::isfinite(cfg.T))
        throw config_error("run: T must be positive and finite");
    for (std::size_t k = 0; k < cfg.snapshots.size(); ++k) {
        const double tk = cfg.snapshots[k];
        if (!std::isfinite(tk) || tk < 0.0 || tk > cfg.T)
            throw config_error("run: snapshot times must lie in [0, T]");
        if (k > 0 && !(tk > cfg.snapshots[k - 1]))
            throw config_error("run: snapshot times must be strictly increasing");
    }
    if (!cfg.reference_locations.empty() &&
        cfg.reference_locations.size() != cfg.snapshots.size())
        throw config_error(
            "run: reference_locations needs one entry per listed snapshot");
}

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig cfg = parse_raw(text);
    finalize_config(cfg);
    return cfg;
}

void apply_override(ExperimentConfig& cfg, const std::string& override_spec) {
    const std::string where = "override '" + override_spec + "'";
    const auto eq = override_spec.find('=');
    if (eq == std::string::npos)
        fail(where, "expected section.key=value");
    const std::string path = trim(override_spec.substr(0, eq));
    const std::string value = trim(override_spec.substr(eq + 1));
    const auto dot = path.find('.');
    if (dot == std::string::npos)
        fail(where, "expected section.key=value");
    const std::string section = path.substr(0, dot);
    const std::string key = path.substr(dot + 1);
    if (section.empty() || key.empty())
        fail(where, "expected section.key=value");
    set_key(cfg, section, key, value, where);
    finalize_config(cfg);
}

// ---------------------------------------------------------------------------
// Preset registry

namespace {

const std::map<std::string, std::string>& registry() {
    static const std::map<std::string, std::string> presets = {
        {"exp1", R"(# moving delta shock, sticky particles
[model]
kind = pgd

[grid]
xmin = -0.5
xmax = 0.5
m = 40

[scheme]
order = 1
limiter = minmod
cfl = 0.5
entropy_check = on

[init]
type = riemann
rho_l = 1
u_l = 1
rho_r = 0.25
u_r = 0

[run]
T = 0.4998
outdir = out/exp1
)"},
        {"exp2", R"(# mixed shock/rarefaction profile with a velocity ramp
[model]
kind = pgd

[grid]
xmin = -1
xmax = 1
m = 80

[scheme]
order = 1
limiter = minmod
cfl = 0.5
entropy_check = on

[init]
type = named
name = mixed_wave

[run]
T = 0.4998
outdir = out/exp2
)"},
        {"exp2_vacuum", R"(# rarefaction opening a vacuum region; exact profile known
[model]
kind = pgd

[grid]
xmin = -0.5
xmax = 0.5
m = 200

[scheme]
order = 1
limiter = minmod
cfl = 0.5
entropy_check = on

[init]
type = riemann
rho_l = 0.5
u_l = -0.5
rho_r = 0.5
u_r = 0.4

[run]
T = 0.5
outdir = out/exp2_vacuum
)"},
        {"exp3", R"(# collision of two dust clouds over vacuum
[model]
kind = pgd

[grid]
xmin = -2.5
xmax = 5.5
m = 800

[scheme]
order = 1
limiter = minmod
cfl = 0.5

[init]
type = regions
background = 0,0
region = -2,-1,2,1
region = 1,5,1,-1

[run]
T = 7
snapshots = 0,0.5,1.5,2.5,4.5,7
outdir = out/exp3
)"},
        {"exp4", R"(# cubic velocity map, entropic delta placement
[model]
kind = gpgd
g_power = 3

[grid]
xmin = -0.5
xmax = 0.5
m = 40

[scheme]
order = 1
limiter = minmod
cfl = 0.5
entropy_check = on

[init]
type = riemann
rho_l = 1
u_l = 1
rho_r = 0.25
u_r = 0

[run]
T = 0.4988
outdir = out/exp4
)"},
        {"exp5", R"(# Coulomb friction, delta shock on a parabolic path
[model]
kind = pgds
beta = 0.5

[grid]
xmin = -1.2
xmax = 1.2
m = 500

[scheme]
order = 1
limiter = minmod
cfl = 0.5

[init]
type = riemann
rho_l = 1
u_l = 1
rho_r = 0.25
u_r = 0

[run]
T = 0.4983
outdir = out/exp5
)"},
        {"exp5_vacuum", R"(# Coulomb friction, vacuum opening between drifting states
[model]
kind = pgds
beta = 0.5

[grid]
xmin = -1.2
xmax = 1.2
m = 500

[scheme]
order = 1
limiter = minmod
cfl = 0.5

[init]
type = riemann
rho_l = 1
u_l = -2
rho_r = 1
u_r = 1

[run]
T = 0.4983
outdir = out/exp5_vacuum
)"},
        {"exp6", R"(# pressure model, delta shock weights against closed form
[model]
kind = cgd
s = 5
alpha = 0.5

[grid]
xmin = -2
xmax = 2
m = 1000

[scheme]
order = 1
limiter = minmod
cfl = 0.5

[init]
type = riemann
rho_l = 3
u_l = 4
rho_r = 1
u_r = -4

[run]
T = 0.1996
snapshots = 0.05,0.1996
reference_locations = 0.0538,0.2170
outdir = out/exp6
)"},
        {"exp2d1", R"(# four-quadrant diverging velocities, vacuum at the center
[model]
kind = pgd

[grid]
xmin = -0.5
xmax = 0.5
m = 100
ymin = -0.5
ymax = 0.5
my = 100

[scheme]
order = 2
limiter = superbee

[init]
type = regions
background = 0.5,0.3,0.4
region = -0.5,0,0,0.5,0.5,-0.4,0.3
region = -0.5,0,-0.5,0,0.5,-0.3,-0.4
region = 0,0.5,-0.5,0,0.5,0.4,-0.3

[run]
T = 0.1
outdir = out/exp2d1
)"},
        {"exp2d2", R"(# radial inflow concentrating mass at the origin
[model]
kind = pgd

[grid]
xmin = -0.5
xmax = 0.5
m = 400
ymin = -0.5
ymax = 0.5
my = 400

[scheme]
order = 2
limiter = superbee

[init]
type = named
name = radial_inflow
rho = 0.01
speed = 0.1

[run]
T = 0.5
outdir = out/exp2d2
)"},
        {"exp2d3", R"(# two dense clouds crossing over a quiescent background
[model]
kind = pgd

[grid]
xmin = -0.5
xmax = 0.5
m = 200
ymin = -0.5
ymax = 0.5
my = 200

[scheme]
order = 2
limiter = superbee

[init]
type = regions
background = 0.1,0,0
region = -0.3,-0.2,-0.15,0.05,1,0.5,0
region = 0.2,0.3,0.05,0.15,1,-0.5,0

[run]
T = 0.8
snapshots = 0.2,0.52,0.8
outdir = out/exp2d3
)"},
    };
    return presets;
}

}  // namespace

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const auto& [name, text] : registry()) names.push_back(name);
    return names;
}

const std::string& preset_text(const std::string& name) {
    const auto& reg = registry();
    const auto it = reg.find(name);
    if (it == reg.end())
        throw config_error("unknown preset '" + name + "'");
    return it->second;
}

ExperimentConfig preset_config(const std::string& name) {
    ExperimentConfig cfg = parse_config(preset_text(name));
    cfg.preset_name = name;
    return cfg;
}

// ---------------------------------------------------------------------------
// Initial states

namespace {

double mixed_wave_velocity(double x) {
    if (x < -0.5) return -0.5;
    if (x < 0.0) return 0.4;
    if (x < 0.5) return 0.4 - x;
    return -0.4;
}

}  // namespace

State1D build_initial_1d(const ExperimentConfig& cfg) {
    if (cfg.two_d())
        throw config_error("init: config is 2D, expected 1D");
    const Grid1D grid = cfg.grid_1d();
    State1D s(grid.m);
    const InitSpec& in = cfg.init;
    switch (in.type) {
        case InitSpec::Type::riemann: {
            for (int i = 0; i < grid.m; ++i) {
                const double x = grid.cell_center(i);
                const double rho = x < 0.0 ? *in.rho_l : *in.rho_r;
                const double u = x < 0.0 ? *in.u_l : *in.u_r;
                s.rho[i] = rho;
                s.w[i] = rho * u;
            }
            break;
        }
        case InitSpec::Type::regions: {
            const double bg_rho = (*in.background)[0];
            const double bg_u = (*in.background)[1];
            for (int i = 0; i < grid.m; ++i) {
                double rho = bg_rho, u = bg_u;
                const double x = grid.cell_center(i);
                for (const RegionSpec& r : in.regions) {
                    if (x >= r.values[0] && x <= r.values[1]) {
                        rho = r.values[2];
                        u = r.values[3];
                    }
                }
                s.rho[i] = rho;
                s.w[i] = rho * u;
            }
            break;
        }
        case InitSpec::Type::named: {
            // mixed_wave is the only 1D named profile (checked in finalize)
            for (int i = 0; i < grid.m; ++i) {
                const double x = grid.cell_center(i);
                s.rho[i] = 0.5;
                s.w[i] = 0.5 * mixed_wave_velocity(x);
            }
            break;
        }
        case InitSpec::Type::none:
            throw config_error("init: type is required");
    }
    return s;
}

State2D build_initial_2d(const ExperimentConfig& cfg) {
    if (!cfg.two_d())
        throw config_error("init: config is 1D, expected 2D");
    const Grid2D grid = cfg.grid_2d();
    State2D s(grid.mx, grid.my);
    const InitSpec& in = cfg.init;
    for (int j = 0; j < grid.my; ++j) {
        for (int i = 0; i < grid.mx; ++i) {
            const double x = grid.cell_center_x(i);
            const double y = grid.cell_center_y(j);
            double rho = 0.0, u = 0.0, v = 0.0;
            if (in.type == InitSpec::Type::regions) {
                rho = (*in.background)[0];
                u = (*in.background)[1];
                v = (*in.background)[2];
                for (const RegionSpec& r : in.regions) {
                    if (x >= r.values[0] && x <= r.values[1] &&
                        y >= r.values[2] && y <= r.values[3]) {
                        rho = r.values[4];
                        u = r.values[5];
                        v = r.values[6];
                    }
                }
            } else {  // named radial_inflow (checked in finalize)
                rho = in.named_rho.value_or(0.01);
                const double speed = in.named_speed.value_or(0.1);
                const double r = std::hypot(x, y);
                if (r > 0.0) {
                    u = -speed * x / r;
                    v = -speed * y / r;
                }
            }
            const std::size_t k = s.idx(i, j);
            s.rho[k] = rho;
            s.wx[k] = rho * u;
            s.wy[k] = rho * v;
        }
    }
    return s;
}

std::optional<RiemannData> config_riemann_data(const ExperimentConfig& cfg) {
    if (cfg.init.type != InitSpec::Type::riemann) return std::nullopt;
    return RiemannData{*cfg.init.rho_l, *cfg.init.u_l, *cfg.init.rho_r,
                       *cfg.init.u_r};
}

}  // namespace dfv

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core.hpp"
#include "exact.hpp"

namespace dfv {

// One piecewise-constant initialization region. 1D regions carry
// (x0, x1, rho, u); 2D regions carry (x0, x1, y0, y1, rho, u, v). Stored raw
// until the grid dimension is known.
struct RegionSpec {
    std::vector<double> values;
    bool operator==(const RegionSpec&) const = default;
};

struct InitSpec {
    enum class Type { none, riemann, regions, named };
    Type type = Type::none;

    // riemann
    std::optional<double> rho_l, u_l, rho_r, u_r;
    // regions
    std::optional<std::vector<double>> background;
    std::vector<RegionSpec> regions;
    // named
    std::string name;
    std::optional<double> named_rho, named_speed;

    bool operator==(const InitSpec&) const = default;
};

struct ExperimentConfig {
    std::string preset_name;  // nonempty when loaded via `preset = ...`

    ModelSpec model;
    double xmin = 0.0, xmax = 0.0;
    int m = 0;
    std::optional<double> ymin, ymax;
    std::optional<int> my;
    SchemeConfig scheme;
    InitSpec init;
    double T = 0.0;
    std::vector<double> snapshots;
    // Externally known reference shock locations, one per listed snapshot;
    // echoed into the manifest, never used by the solver.
    std::vector<double> reference_locations;
    std::string outdir = "out";
    bool emit_svg = false;

    bool two_d() const { return my.has_value(); }
    Grid1D grid_1d() const { return Grid1D(xmin, xmax, m); }
    Grid2D grid_2d() const;

    // Equality ignores preset_name: a fully spelled-out config equals the
    // registry preset it copies.
    bool operator==(const ExperimentConfig& o) const;
};

// Parse the line-oriented `[section]` / `key = value` format. `preset = name`
// (before any section) starts from the registry config; later lines override
// its fields. Unknown sections or keys fail with the line number. The result
// is finalized and validated.
ExperimentConfig parse_config(const std::string& text);

// Apply one `section.key=value` override on a parsed config, then
// re-validate.
void apply_override(ExperimentConfig& cfg, const std::string& override_spec);

// Registry of the built-in experiment configurations.
std::vector<std::string> preset_names();
const std::string& preset_text(const std::string& name);
ExperimentConfig preset_config(const std::string& name);

// Fill defaults (scheme cfl, entropy set), then check every invariant;
// throws config_error with an explanation.
void finalize_config(ExperimentConfig& cfg);

// Cell-center sampled initial states; w = rho*u (and wy = rho*v).
State1D build_initial_1d(const ExperimentConfig& cfg);
State2D build_initial_2d(const ExperimentConfig& cfg);

// Riemann data of the config when init.type == riemann (for exact
// references).
std::optional<RiemannData> config_riemann_data(const ExperimentConfig& cfg);

}  // namespace dfv

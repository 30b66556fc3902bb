#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dfv {

// Error taxonomy; the C API and the CLI map these to status codes 1/2/3.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};
struct io_error : std::runtime_error {
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Uniform 1D grid of m cells on [xmin, xmax].
struct Grid1D {
    double xmin = 0.0;
    double xmax = 1.0;
    int m = 0;

    Grid1D() = default;
    Grid1D(double a, double b, int cells);

    double h() const { return (xmax - xmin) / m; }
    double cell_center(int i) const { return xmin + (i + 0.5) * h(); }
};

// Uniform 2D grid, mx-by-my cells.
struct Grid2D {
    double xmin = 0.0, xmax = 1.0;
    double ymin = 0.0, ymax = 1.0;
    int mx = 0, my = 0;

    Grid2D() = default;
    Grid2D(double x0, double x1, int nx, double y0, double y1, int ny);

    double hx() const { return (xmax - xmin) / mx; }
    double hy() const { return (ymax - ymin) / my; }
    double cell_center_x(int i) const { return xmin + (i + 0.5) * hx(); }
    double cell_center_y(int j) const { return ymin + (j + 0.5) * hy(); }
};

// Conserved variables on the interior cells (no ghosts).
struct State1D {
    std::vector<double> rho;
    std::vector<double> w;   // momentum rho*u

    State1D() = default;
    explicit State1D(int m) : rho(m, 0.0), w(m, 0.0) {}
    int size() const { return static_cast<int>(rho.size()); }
};

// Row-major by y: index(i,j) = j*mx + i, x runs fastest.
struct State2D {
    int mx = 0, my = 0;
    std::vector<double> rho;
    std::vector<double> wx;  // rho*u
    std::vector<double> wy;  // rho*v

    State2D() = default;
    State2D(int nx, int ny)
        : mx(nx), my(ny),
          rho(static_cast<size_t>(nx) * ny, 0.0),
          wx(static_cast<size_t>(nx) * ny, 0.0),
          wy(static_cast<size_t>(nx) * ny, 0.0) {}
    size_t idx(int i, int j) const { return static_cast<size_t>(j) * mx + i; }
};

enum class ModelKind { PGD, GPGD, PGDS, CGD };

// Which system is being solved. g(u) = u^g_power is the density advection
// speed map (odd power, identity except for GPGD); beta is the Coulomb
// friction constant (PGDS); s, alpha parameterize the pressure s*rho^-alpha
// (CGD).
struct ModelSpec {
    ModelKind kind = ModelKind::PGD;
    int g_power = 1;
    double beta = 0.0;
    double s = 0.0;
    double alpha = 0.5;

    double g(double u) const;       // u^g_power, odd power
    double pressure(double rho) const;  // s * rho^-alpha
    void validate() const;          // throws config_error

    bool operator==(const ModelSpec&) const = default;
};

const char* model_kind_name(ModelKind k);
ModelKind model_kind_from_name(const std::string& name);

enum class Limiter {
    zero,      // slopes forced to 0; the first-order reduction (test hook)
    minmod,
    superbee
};

const char* limiter_name(Limiter l);

// Entropy functions S(u): u^2, |u - c|, or the constant 1 (with S == 1 the
// entropy flux must coincide with the density flux, a useful cross-check).
struct EntropyFunction {
    enum class Kind { square, abs_shift, one } kind = Kind::square;
    double c = 0.0;

    double operator()(double u) const;
    std::string label() const;   // "u2", "abs:<c>", or "one"

    bool operator==(const EntropyFunction&) const = default;
};

struct SchemeConfig {
    int order = 1;                 // 1 or 2
    Limiter limiter = Limiter::minmod;
    double cfl = 0.5;              // defaulted per order by finalize()
    double vacuum_eps = 1e-300;
    bool pgds_full_flux = false;   // add +beta*t*w to the friction flux arms
    bool entropy_check = false;
    std::vector<EntropyFunction> entropies;

    void finalize();               // fill order-dependent defaults
    void validate() const;         // throws config_error

    bool operator==(const SchemeConfig&) const = default;
};

struct TimeStep {
    double dt = 0.0;
    double lambda = 0.0;  // dt / h
};

// Velocity with the vacuum convention: u = w/rho, but 0 once rho <= vacuum_eps.
// Rejects negative density and non-finite inputs.
double velocity_of(double rho, double w, double vacuum_eps);

// Outflow (zero-gradient) ghosts: two cells per side copy the nearest
// interior value. v.size() must be interior size + 4. Idempotent.
void fill_ghost_cells(std::vector<double>& v);

// Convenience: copy interior into a padded array and fill ghosts.
std::vector<double> with_ghost_cells(const std::vector<double>& interior);

// Compensated sums; conservation audits compare quantities at the 1e-12
// relative level, so plain left-to-right accumulation is not good enough.
double sum_kahan(const std::vector<double>& v);
double sum_abs_kahan(const std::vector<double>& v);

// Library version, semver.
const char* version_string();

}  // namespace dfv

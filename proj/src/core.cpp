#include "core.hpp"

#include <cmath>
#include <sstream>

namespace dfv {

Grid1D::Grid1D(double a, double b, int cells) : xmin(a), xmax(b), m(cells) {
    if (!(std::isfinite(a) && std::isfinite(b)) || !(a < b))
        throw config_error("grid: xmin must be finite and less than xmax");
    if (m < 4)
        throw config_error("grid: need at least 4 cells");
}

Grid2D::Grid2D(double x0, double x1, int nx, double y0, double y1, int ny)
    : xmin(x0), xmax(x1), ymin(y0), ymax(y1), mx(nx), my(ny) {
    if (!(std::isfinite(x0) && std::isfinite(x1)) || !(x0 < x1) ||
        !(std::isfinite(y0) && std::isfinite(y1)) || !(y0 < y1))
        throw config_error("grid: domain bounds must be finite and ordered");
    if (mx < 4 || my < 4)
        throw config_error("grid: need at least 4 cells per direction");
}

double ModelSpec::g(double u) const {
    if (g_power == 1) return u;
    // odd integer power by squaring; keeps sign, no pow() rounding surprises
    double acc = u;
    for (int k = 1; k < g_power; ++k) acc *= u;
    return acc;
}

double ModelSpec::pressure(double rho) const {
    return s * std::pow(rho, -alpha);
}

void ModelSpec::validate() const {
    if (g_power < 1 || g_power % 2 == 0)
        throw config_error("model: g_power must be an odd positive integer");
    if (kind != ModelKind::GPGD && g_power != 1)
        throw config_error("model: g_power != 1 only valid for gpgd");
    if (!std::isfinite(beta))
        throw config_error("model: beta must be finite");
    if (kind != ModelKind::PGDS && beta != 0.0)
        throw config_error("model: beta only valid for pgds");
    if (kind == ModelKind::CGD) {
        if (!(alpha > 0.0 && alpha < 1.0))
            throw config_error("model: alpha must lie in (0,1)");
        if (!(s >= 0.0) || !std::isfinite(s))
            throw config_error("model: s must be finite and >= 0");
    } else if (s != 0.0) {
        throw config_error("model: s only valid for cgd");
    }
}

const char* model_kind_name(ModelKind k) {
    switch (k) {
        case ModelKind::PGD: return "pgd";
        case ModelKind::GPGD: return "gpgd";
        case ModelKind::PGDS: return "pgds";
        case ModelKind::CGD: return "cgd";
    }
    return "?";
}

ModelKind model_kind_from_name(const std::string& name) {
    if (name == "pgd") return ModelKind::PGD;
    if (name == "gpgd") return ModelKind::GPGD;
    if (name == "pgds") return ModelKind::PGDS;
    if (name == "cgd") return ModelKind::CGD;
    throw config_error("model: unknown kind '" + name + "'");
}

const char* limiter_name(Limiter l) {
    switch (l) {
        case Limiter::zero: return "zero";
        case Limiter::minmod: return "minmod";
        case Limiter::superbee: return "superbee";
    }
    return "?";
}

double EntropyFunction::operator()(double u) const {
    switch (kind) {
        case Kind::square: return u * u;
        case Kind::abs_shift: return std::fabs(u - c);
        case Kind::one: return 1.0;
    }
    return 0.0;
}

std::string EntropyFunction::label() const {
    if (kind == Kind::square) return "u2";
    if (kind == Kind::one) return "one";
    std::ostringstream os;
    os << "abs:" << c;
    return os.str();
}

void SchemeConfig::finalize() {
    if (cfl <= 0.0) cfl = (order == 2) ? 1.0 / 3.0 : 0.5;
    if (entropy_check && entropies.empty()) {
        entropies = {
            {EntropyFunction::Kind::square, 0.0},
            {EntropyFunction::Kind::abs_shift, 0.0},
            {EntropyFunction::Kind::abs_shift, 0.5},
            {EntropyFunction::Kind::abs_shift, -0.5},
        };
    }
}

void SchemeConfig::validate() const {
    if (order != 1 && order != 2)
        throw config_error("scheme: order must be 1 or 2");
    if (!(cfl > 0.0) || !std::isfinite(cfl))
        throw config_error("scheme: cfl must be positive and finite");
    if (order == 1 && cfl > 1.0)
        throw config_error("scheme: first order requires cfl <= 1");
    // stability and the bounds proofs need cfl <= 1/3 at second order;
    // allow for roundoff in "1/3" written in a config file
    if (order == 2 && cfl > 1.0 / 3.0 + 1e-12)
        throw config_error("scheme: second order requires cfl <= 1/3");
    if (!(vacuum_eps > 0.0))
        throw config_error("scheme: vacuum_eps must be positive");
}

double velocity_of(double rho, double w, double vacuum_eps) {
    if (!(std::isfinite(rho) && std::isfinite(w)))
        throw numeric_error("velocity_of: non-finite state");
    if (rho < 0.0)
        throw numeric_error("velocity_of: negative density");
    if (rho <= vacuum_eps) return 0.0;
    return w / rho;
}

void fill_ghost_cells(std::vector<double>& v) {
    if (v.size() < 5)
        throw numeric_error("fill_ghost_cells: array too small");
    const size_t n = v.size();
    v[0] = v[1] = v[2];
    v[n - 1] = v[n - 2] = v[n - 3];
}

std::vector<double> with_ghost_cells(const std::vector<double>& interior) {
    std::vector<double> v(interior.size() + 4);
    for (size_t i = 0; i < interior.size(); ++i) v[i + 2] = interior[i];
    fill_ghost_cells(v);
    return v;
}

double sum_kahan(const std::vector<double>& v) {
    double s = 0.0, c = 0.0;
    for (double x : v) {
        const double y = x - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s;
}

double sum_abs_kahan(const std::vector<double>& v) {
    double s = 0.0, c = 0.0;
    for (double x : v) {
        const double y = std::fabs(x) - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s;
}

const char* version_string() { return "1.0.0"; }

}  // namespace dfv

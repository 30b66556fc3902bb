#include "io.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <vector>

namespace dfv {

std::string format_sci(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", x);
    return buf;
}

void create_directories(const std::string& path) {
    try {
        std::filesystem::create_directories(path);
    } catch (const std::filesystem::filesystem_error& e) {
        throw io_error("cannot create directory '" + path + "': " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot open '" + path + "' for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f.good()) throw io_error("write failed for '" + path + "'");
}

std::string csv_1d(const Grid1D& grid, const State1D& s, double vacuum_eps) {
    std::string out = "x,rho,u,w\n";
    out.reserve(out.size() + static_cast<std::size_t>(grid.m) * 100);
    for (int i = 0; i < grid.m; ++i) {
        const double u = velocity_of(s.rho[i], s.w[i], vacuum_eps);
        out += format_sci(grid.cell_center(i));
        out += ',';
        out += format_sci(s.rho[i]);
        out += ',';
        out += format_sci(u);
        out += ',';
        out += format_sci(s.w[i]);
        out += '\n';
    }
    return out;
}

std::string csv_2d(const Grid2D& grid, const State2D& s, double vacuum_eps) {
    std::string out = "x,y,rho,u,v\n";
    out.reserve(out.size() +
                static_cast<std::size_t>(grid.mx) * grid.my * 125);
    for (int j = 0; j < grid.my; ++j) {
        const double y = grid.cell_center_y(j);
        for (int i = 0; i < grid.mx; ++i) {
            const std::size_t k = s.idx(i, j);
            const double u = velocity_of(s.rho[k], s.wx[k], vacuum_eps);
            const double v = velocity_of(s.rho[k], s.wy[k], vacuum_eps);
            out += format_sci(grid.cell_center_x(i));
            out += ',';
            out += format_sci(y);
            out += ',';
            out += format_sci(s.rho[k]);
            out += ',';
            out += format_sci(u);
            out += ',';
            out += format_sci(v);
            out += '\n';
        }
    }
    return out;
}

std::string manifest_text(const std::map<std::string, std::string>& entries) {
    std::string out;
    for (const auto& [key, value] : entries) {
        out += key;
        out += " = ";
        out += value;
        out += '\n';
    }
    return out;
}

namespace {

struct Range {
    double lo = 0.0, hi = 1.0;
};

Range padded_range(const std::vector<double>& v) {
    Range r;
    if (v.empty()) return r;
    r.lo = r.hi = v[0];
    for (double x : v) {
        r.lo = std::min(r.lo, x);
        r.hi = std::max(r.hi, x);
    }
    if (r.hi - r.lo < 1e-300) {
        r.lo -= 0.5;
        r.hi += 0.5;
    }
    return r;
}

std::string polyline(const Grid1D& grid, const std::vector<double>& v,
                     const Range& r, double w, double hgt,
                     const char* color) {
    std::string p = "<polyline fill=\"none\" stroke=\"";
    p += color;
    p += "\" stroke-width=\"1.5\" points=\"";
    char buf[64];
    for (int i = 0; i < grid.m; ++i) {
        const double fx = (grid.cell_center(i) - grid.xmin) /
                          (grid.xmax - grid.xmin);
        const double fy = (v[i] - r.lo) / (r.hi - r.lo);
        std::snprintf(buf, sizeof buf, "%.2f,%.2f ", 40.0 + fx * (w - 60.0),
                      hgt - 30.0 - fy * (hgt - 60.0));
        p += buf;
    }
    p += "\"/>\n";
    return p;
}

}  // namespace

std::string svg_1d(const Grid1D& grid, const State1D& s, double vacuum_eps) {
    const double W = 800.0, H = 400.0;
    std::vector<double> u(grid.m);
    for (int i = 0; i < grid.m; ++i)
        u[i] = velocity_of(s.rho[i], s.w[i], vacuum_eps);
    const Range rr = padded_range(s.rho);
    const Range ru = padded_range(u);
    std::string out =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
        "height=\"400\" viewBox=\"0 0 800 400\">\n"
        "<rect x=\"40\" y=\"30\" width=\"740\" height=\"340\" fill=\"white\" "
        "stroke=\"black\"/>\n";
    out += polyline(grid, s.rho, rr, W, H, "#1f77b4");
    out += polyline(grid, u, ru, W, H, "#d62728");
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "<text x=\"45\" y=\"20\" font-size=\"12\">rho (blue) "
                  "[%.6g, %.6g], u (red) [%.6g, %.6g]</text>\n",
                  rr.lo, rr.hi, ru.lo, ru.hi);
    out += buf;
    out += "</svg>\n";
    return out;
}

std::string svg_2d(const Grid2D& grid, const State2D& s) {
    // block-downsample to at most 200 blocks per axis, block value = max
    const int target = 200;
    const int bx = (grid.mx + target - 1) / target;
    const int by = (grid.my + target - 1) / target;
    const int nx = (grid.mx + bx - 1) / bx;
    const int ny = (grid.my + by - 1) / by;
    std::vector<double> blocks(static_cast<std::size_t>(nx) * ny, 0.0);
    double lo = s.rho.empty() ? 0.0 : s.rho[0], hi = lo;
    for (int j = 0; j < grid.my; ++j)
        for (int i = 0; i < grid.mx; ++i) {
            const double v = s.rho[s.idx(i, j)];
            lo = std::min(lo, v);
            hi = std::max(hi, v);
            double& b = blocks[static_cast<std::size_t>(j / by) * nx + i / bx];
            b = std::max(b, v);
        }
    if (hi - lo < 1e-300) hi = lo + 1.0;

    const double cell = 600.0 / std::max(nx, ny);
    std::string out =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" "
        "height=\"600\" viewBox=\"0 0 600 600\">\n";
    char buf[160];
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            const double v = blocks[static_cast<std::size_t>(j) * nx + i];
            const int g = 255 - static_cast<int>(255.0 * (v - lo) / (hi - lo));
            // y flipped so larger y is higher on the page
            std::snprintf(buf, sizeof buf,
                          "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" "
                          "height=\"%.2f\" fill=\"rgb(%d,%d,%d)\"/>\n",
                          i * cell, (ny - 1 - j) * cell, cell + 0.5,
                          cell + 0.5, g, g, g);
            out += buf;
        }
    out += "</svg>\n";
    return out;
}

}  // namespace dfv

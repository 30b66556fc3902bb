#pragma once

#include <map>
#include <string>

#include "core.hpp"

namespace dfv {

// Scientific notation with 17 significant digits; enough to round-trip a
// double, and byte-stable across runs.
std::string format_sci(double x);

// mkdir -p; io_error on failure.
void create_directories(const std::string& path);

// Whole-file write; io_error on failure.
void write_text_file(const std::string& path, const std::string& content);

// CSV snapshot, header x,rho,u,w, one row per cell, \n line endings, no
// trailing separator. u follows the vacuum convention (0 at rho <=
// vacuum_eps).
std::string csv_1d(const Grid1D& grid, const State1D& s, double vacuum_eps);

// CSV snapshot, header x,y,rho,u,v, rows in row-major order (x fastest).
std::string csv_2d(const Grid2D& grid, const State2D& s, double vacuum_eps);

// `key = value` lines, keys sorted lexicographically.
std::string manifest_text(const std::map<std::string, std::string>& entries);

// Convenience plots, no acceptance weight: density/velocity polylines (1D)
// and a grayscale density map (2D, block-downsampled for large grids).
std::string svg_1d(const Grid1D& grid, const State1D& s, double vacuum_eps);
std::string svg_2d(const Grid2D& grid, const State2D& s);

}  // namespace dfv

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "stepper1d.hpp"
#include "stepper2d.hpp"

namespace dfv {

struct ExperimentResult {
    ExperimentConfig cfg;
    std::optional<Run1DResult> run1d;
    std::optional<Run2DResult> run2d;
    std::map<std::string, std::string> manifest;
    std::vector<std::string> files_written;  // paths, manifest last
};

// Run the configured experiment and write its artifacts (per-snapshot CSV,
// manifest, optional SVG) under cfg.outdir. The manifest is fully
// deterministic: identical configs produce byte-identical files.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// As run_experiment but without touching the filesystem (the manifest map is
// still assembled); used by tests and the convergence driver.
ExperimentResult run_experiment_in_memory(const ExperimentConfig& cfg);

struct ConvergenceRow {
    int m = 0;
    double h = 0.0;
    double l1 = 0.0;
    std::optional<double> rate;  // vs the previous row
};

// Refinement ladder: the base config run at m, 2m, 4m, ... (levels entries),
// each compared against the exact vacuum profile at time T. Requires 1D
// Riemann data with u_l < u_r (the case with a closed-form solution).
std::vector<ConvergenceRow> run_convergence(const ExperimentConfig& base,
                                            int levels);

// Fixed-width text table of a convergence ladder.
std::string convergence_table(const std::vector<ConvergenceRow>& rows);

}  // namespace dfv

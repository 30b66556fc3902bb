#pragma once

#include <vector>

#include "core.hpp"
#include "interface_flux.hpp"
#include "stepper1d.hpp"

namespace dfv {

// Cumulative mass function P_i = h * sum_{j<=i} rho_j; non-decreasing for
// nonnegative density, and its jumps locate concentrated mass.
std::vector<double> primitive(const std::vector<double>& rho, double h);

struct DeltaMeasure {
    bool found = false;
    int cell_index = -1;
    double location = 0.0;  // center of the peak cell
    double weight = 0.0;    // windowed excess mass over the background
};

// Locate a concentration peak and estimate its carried mass: the excess of
// the windowed mass (peak cell +/- window cells, clamped to the domain) over
// a two-state background split at the peak (left value to the left, right
// value to the right, their mean under the peak cell itself). A flat profile
// reports no delta.
DeltaMeasure delta_measure(const std::vector<double>& rho, const Grid1D& grid,
                           double background_left, double background_right,
                           int window = 10);

// Entropy flux F^{rho S} along the interface, upwinded the same way as the
// density flux; the overcompressive branch dissipates through the momentum
// flux via the divided difference of S.
double entropy_flux(const InterfaceTrace& tr, const ModelSpec& model, double t,
                    bool pgds_full_flux, const EntropyFunction& S,
                    double vacuum_eps);

// Largest cell value of
//   rho'S(u') - rho S(u) + (dt/h) (F^{rhoS}_{i+1/2} - F^{rhoS}_{i-1/2})
// for one first-order step from `before` to `after`; <= 0 (up to roundoff)
// is the discrete entropy inequality.
double entropy_residual(const State1D& before, const State1D& after,
                        const ModelSpec& model, double h, double t, double dt,
                        bool pgds_full_flux, const EntropyFunction& S,
                        double vacuum_eps);

struct ConservationAudit {
    double mass_initial = 0.0, mass_final = 0.0;
    double mass_drift_rel = 0.0;           // raw drift / initial mass
    double mass_corrected_rel = 0.0;       // drift + boundary outflux integral
    double momentum_initial = 0.0, momentum_final = 0.0;
    double momentum_drift_rel = 0.0;
    double momentum_corrected_rel = 0.0;
};

// Relative drifts from accumulated run statistics. The corrected residuals
// add back the integrated boundary fluxes; the update is flux-form, so these
// vanish to roundoff on every run, boundary-active or not. Momentum drift is
// measured against max(|W0|, sum h|w0|) so symmetric data (W0 = 0) is
// handled sensibly.
ConservationAudit audit_conservation(const RunStats& st);

}  // namespace dfv

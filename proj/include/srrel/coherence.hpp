#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "srrel/density.hpp"
#include "srrel/kernel.hpp"

namespace srrel {

/// Kernel table -> RK4 propagators -> density transient for one (beta, delta) point.
/// `delta` may be negative (the transient is even in delta).
DensityTransient run_transient(double beta, double delta, const QGrid& grid,
                               const KernelTableOptions& kernel_opts = {});

/// Reference rate of two independent emitters, 4 exp(-2 q) per unit q.
double independent_rate(double q);

/// Int_0^{q_max} [R(q) - 4 exp(-2q)]^2 dq by the trapezoid rule.
double departure_integral(const DensityTransient& transient);

/// Unnormalized coherence metric for one velocity separation (full pipeline).
double g_metric(double beta, double delta_v, const QGrid& grid);

class HalfMaxNotBracketed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CoherenceScan {
    double beta = 0.0;
    std::vector<double> delta_grid;
    std::vector<double> g_values;  ///< normalized so g_values[0] == 1
    double normalization_a = 0.0;  ///< unnormalized metric at delta = 0
    double fwhm = 0.0;             ///< 2 x the positive-side half-maximum crossing
};

/// First crossing of 0.5 by linear interpolation between bracketing samples.
/// Throws HalfMaxNotBracketed if the curve never drops below 0.5.
double half_maximum_crossing(std::span<const double> x, std::span<const double> y);

/// Evaluates the metric on `delta_grid` (which must start at 0 and increase strictly),
/// normalizes by the delta = 0 value and extracts the FWHM. The per-delta pipelines are
/// independent and run on `workers` threads; results are gathered in grid order.
CoherenceScan scan_fwhm(double beta, std::span<const double> delta_grid, const QGrid& grid,
                        std::size_t workers = 1);

/// Scan that keeps the raw G values even when the half maximum is not bracketed
/// (fwhm is then NaN).
CoherenceScan scan_metric(double beta, std::span<const double> delta_grid, const QGrid& grid,
                          std::size_t workers = 1);

/// 121 points on [0, 30 (1 - beta)], step 0.25 (1 - beta). The coherence width shrinks
/// roughly like (1 - beta), so every beta gets the same resolution per width.
std::vector<double> default_delta_grid(double beta);

/// Uniform grid min, min + step, ... up to max (inclusive within round-off).
std::vector<double> uniform_delta_grid(double min, double max, double step);

}  // namespace srrel

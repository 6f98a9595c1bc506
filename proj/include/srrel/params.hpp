#pragma once

#include <cstddef>

// Dimensionless unit system shared by the whole pipeline.
//
//   time      q = Gamma'_0 t / (2 gamma)          (rest-frame rate, time-dilated)
//   velocity  delta = (dv / c) (omega'_0 / Gamma'_0)
//   rates     per unit q; multiply by Gamma'_0 / (2 gamma) for physical units
//
// Nothing below works in SI units.

namespace srrel {

/// Mean-speed configuration of a co-moving two-particle sample.
struct SampleParams {
    double beta = 0.0;     ///< v/c, in [0, 1)
    double gamma = 1.0;    ///< 1/sqrt(1 - beta^2), cached
    double delta_v = 0.0;  ///< observer-frame separation in units of c Gamma'_0 / omega'_0, >= 0
};

/// Validates beta and folds delta_v to |delta_v|.
/// Throws std::invalid_argument for beta outside [0, 1) or non-finite input.
SampleParams make_params(double beta, double delta_v);

double gamma_from_beta(double beta);
double beta_from_gamma(double gamma);

/// Uniform grid q_j = j * dq, j = 0 .. n-1, with n = floor(q_max / dq) + 1.
struct QGrid {
    double q_max = 8.0;
    double dq = 1e-3;
    std::size_t n = 8001;

    double at(std::size_t j) const { return static_cast<double>(j) * dq; }
    double last() const { return at(n - 1); }
};

inline constexpr double kDefaultQMax = 8.0;
inline constexpr double kDefaultDq = 1e-3;

/// Throws std::invalid_argument unless dq > 0 and q_max >= dq (both finite).
QGrid make_grid(double q_max = kDefaultQMax, double dq = kDefaultDq);

}  // namespace srrel

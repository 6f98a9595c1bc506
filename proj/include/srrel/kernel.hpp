#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "srrel/params.hpp"
#include "srrel/quadrature.hpp"

namespace srrel {

// Relativistic two-particle coherence kernel
//
//   C(q) = 3/(8 gamma^2) Int_{-1}^{1} dx N(x) / (1 - beta x)^4 * exp(i 2 delta x q / (1 - beta x)),
//   N(x) = (1 + beta^2)(1 + x^2) - 4 beta x,
//
// where x is the cosine between the photon direction and the common velocity. The
// prefactor makes C(0) = 1 for every beta; C -> 0 once the Doppler separation exceeds
// the linewidth.

/// Angular weight 3/(8 gamma^2) N(x) / (1 - beta x)^4.
double kernel_weight(double beta, double x);

/// Phase per unit q, 2 delta x / (1 - beta x).
double kernel_phase_rate(double beta, double delta, double x);

/// Quadrature failure annotated with the point that caused it.
class KernelQuadratureError : public QuadratureError {
public:
    KernelQuadratureError(double beta, double delta, double q, const std::string& what);
    double beta;
    double delta;
    double q;
};

/// Single kernel value by adaptive Gauss-Legendre. `delta` may be negative here; the
/// result is then the complex conjugate of the +|delta| value.
std::complex<double> kernel_at(double beta, double delta, double q,
                               const AdaptiveOptions& opts = {});

/// C(q) for validated sample parameters. Requires q >= 0.
std::complex<double> eval_kernel(const SampleParams& params, double q);

/// Kernel on a q-grid plus the half-step values RK4 needs.
struct KernelTable {
    double beta = 0.0;
    double delta = 0.0;  ///< signed separation the table was built for
    QGrid grid;
    std::vector<std::complex<double>> values;     ///< C(q_j), size n
    std::vector<std::complex<double>> midpoints;  ///< C(q_j + dq/2), size n - 1
};

struct KernelTableOptions {
    AdaptiveOptions quadrature{};
    std::size_t workers = 1;
};

/// One adaptive partition of [-1, 1], refined against the most oscillatory member of the
/// family (the largest q on the grid), is shared by every grid point. Values on the grid
/// are then accumulated with a per-node phase recurrence that is reseeded every block.
KernelTable build_kernel_table(const SampleParams& params, const QGrid& grid,
                               const KernelTableOptions& opts = {});

/// Signed-delta overload used for parity checks.
KernelTable build_kernel_table(double beta, double delta, const QGrid& grid,
                               const KernelTableOptions& opts = {});

/// Int_{-1}^{1} (1 - x^2) / (1 - beta x)^4 dx by adaptive quadrature. Analytically (4/3) gamma^4;
/// this is the angular factor behind the time-dilated self-energy Gamma'_0 / (2 gamma).
double self_energy_angular_integral(double beta);

/// |C(q_j)|^2 on the grid.
std::vector<double> kernel_sq_profile(const SampleParams& params, const QGrid& grid,
                                      const KernelTableOptions& opts = {});

/// Width of the leading lobe of a profile: the first q where it drops below half its q=0
/// value (linear interpolation). Returns the grid end if it never does.
double half_max_width(const std::vector<double>& profile, const QGrid& grid);

}  // namespace srrel

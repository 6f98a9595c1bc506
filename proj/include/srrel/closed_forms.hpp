#pragma once

#include <cmath>

// Analytic reference values for limiting cases. None of these touch the quadrature,
// the RK4 stepper or the discrete convolution.

namespace srrel::closed_form {

/// Kernel at beta = 0, a = 2 delta q:
///   3/8 [2 sin a / a + 2((a^2 - 2) sin a + 2 a cos a) / a^3]   (real).
inline double kernel_beta0(double a)
{
    if (std::fabs(a) < 1e-2) {
        const double a2 = a * a;
        return 1.0 - a2 / 5.0 + 3.0 * a2 * a2 / 280.0 - a2 * a2 * a2 / 3780.0;
    }
    const double s = std::sin(a);
    const double c = std::cos(a);
    return 0.375 * (2.0 * s / a + 2.0 * ((a * a - 2.0) * s + 2.0 * a * c) / (a * a * a));
}

/// (4/3) gamma^4 for the self-energy angular integral.
inline double self_energy_integral(double beta)
{
    const double inv_gamma_sq = 1.0 - beta * beta;
    return 4.0 / (3.0 * inv_gamma_sq * inv_gamma_sq);
}

// Coherent limit (delta = 0, C = 1).
inline double coherent_u11(double q) { return 0.5 * (1.0 + std::exp(-2.0 * q)); }
inline double coherent_u12(double q) { return 0.5 * (std::exp(-2.0 * q) - 1.0); }
inline double coherent_rho_1(double q) { return 2.0 * q * std::exp(-4.0 * q); }
inline double coherent_rho_gg(double q) { return 1.0 - std::exp(-4.0 * q) * (1.0 + 4.0 * q); }
inline double coherent_rate(double q) { return 4.0 * std::exp(-4.0 * q) * (1.0 + 4.0 * q); }

// Independent limit (C = 0).
inline double independent_u11(double q) { return std::exp(-q); }
inline double independent_rho_1(double q) { return std::exp(-2.0 * q) - std::exp(-4.0 * q); }
inline double independent_rate(double q) { return 4.0 * std::exp(-2.0 * q); }

}  // namespace srrel::closed_form

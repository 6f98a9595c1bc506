#pragma once

#include <complex>
#include <span>
#include <vector>

#include "srrel/propagators.hpp"

namespace srrel {

/// Products of one top (un-conjugated) and one bottom (conjugated) propagator within a
/// region of a density diagram. The ground block |U_{g;g}|^2 is identically 1.
struct BlockSet {
    QGrid grid;
    std::vector<double> b_e;                ///< |U_{e;e}|^2
    std::vector<double> b_a;                ///< |U_{1;1}|^2
    std::vector<std::complex<double>> b_b;  ///< conj(U_{1;1}) U_{1;2}
    std::vector<double> b_c;                ///< |U_{1;2}|^2
    std::vector<double> sigma;              ///< B_a + 2 Re B_b + B_c
};

BlockSet build_blocks(const PropagatorSet& props);

/// Diagonal populations and the photon emission rate, all per unit q.
struct DensityTransient {
    QGrid grid;
    std::vector<double> rho_ee;
    std::vector<double> rho_1;   ///< rho_{1;1} = rho_{2;2}
    std::vector<double> rho_gg;
    std::vector<double> rate;    ///< -d/dq (2 rho_ee + 2 rho_1), positive for emission
    std::vector<double> trace;   ///< rho_ee + 2 rho_1 + rho_gg
};

/// Trapezoidal causal convolution (f * g)(q_j) = Int_0^{q_j} f(q_j - s) g(s) ds.
std::vector<double> convolve_trapezoid(std::span<const double> f, std::span<const double> g,
                                       double dq);

/// Running trapezoidal integral Int_0^{q_j} f.
std::vector<double> cumulative_trapezoid(std::span<const double> f, double dq);

/// In q-units every vertical photon contributes 4 (Gamma'_0/gamma times 2 gamma/Gamma'_0
/// from the time measure of its convolution):
///   rho_1  = 2 (B_e * Sigma)
///   rho_gg = 16 Int_0^q (B_e * Sigma)
///   R      = 8 B_e - 4 Sigma + 16 (B_e * Sigma)
/// R is differentiated analytically, which removes one convolution.
DensityTransient assemble_density(const BlockSet& blocks);

/// Convenience: blocks and density straight from propagators.
DensityTransient density_from_propagators(const PropagatorSet& props);

}  // namespace srrel

#include "srrel/density.hpp"

#include <cmath>
#include <stdexcept>

namespace srrel {

BlockSet build_blocks(const PropagatorSet& props)
{
    const std::size_t n = props.grid.n;
    if (props.u11.size() != n || props.u12.size() != n || props.uee.size() != n)
        throw std::invalid_argument("propagator arrays do not match their grid");

    BlockSet blocks;
    blocks.grid = props.grid;
    blocks.b_e.resize(n);
    blocks.b_a.resize(n);
    blocks.b_b.resize(n);
    blocks.b_c.resize(n);
    blocks.sigma.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        blocks.b_e[j] = std::norm(props.uee[j]);
        blocks.b_a[j] = std::norm(props.u11[j]);
        blocks.b_b[j] = std::conj(props.u11[j]) * props.u12[j];
        blocks.b_c[j] = std::norm(props.u12[j]);
        blocks.sigma[j] = blocks.b_a[j] + 2.0 * blocks.b_b[j].real() + blocks.b_c[j];
    }
    return blocks;
}

std::vector<double> convolve_trapezoid(std::span<const double> f, std::span<const double> g,
                                       double dq)
{
    if (f.size() != g.size()) throw std::invalid_argument("convolution operands differ in length");
    const std::size_t n = f.size();
    std::vector<double> out(n, 0.0);
    for (std::size_t j = 1; j < n; ++j) {
        double sum = 0.5 * (f[j] * g[0] + f[0] * g[j]);
        for (std::size_t k = 1; k < j; ++k) sum += f[j - k] * g[k];
        out[j] = dq * sum;
    }
    return out;
}

std::vector<double> cumulative_trapezoid(std::span<const double> f, double dq)
{
    std::vector<double> out(f.size(), 0.0);
    for (std::size_t j = 1; j < f.size(); ++j) out[j] = out[j - 1] + 0.5 * dq * (f[j - 1] + f[j]);
    return out;
}

DensityTransient assemble_density(const BlockSet& blocks)
{
    const std::size_t n = blocks.grid.n;
    const double dq = blocks.grid.dq;
    const auto conv = convolve_trapezoid(blocks.b_e, blocks.sigma, dq);
    const auto conv_integral = cumulative_trapezoid(conv, dq);

    DensityTransient out;
    out.grid = blocks.grid;
    out.rho_ee = blocks.b_e;
    out.rho_1.resize(n);
    out.rho_gg.resize(n);
    out.rate.resize(n);
    out.trace.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        out.rho_1[j] = 2.0 * conv[j];
        out.rho_gg[j] = 16.0 * conv_integral[j];
        out.rate[j] = 8.0 * blocks.b_e[j] - 4.0 * blocks.sigma[j] + 16.0 * conv[j];
        out.trace[j] = out.rho_ee[j] + 2.0 * out.rho_1[j] + out.rho_gg[j];
    }
    return out;
}

DensityTransient density_from_propagators(const PropagatorSet& props)
{
    return assemble_density(build_blocks(props));
}

}  // namespace srrel

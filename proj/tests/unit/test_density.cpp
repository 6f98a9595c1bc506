#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "srrel/closed_forms.hpp"
#include "srrel/coherence.hpp"
#include "srrel/density.hpp"
#include "srrel/kernel.hpp"
#include "srrel/propagators.hpp"

using namespace srrel;

namespace {

KernelTable constant_table(const QGrid& grid, double c)
{
    KernelTable t;
    t.grid = grid;
    t.values.assign(grid.n, c);
    t.midpoints.assign(grid.n - 1, c);
    return t;
}

}  // namespace

TEST_CASE("trapezoid convolution of exponentials")
{
    // (e^{-a q} * e^{-b q})(q) = (e^{-b q} - e^{-a q}) / (a - b)
    const auto grid = make_grid(8.0, 1e-3);
    std::vector<double> f(grid.n), g(grid.n);
    for (std::size_t j = 0; j < grid.n; ++j) {
        f[j] = std::exp(-4.0 * grid.at(j));
        g[j] = std::exp(-1.0 * grid.at(j));
    }
    const auto h = convolve_trapezoid(f, g, grid.dq);
    CHECK(h[0] == 0.0);
    for (std::size_t j = 0; j < grid.n; j += 101) {
        const double q = grid.at(j);
        CHECK(std::fabs(h[j] - (std::exp(-q) - std::exp(-4.0 * q)) / 3.0) < 1e-6);
    }
}

TEST_CASE("cumulative trapezoid")
{
    const std::vector<double> f{1.0, 1.0, 1.0, 1.0};
    const auto c = cumulative_trapezoid(f, 0.5);
    CHECK(c == std::vector<double>{0.0, 0.5, 1.0, 1.5});
}

TEST_CASE("coherent limit closed forms")
{
    const auto grid = make_grid();
    const auto d = density_from_propagators(integrate_rk4(constant_table(grid, 1.0)));
    for (std::size_t j = 0; j < grid.n; ++j) {
        const double q = grid.at(j);
        CHECK(std::fabs(d.rho_1[j] - closed_form::coherent_rho_1(q)) <= 1e-5);
        CHECK(std::fabs(d.rho_gg[j] - closed_form::coherent_rho_gg(q)) <= 1e-5);
        CHECK(std::fabs(d.rate[j] - closed_form::coherent_rate(q)) <= 1e-5);
        CHECK(std::fabs(d.trace[j] - 1.0) <= 1e-5);
    }
}

TEST_CASE("independent limit closed forms")
{
    const auto grid = make_grid();
    const auto d = density_from_propagators(integrate_rk4(constant_table(grid, 0.0)));
    for (std::size_t j = 0; j < grid.n; ++j) {
        const double q = grid.at(j);
        CHECK(std::fabs(d.rho_1[j] - closed_form::independent_rho_1(q)) <= 1e-5);
        CHECK(std::fabs(d.rate[j] - closed_form::independent_rate(q)) <= 1e-5);
    }
}

TEST_CASE("block sum equals |u11 + u12|^2")
{
    const auto props = integrate_rk4(build_kernel_table(0.8, 2.0, make_grid(8.0, 1e-2)));
    const auto blocks = build_blocks(props);
    for (std::size_t j = 0; j < props.grid.n; ++j)
        CHECK(std::fabs(blocks.sigma[j] - std::norm(props.u11[j] + props.u12[j])) <= 1e-9);
}

TEST_CASE("rate starts at 4 and stays non-negative")
{
    const auto grid = make_grid(8.0, 1e-2);
    for (double beta : {0.0, 0.95})
        for (double delta : {0.0, 0.7, 30.0}) {
            const auto d = run_transient(beta, delta, grid);
            CHECK(std::fabs(d.rate[0] - 4.0) <= 1e-12);
            CHECK(*std::min_element(d.rate.begin(), d.rate.end()) >= 0.0);
        }
}

TEST_CASE("rate is the decay of the excited populations")
{
    const auto grid = make_grid();
    const auto d = run_transient(0.8, 1.5, grid);
    for (std::size_t j = 1; j + 1 < grid.n; ++j) {
        const double fd = -((2.0 * d.rho_ee[j + 1] + 2.0 * d.rho_1[j + 1]) -
                            (2.0 * d.rho_ee[j - 1] + 2.0 * d.rho_1[j - 1])) / (2.0 * grid.dq);
        CHECK(std::fabs(fd - d.rate[j]) <= 1e-4);
    }
}

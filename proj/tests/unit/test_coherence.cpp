#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "srrel/coherence.hpp"

using namespace srrel;

TEST_CASE("coherent normalization is 1/9")
{
    // G(0) = int (4 e^{-4q}(1+4q) - 4 e^{-2q})^2 dq = 1/9 in closed form
    CHECK(g_metric(0.3, 0.0, make_grid()) == doctest::Approx(1.0 / 9.0).epsilon(1e-6));
}

TEST_CASE("metric is even in the separation")
{
    const auto grid = make_grid(8.0, 1e-2);
    CHECK(g_metric(0.8, 1.5, grid) == doctest::Approx(g_metric(0.8, -1.5, grid)).epsilon(1e-12));
}

TEST_CASE("half-maximum crossing interpolates linearly")
{
    const std::vector<double> x{0.0, 1.0, 2.0, 3.0};
    const std::vector<double> y{1.0, 0.8, 0.4, 0.1};
    CHECK(half_maximum_crossing(x, y) == doctest::Approx(1.75));

    const std::vector<double> flat{1.0, 0.9, 0.8, 0.7};
    CHECK_THROWS_AS(half_maximum_crossing(x, flat), HalfMaxNotBracketed);
}

TEST_CASE("scan normalizes to the first sample and falls off")
{
    const auto grid = make_grid(8.0, 1e-2);
    const auto deltas = uniform_delta_grid(0.0, 0.6, 0.05);
    const auto scan = scan_fwhm(0.95, deltas, grid, 2);
    CHECK(scan.g_values.front() == 1.0);
    CHECK(scan.normalization_a == doctest::Approx(1.0 / 9.0).epsilon(1e-3));
    CHECK(scan.g_values.back() < 0.5);
    CHECK(scan.fwhm > 0.0);

    // smoothed curve never rises
    for (std::size_t i = 3; i + 2 < scan.g_values.size(); ++i) {
        double now = 0.0, before = 0.0;
        for (std::size_t k = i - 2; k <= i + 2; ++k) now += scan.g_values[k];
        for (std::size_t k = i - 3; k <= i + 1; ++k) before += scan.g_values[k];
        CHECK(now <= before);
    }
}

TEST_CASE("scan results do not depend on worker count")
{
    const auto grid = make_grid(4.0, 1e-2);
    const auto deltas = uniform_delta_grid(0.0, 3.0, 0.5);
    CHECK(scan_metric(0.0, deltas, grid, 1).g_values == scan_metric(0.0, deltas, grid, 4).g_values);
}

TEST_CASE("delta grids")
{
    const auto d = default_delta_grid(0.95);
    CHECK(d.front() == 0.0);
    CHECK(d.size() == 121);
    CHECK(d.back() == doctest::Approx(1.5));
    CHECK_THROWS_AS(uniform_delta_grid(0.0, 1.0, 0.0), std::invalid_argument);

    const auto grid = make_grid(1.0, 0.1);
    const std::vector<double> no_zero{0.5, 1.0};
    CHECK_THROWS_AS(scan_metric(0.0, no_zero, grid, 1), std::invalid_argument);
    const std::vector<double> unsorted{0.0, 1.0, 0.5};
    CHECK_THROWS_AS(scan_metric(0.0, unsorted, grid, 1), std::invalid_argument);
}

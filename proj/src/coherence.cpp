#include "srrel/coherence.hpp"

#include <cmath>
#include <limits>

#include "srrel/parallel.hpp"

namespace srrel {

DensityTransient run_transient(double beta, double delta, const QGrid& grid,
                               const KernelTableOptions& kernel_opts)
{
    const auto table = build_kernel_table(beta, delta, grid, kernel_opts);
    return density_from_propagators(integrate_rk4(table));
}

double independent_rate(double q) { return 4.0 * std::exp(-2.0 * q); }

double departure_integral(const DensityTransient& transient)
{
    const QGrid& grid = transient.grid;
    double sum = 0.0;
    double prev = 0.0;
    for (std::size_t j = 0; j < grid.n; ++j) {
        const double d = transient.rate[j] - independent_rate(grid.at(j));
        const double sq = d * d;
        if (j > 0) sum += 0.5 * grid.dq * (prev + sq);
        prev = sq;
    }
    return sum;
}

double g_metric(double beta, double delta_v, const QGrid& grid)
{
    if (!std::isfinite(delta_v)) throw std::invalid_argument("delta_v must be finite");
    return departure_integral(run_transient(beta, delta_v, grid));
}

double half_maximum_crossing(std::span<const double> x, std::span<const double> y)
{
    for (std::size_t j = 1; j < y.size(); ++j) {
        if (y[j] < 0.5) {
            const double t = (y[j - 1] - 0.5) / (y[j - 1] - y[j]);
            return x[j - 1] + t * (x[j] - x[j - 1]);
        }
    }
    throw HalfMaxNotBracketed("half-maximum not bracketed: G stays at or above 0.5 up to delta_v = " +
                              std::to_string(x.empty() ? 0.0 : x.back()));
}

namespace {

void check_delta_grid(std::span<const double> delta_grid)
{
    if (delta_grid.empty() || delta_grid.front() != 0.0)
        throw std::invalid_argument("delta grid must start at 0");
    for (std::size_t j = 1; j < delta_grid.size(); ++j)
        if (!(delta_grid[j] > delta_grid[j - 1]))
            throw std::invalid_argument("delta grid must be strictly increasing");
}

}  // namespace

CoherenceScan scan_metric(double beta, std::span<const double> delta_grid, const QGrid& grid,
                          std::size_t workers)
{
    make_params(beta, 0.0);
    check_delta_grid(delta_grid);
    if (grid.n < 2) throw std::invalid_argument("the coherence metric needs at least two q samples");

    CoherenceScan scan;
    scan.beta = beta;
    scan.delta_grid.assign(delta_grid.begin(), delta_grid.end());
    std::vector<double> raw(delta_grid.size());
    parallel_for(delta_grid.size(), workers,
                 [&](std::size_t i) { raw[i] = g_metric(beta, delta_grid[i], grid); });

    scan.normalization_a = raw.front();
    scan.g_values.resize(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) scan.g_values[i] = raw[i] / scan.normalization_a;
    scan.g_values.front() = 1.0;
    scan.fwhm = std::numeric_limits<double>::quiet_NaN();
    return scan;
}

CoherenceScan scan_fwhm(double beta, std::span<const double> delta_grid, const QGrid& grid,
                        std::size_t workers)
{
    auto scan = scan_metric(beta, delta_grid, grid, workers);
    scan.fwhm = 2.0 * half_maximum_crossing(scan.delta_grid, scan.g_values);
    return scan;
}

std::vector<double> uniform_delta_grid(double min, double max, double step)
{
    if (!(step > 0.0) || !(max >= min) || !std::isfinite(min) || !std::isfinite(max))
        throw std::invalid_argument("delta grid needs min <= max and step > 0");
    const auto count = static_cast<std::size_t>(std::floor((max - min) / step + 1e-9)) + 1;
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = min + static_cast<double>(i) * step;
    return out;
}

std::vector<double> default_delta_grid(double beta)
{
    const double scale = 1.0 - make_params(beta, 0.0).beta;
    return uniform_delta_grid(0.0, 30.0 * scale, 0.25 * scale);
}

}  // namespace srrel

#include "srrel/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "srrel/parallel.hpp"

namespace srrel {

namespace {

constexpr std::size_t kReseedBlock = 64;

std::string describe(double beta, double delta, double q, const std::string& what)
{
    std::ostringstream os;
    os.precision(17);
    os << "kernel quadrature failed at beta=" << beta << ", delta=" << delta << ", q=" << q
       << ": " << what;
    return os.str();
}

void require_beta(double beta)
{
    if (!(beta >= 0.0 && beta < 1.0)) throw std::invalid_argument("beta must lie in [0, 1)");
}

}  // namespace

KernelQuadratureError::KernelQuadratureError(double beta_, double delta_, double q_,
                                             const std::string& what)
    : QuadratureError(describe(beta_, delta_, q_, what)), beta(beta_), delta(delta_), q(q_)
{
}

double kernel_weight(double beta, double x)
{
    const double inv_gamma_sq = (1.0 - beta) * (1.0 + beta);
    const double numerator = (1.0 + beta * beta) * (1.0 + x * x) - 4.0 * beta * x;
    const double d = 1.0 - beta * x;
    const double d2 = d * d;
    return 0.375 * inv_gamma_sq * numerator / (d2 * d2);
}

double kernel_phase_rate(double beta, double delta, double x)
{
    return 2.0 * delta * x / (1.0 - beta * x);
}

std::complex<double> kernel_at(double beta, double delta, double q, const AdaptiveOptions& opts)
{
    require_beta(beta);
    if (!(q >= 0.0)) throw std::invalid_argument("kernel requires q >= 0");
    auto integrand = [beta, delta, q](double x) {
        return kernel_weight(beta, x) * std::polar(1.0, q * kernel_phase_rate(beta, delta, x));
    };
    try {
        return integrate_adaptive(integrand, -1.0, 1.0, opts).value;
    } catch (const QuadratureError& e) {
        throw KernelQuadratureError(beta, delta, q, e.what());
    }
}

std::complex<double> eval_kernel(const SampleParams& params, double q)
{
    return kernel_at(params.beta, params.delta_v, q);
}

KernelTable build_kernel_table(const SampleParams& params, const QGrid& grid,
                               const KernelTableOptions& opts)
{
    return build_kernel_table(params.beta, params.delta_v, grid, opts);
}

KernelTable build_kernel_table(double beta, double delta, const QGrid& grid,
                               const KernelTableOptions& opts)
{
    require_beta(beta);
    KernelTable table;
    table.beta = beta;
    table.delta = delta;
    table.grid = grid;

    // Samples live on the half-step lattice m * dq/2, m = 0 .. 2(n-1).
    const std::size_t samples = 2 * grid.n - 1;
    const double h = 0.5 * grid.dq;
    const double q_top = h * static_cast<double>(samples - 1);

    const auto& lo = gauss_legendre(opts.quadrature.low_order);
    const auto& hi = gauss_legendre(opts.quadrature.high_order);
    auto panel_error = [&](Panel p) {
        auto at_q = [&](double q) {
            auto f = [&](double x) {
                return kernel_weight(beta, x) * std::polar(1.0, q * kernel_phase_rate(beta, delta, x));
            };
            return std::abs(integrate_panel(f, p, hi) - integrate_panel(f, p, lo));
        };
        return std::max(at_q(q_top), at_q(0.5 * q_top));
    };

    std::vector<Panel> panels;
    try {
        panels = adapt_partition(panel_error, -1.0, 1.0, opts.quadrature);
    } catch (const QuadratureError& e) {
        throw KernelQuadratureError(beta, delta, q_top, e.what());
    }
    const NodeSet nodes = expand_partition(panels, hi);
    const std::size_t m = nodes.x.size();

    std::vector<double> weight(m);
    std::vector<double> rate(m);
    std::vector<double> step_re(m);
    std::vector<double> step_im(m);
    for (std::size_t i = 0; i < m; ++i) {
        weight[i] = nodes.w[i] * kernel_weight(beta, nodes.x[i]);
        rate[i] = kernel_phase_rate(beta, delta, nodes.x[i]);
        step_re[i] = std::cos(h * rate[i]);
        step_im[i] = std::sin(h * rate[i]);
    }

    std::vector<std::complex<double>> samples_out(samples);
    const std::size_t blocks = (samples + kReseedBlock - 1) / kReseedBlock;
    parallel_for(blocks, opts.workers, [&](std::size_t b) {
        const std::size_t begin = b * kReseedBlock;
        const std::size_t end = std::min(samples, begin + kReseedBlock);
        std::vector<double> re(m);
        std::vector<double> im(m);
        const double q0 = h * static_cast<double>(begin);
        for (std::size_t i = 0; i < m; ++i) {
            re[i] = std::cos(q0 * rate[i]);
            im[i] = std::sin(q0 * rate[i]);
        }
        for (std::size_t s = begin; s < end; ++s) {
            double sum_re = 0.0;
            double sum_im = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                sum_re += weight[i] * re[i];
                sum_im += weight[i] * im[i];
                const double r = re[i] * step_re[i] - im[i] * step_im[i];
                im[i] = re[i] * step_im[i] + im[i] * step_re[i];
                re[i] = r;
            }
            samples_out[s] = {sum_re, sum_im};
        }
    });

    table.values.resize(grid.n);
    table.midpoints.resize(grid.n - 1);
    for (std::size_t j = 0; j < grid.n; ++j) table.values[j] = samples_out[2 * j];
    for (std::size_t j = 0; j + 1 < grid.n; ++j) table.midpoints[j] = samples_out[2 * j + 1];
    return table;
}

double self_energy_angular_integral(double beta)
{
    require_beta(beta);
    auto integrand = [beta](double x) {
        const double d = 1.0 - beta * x;
        const double d2 = d * d;
        return std::complex<double>((1.0 - x * x) / (d2 * d2), 0.0);
    };
    // The integral grows like gamma^4; scale the absolute target so the relative error stays put.
    const double scale = 1.0 / ((1.0 - beta * beta) * (1.0 - beta * beta));
    AdaptiveOptions opts;
    opts.abs_tol = 1e-13 * scale;
    return integrate_adaptive(integrand, -1.0, 1.0, opts).value.real();
}

std::vector<double> kernel_sq_profile(const SampleParams& params, const QGrid& grid,
                                      const KernelTableOptions& opts)
{
    const auto table = build_kernel_table(params, grid, opts);
    std::vector<double> out(table.values.size());
    std::transform(table.values.begin(), table.values.end(), out.begin(),
                   [](std::complex<double> c) { return std::norm(c); });
    return out;
}

double half_max_width(const std::vector<double>& profile, const QGrid& grid)
{
    if (profile.empty()) return 0.0;
    const double half = 0.5 * profile.front();
    for (std::size_t j = 1; j < profile.size(); ++j) {
        if (profile[j] < half) {
            const double t = (profile[j - 1] - half) / (profile[j - 1] - profile[j]);
            return grid.at(j - 1) + t * grid.dq;
        }
    }
    return grid.last();
}

}  // namespace srrel

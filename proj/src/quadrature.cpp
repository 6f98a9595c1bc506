#include "srrel/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

namespace srrel {

namespace {

// Legendre P_n and its derivative at z by the three-term recurrence.
std::pair<double, double> legendre(std::size_t n, double z)
{
    double p0 = 1.0;
    double p1 = z;
    for (std::size_t k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = pk;
    }
    const double dp = static_cast<double>(n) * (z * p1 - p0) / (z * z - 1.0);
    return {p1, dp};
}

GaussRule compute_rule(std::size_t n)
{
    GaussRule rule;
    if (n == 1) {
        rule.nodes = {0.0};
        rule.weights = {2.0};
        return rule;
    }
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        // Tricomi initial guess for the i-th largest root.
        double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            const auto [p, dp] = legendre(n, z);
            const double dz = p / dp;
            z -= dz;
            if (std::fabs(dz) < 1e-16) break;
        }
        const double dp = legendre(n, z).second;
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

}  // namespace

const GaussRule& gauss_legendre(std::size_t order)
{
    if (order == 0) throw std::invalid_argument("Gauss-Legendre order must be positive");
    static std::mutex mutex;
    static std::map<std::size_t, GaussRule> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_rule(order)).first;
    return it->second;
}

std::complex<double> integrate_panel(const ComplexIntegrand& f, Panel p, const GaussRule& rule)
{
    const double mid = 0.5 * (p.a + p.b);
    const double half = 0.5 * (p.b - p.a);
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * sum;
}

std::vector<Panel> adapt_partition(const std::function<double(Panel)>& panel_error, double a,
                                   double b, const AdaptiveOptions& opts)
{
    const double width = b - a;
    std::vector<Panel> accepted;
    std::vector<Panel> pending{{a, b}};
    while (!pending.empty()) {
        const Panel p = pending.back();
        pending.pop_back();
        const double share = opts.abs_tol * (p.b - p.a) / width;
        if (panel_error(p) <= share) {
            accepted.push_back(p);
            continue;
        }
        if (accepted.size() + pending.size() + 2 > opts.max_panels)
            throw QuadratureError("adaptive quadrature exhausted its budget of " +
                                  std::to_string(opts.max_panels) + " panels");
        const double mid = 0.5 * (p.a + p.b);
        pending.push_back({mid, p.b});
        pending.push_back({p.a, mid});
    }
    std::sort(accepted.begin(), accepted.end(),
              [](const Panel& l, const Panel& r) { return l.a < r.a; });
    return accepted;
}

QuadratureResult integrate_adaptive(const ComplexIntegrand& f, double a, double b,
                                    const AdaptiveOptions& opts)
{
    const GaussRule& lo = gauss_legendre(opts.low_order);
    const GaussRule& hi = gauss_legendre(opts.high_order);
    if (a == b) return {};

    // Accepted panels keep their estimates so nothing is evaluated twice.
    struct Estimate {
        std::complex<double> value;
        double error;
    };
    std::map<std::pair<double, double>, Estimate> estimates;
    auto estimate = [&](Panel p) {
        const auto h = integrate_panel(f, p, hi);
        const double err = std::abs(h - integrate_panel(f, p, lo));
        estimates[{p.a, p.b}] = {h, err};
        return err;
    };
    const auto panels = adapt_partition(estimate, a, b, opts);

    QuadratureResult result;
    result.panels = panels.size();
    double total_error = 0.0;
    for (const auto& p : panels) {
        const auto& e = estimates.at({p.a, p.b});
        result.value += e.value;
        total_error += e.error;
    }
    result.error_estimate = total_error;
    return result;
}

NodeSet expand_partition(std::span<const Panel> panels, const GaussRule& rule)
{
    NodeSet set;
    set.x.reserve(panels.size() * rule.nodes.size());
    set.w.reserve(panels.size() * rule.nodes.size());
    for (const auto& p : panels) {
        const double mid = 0.5 * (p.a + p.b);
        const double half = 0.5 * (p.b - p.a);
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            set.x.push_back(mid + half * rule.nodes[i]);
            set.w.push_back(half * rule.weights[i]);
        }
    }
    return set;
}

}  // namespace srrel

#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace srrel {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Newton iteration on P_n; nodes ascending. Cached per order.
const GaussRule& gauss_legendre(std::size_t order);

struct Panel {
    double a;
    double b;
};

struct AdaptiveOptions {
    double abs_tol = 1e-9;
    std::size_t max_panels = std::size_t{1} << 14;
    std::size_t low_order = 10;
    std::size_t high_order = 20;
};

/// Thrown when the panel budget runs out before the error target is met.
class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct QuadratureResult {
    std::complex<double> value;
    double error_estimate = 0.0;
    std::size_t panels = 0;
};

using ComplexIntegrand = std::function<std::complex<double>(double)>;

/// Apply the order-n rule on one panel.
std::complex<double> integrate_panel(const ComplexIntegrand& f, Panel p, const GaussRule& rule);

/// Bisects panels until |I_high - I_low| on each panel is within abs_tol scaled by the
/// panel's share of [a, b]. The returned value is the sum of the high-order estimates.
QuadratureResult integrate_adaptive(const ComplexIntegrand& f, double a, double b,
                                    const AdaptiveOptions& opts = {});

/// Same acceptance rule, but returns the accepted partition (sorted by a) instead of the sum,
/// so that one partition can serve a family of related integrands.
/// `panel_error` may evaluate several integrands; it returns the largest per-panel estimate.
std::vector<Panel> adapt_partition(const std::function<double(Panel)>& panel_error, double a,
                                   double b, const AdaptiveOptions& opts = {});

/// Flattened node/weight list for a partition at the given order.
struct NodeSet {
    std::vector<double> x;
    std::vector<double> w;
};
NodeSet expand_partition(std::span<const Panel> panels, const GaussRule& rule);

}  // namespace srrel

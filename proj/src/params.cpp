#include "srrel/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace srrel {

double gamma_from_beta(double beta) { return 1.0 / std::sqrt((1.0 - beta) * (1.0 + beta)); }

double beta_from_gamma(double gamma) { return std::sqrt((gamma - 1.0) * (gamma + 1.0)) / gamma; }

SampleParams make_params(double beta, double delta_v)
{
    if (!std::isfinite(beta) || !std::isfinite(delta_v))
        throw std::invalid_argument("sample parameters must be finite");
    if (beta < 0.0 || beta >= 1.0)
        throw std::invalid_argument("beta must lie in [0, 1), got " + std::to_string(beta));
    return SampleParams{beta, gamma_from_beta(beta), std::fabs(delta_v)};
}

QGrid make_grid(double q_max, double dq)
{
    if (!std::isfinite(q_max) || !std::isfinite(dq) || !(dq > 0.0))
        throw std::invalid_argument("grid step dq must be finite and positive");
    if (q_max < dq)
        throw std::invalid_argument("grid horizon q_max must be at least dq");
    // The small slack keeps q_max/dq = 7999.9999999 (round-off in 8/1e-3) from losing a point.
    const auto steps = static_cast<std::size_t>(std::floor(q_max / dq + 1e-9));
    return QGrid{q_max, dq, steps + 1};
}

}  // namespace srrel

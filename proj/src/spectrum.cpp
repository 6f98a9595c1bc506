#include "srrel/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "srrel/params.hpp"

namespace srrel {

EmissionConfig make_emission_config(double beta, DipoleOrientation orientation, double theta,
                                    double phi, double linewidth_ratio, Polarization polarization)
{
    make_params(beta, 0.0);
    if (!(theta >= 0.0 && theta <= std::numbers::pi))
        throw std::invalid_argument("theta must lie in [0, pi]");
    if (!(phi >= 0.0 && phi < 2.0 * std::numbers::pi))
        throw std::invalid_argument("phi must lie in [0, 2 pi)");
    if (!(linewidth_ratio > 0.0) || !std::isfinite(linewidth_ratio))
        throw std::invalid_argument("linewidth ratio must be positive");
    return EmissionConfig{beta, orientation, theta, phi, linewidth_ratio, polarization};
}

double doppler_factor(double beta, double theta) { return 1.0 - beta * std::cos(theta); }

double doppler_peak(double beta, double theta)
{
    return 1.0 / (gamma_from_beta(beta) * doppler_factor(beta, theta));
}

double angular_factor(const EmissionConfig& cfg)
{
    if (cfg.orientation == DipoleOrientation::parallel) {
        if (cfg.polarization == Polarization::phi) return 0.0;
        return std::sin(cfg.theta) / gamma_from_beta(cfg.beta);
    }
    if (cfg.polarization == Polarization::theta)
        return std::sin(cfg.theta) - cfg.beta * std::cos(cfg.phi);
    return std::cos(cfg.theta) * std::sin(cfg.phi);
}

double survival_probability(double beta, double q)
{
    make_params(beta, 0.0);
    if (!(q >= 0.0)) throw std::invalid_argument("survival requires q >= 0");
    return std::exp(-2.0 * q);
}

double q_from_time(double beta, double tau) { return 0.5 * tau / gamma_from_beta(beta); }

double survival_at_time(double beta, double tau) { return survival_probability(beta, q_from_time(beta, tau)); }

namespace {

struct Resonance {
    double half_width;  // Gamma'_0 / (2 gamma)
    double detuning;    // alpha omega - 1/gamma
};

Resonance resonance(const EmissionConfig& cfg, double omega)
{
    const double gamma = gamma_from_beta(cfg.beta);
    return {0.5 * cfg.linewidth_ratio / gamma,
            doppler_factor(cfg.beta, cfg.theta) * omega - 1.0 / gamma};
}

}  // namespace

std::complex<double> emission_amplitude(const EmissionConfig& cfg, double omega_over_omega0, double q)
{
    using namespace std::complex_literals;
    const auto [half, detuning] = resonance(cfg, omega_over_omega0);
    const double elapsed = q / half;  // 2 gamma q / Gamma'_0
    const auto bracket = std::polar(1.0, detuning * elapsed) - std::exp(-q);
    return -1i * angular_factor(cfg) / (half + 1i * detuning) * bracket;
}

double emission_probability(const EmissionConfig& cfg, double omega_over_omega0)
{
    const auto [half, detuning] = resonance(cfg, omega_over_omega0);
    const double f = angular_factor(cfg);
    return f * f / (detuning * detuning + half * half);
}

double line_shape(const EmissionConfig& cfg, double omega_over_omega0)
{
    if (angular_factor(cfg) == 0.0) return 0.0;
    const auto [half, detuning] = resonance(cfg, omega_over_omega0);
    return half * half / (detuning * detuning + half * half);
}

std::vector<SpectrumSample> sample_spectrum(const EmissionConfig& cfg, double half_window,
                                            std::size_t points)
{
    if (points < 2) throw std::invalid_argument("spectrum needs at least two points");
    if (!(half_window > 0.0)) throw std::invalid_argument("spectrum window must be positive");
    const double alpha = doppler_factor(cfg.beta, cfg.theta);
    const double centre = doppler_peak(cfg.beta, cfg.theta);
    // Detuning half-width Gamma'_0/(2 gamma) maps to Gamma'_0/(2 gamma alpha) in omega.
    const double span = half_window * 0.5 * cfg.linewidth_ratio / (gamma_from_beta(cfg.beta) * alpha);
    std::vector<SpectrumSample> out(points);
    for (std::size_t i = 0; i < points; ++i) {
        const double omega = centre - span + 2.0 * span * static_cast<double>(i) /
                                                 static_cast<double>(points - 1);
        out[i] = {omega, line_shape(cfg, omega)};
    }
    return out;
}

}  // namespace srrel

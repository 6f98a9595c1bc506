#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "srrel/params.hpp"
#include "srrel/spectrum.hpp"

using namespace srrel;

TEST_CASE("Doppler peak positions")
{
    const double pi = std::numbers::pi;
    CHECK(doppler_peak(0.0, pi / 2) == doctest::Approx(1.0));
    const double gamma = gamma_from_beta(0.95);
    CHECK(doppler_peak(0.95, 0.0) == doctest::Approx(1.0 / (gamma * 0.05)));
    CHECK(doppler_peak(0.95, pi) == doctest::Approx(1.0 / (gamma * 1.95)));
}

TEST_CASE("line shape peaks at the Doppler centre")
{
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> beta_dist(0.0, 0.99);
    std::uniform_real_distribution<double> theta_dist(0.0, std::numbers::pi);
    for (int i = 0; i < 20; ++i) {
        const auto cfg = make_emission_config(beta_dist(rng), DipoleOrientation::perpendicular, theta_dist(rng),
                                              0.0, 1e-3);
        const auto samples = sample_spectrum(cfg, 10.0, 2001);
        std::size_t best = 0;
        for (std::size_t k = 1; k < samples.size(); ++k)
            if (samples[k].intensity > samples[best].intensity) best = k;
        const double step = samples[1].omega_over_omega0 - samples[0].omega_over_omega0;
        CHECK(std::fabs(samples[best].omega_over_omega0 - doppler_peak(cfg.beta, cfg.theta)) <= step);
        CHECK(samples[best].intensity == doctest::Approx(1.0));
    }
}

TEST_CASE("line shape is symmetric about the centre")
{
    const auto cfg = make_emission_config(0.8, DipoleOrientation::parallel, 1.1, 0.0, 1e-3);
    const double gamma = gamma_from_beta(cfg.beta);
    const double alpha = doppler_factor(cfg.beta, cfg.theta);
    const double half = 0.5 * cfg.linewidth_ratio / gamma;
    for (double u : {0.1, 1.0, 3.0, 20.0})
        CHECK(std::fabs(line_shape(cfg, (1.0 / gamma - u * half) / alpha) -
                        line_shape(cfg, (1.0 / gamma + u * half) / alpha)) <= 1e-10);
}

TEST_CASE("amplitude converges to the steady-state probability")
{
    const auto cfg = make_emission_config(0.6, DipoleOrientation::perpendicular, 0.7, 1.2, 1e-3);
    const double omega = doppler_peak(cfg.beta, cfg.theta) * (1.0 + 5e-4);
    const double p = emission_probability(cfg, omega);
    CHECK(std::fabs(std::norm(emission_amplitude(cfg, omega, 25.0)) - p) / p <= 1e-6);
    CHECK(std::abs(emission_amplitude(cfg, omega, 0.0)) == doctest::Approx(0.0));
}

TEST_CASE("angular factors")
{
    const double pi = std::numbers::pi;
    // a parallel dipole does not radiate along its axis
    CHECK(angular_factor(make_emission_config(0.5, DipoleOrientation::parallel, 0.0, 0.0, 1e-3)) ==
          doctest::Approx(0.0));
    const auto side = make_emission_config(0.5, DipoleOrientation::parallel, pi / 2, 0.0, 1e-3);
    CHECK(angular_factor(side) == doctest::Approx(1.0 / gamma_from_beta(0.5)));
    CHECK(line_shape(make_emission_config(0.5, DipoleOrientation::parallel, 0.0, 0.0, 1e-3), 1.0) == 0.0);
    const auto phi_pol = make_emission_config(0.5, DipoleOrientation::perpendicular, 0.0, pi / 2, 1e-3,
                                              Polarization::phi);
    CHECK(std::fabs(angular_factor(phi_pol)) == doctest::Approx(1.0));
}

TEST_CASE("survival and time dilation")
{
    for (double beta : {0.0, 0.5, 0.99}) {
        const double gamma = gamma_from_beta(beta);
        for (double tau : {0.0, 0.5, 4.0}) {
            CHECK(std::fabs(survival_at_time(beta, tau) - std::exp(-tau / gamma)) <= 1e-12);
            CHECK(q_from_time(beta, tau) == doctest::Approx(tau / (2.0 * gamma)));
        }
        CHECK(std::fabs(survival_probability(beta, 1.3) - std::exp(-2.6)) <= 1e-12);
    }
    // a faster emitter survives longer in the lab
    CHECK(survival_at_time(0.9, 1.0) > survival_at_time(0.1, 1.0));
}

TEST_CASE("invalid emission configs are rejected")
{
    CHECK_THROWS_AS(make_emission_config(0.5, DipoleOrientation::parallel, -0.1, 0.0, 1e-3), std::invalid_argument);
    CHECK_THROWS_AS(make_emission_config(0.5, DipoleOrientation::parallel, 0.1, 7.0, 1e-3), std::invalid_argument);
    CHECK_THROWS_AS(make_emission_config(0.5, DipoleOrientation::parallel, 0.1, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_emission_config(1.0, DipoleOrientation::parallel, 0.1, 0.0, 1e-3), std::invalid_argument);
}

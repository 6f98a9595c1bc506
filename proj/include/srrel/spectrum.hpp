#pragma once

#include <complex>
#include <vector>

namespace srrel {

// Single-particle photon emission for a moving two-level emitter. Frequencies are in
// units of the rest-frame transition frequency omega'_0; linewidth_ratio = Gamma'_0 / omega'_0.

enum class DipoleOrientation { parallel, perpendicular };
enum class Polarization { theta, phi };

struct EmissionConfig {
    double beta = 0.0;
    DipoleOrientation orientation = DipoleOrientation::perpendicular;
    double theta = 0.0;  ///< angle between mode direction and velocity, [0, pi]
    double phi = 0.0;    ///< azimuth of the mode, [0, 2 pi); perpendicular dipoles only
    double linewidth_ratio = 1e-3;
    Polarization polarization = Polarization::theta;
};

/// Throws std::invalid_argument if any field is out of range.
EmissionConfig make_emission_config(double beta, DipoleOrientation orientation, double theta,
                                    double phi, double linewidth_ratio,
                                    Polarization polarization = Polarization::theta);

/// alpha_k = 1 - beta cos(theta).
double doppler_factor(double beta, double theta);

/// Observer-frame line centre 1 / (gamma (1 - beta cos theta)), in units of omega'_0.
double doppler_peak(double beta, double theta);

/// Coupling of the selected polarization:
///   parallel:       theta-pol sin(theta)/gamma, phi-pol 0
///   perpendicular:  theta-pol sin(theta) - beta cos(phi), phi-pol cos(theta) sin(phi)
double angular_factor(const EmissionConfig& cfg);

/// |U_{e,0;e,0}|^2 = exp(-2 q). In q-units the time dilation is already absorbed.
double survival_probability(double beta, double q);

/// The same survival at fixed rest-rate-scaled time tau = Gamma'_0 t: exp(-tau / gamma).
double survival_at_time(double beta, double tau);

/// q = Gamma'_0 t / (2 gamma) for tau = Gamma'_0 t.
double q_from_time(double beta, double tau);

/// U_{g,k;e,0} after q, up to the constant xi*_k d' / hbar:
///   -i F / (Gamma'_0/(2 gamma) + i D) [exp(i D dt) - exp(-q)],  D = alpha omega - 1/gamma,
/// with dt = 2 gamma q / Gamma'_0 the elapsed time.
std::complex<double> emission_amplitude(const EmissionConfig& cfg, double omega_over_omega0,
                                        double q);

/// t -> infinity limit of |emission_amplitude|^2: F^2 / (D^2 + (Gamma'_0/(2 gamma))^2).
double emission_probability(const EmissionConfig& cfg, double omega_over_omega0);

/// emission_probability divided by its value at the Doppler centre, so the peak is 1.
/// Zero when the angular factor vanishes.
double line_shape(const EmissionConfig& cfg, double omega_over_omega0);

struct SpectrumSample {
    double omega_over_omega0;
    double intensity;
};

/// `points` samples of line_shape spanning +-`half_window` Lorentzian half-widths
/// (in detuning) around the Doppler centre.
std::vector<SpectrumSample> sample_spectrum(const EmissionConfig& cfg, double half_window,
                                            std::size_t points);

}  // namespace srrel

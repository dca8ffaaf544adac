#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

// Physical-unit helpers. The rest of the library is dimensionless
// (lengths in l0, energies in hbar*omega); these conversions exist so
// that a dimensionless temperature alpha can be connected to a real
// mass, temperature and trap frequency.

namespace pcryst::units {

inline constexpr double hbar = 1.054571817e-34;         // J s
inline constexpr double k_boltzmann = 1.380649e-23;     // J / K

// Mean thermal wavelength sqrt(2 pi hbar^2 / (m kB T)), in meters.
inline double thermal_wavelength(double mass_kg, double temperature_k) {
    if (!(mass_kg > 0.0) || !(temperature_k > 0.0))
        throw std::domain_error("thermal_wavelength: mass and temperature must be positive");
    return std::sqrt(2.0 * std::numbers::pi * hbar * hbar /
                     (mass_kg * k_boltzmann * temperature_k));
}

// Harmonic oscillator length sqrt(hbar / (m omega)), in meters.
inline double oscillator_length(double mass_kg, double omega_rad_s) {
    if (!(mass_kg > 0.0) || !(omega_rad_s > 0.0))
        throw std::domain_error("oscillator_length: mass and frequency must be positive");
    return std::sqrt(hbar / (mass_kg * omega_rad_s));
}

// alpha = kB T / (hbar omega); the single control parameter of the
// dimensionless model. Satisfies 2 pi / lambda^2 = alpha / l0^2.
inline double dimensionless_temperature(double temperature_k, double omega_rad_s) {
    if (!(temperature_k > 0.0) || !(omega_rad_s > 0.0))
        throw std::domain_error("dimensionless_temperature: temperature and frequency must be positive");
    return k_boltzmann * temperature_k / (hbar * omega_rad_s);
}

}  // namespace pcryst::units

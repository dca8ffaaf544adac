#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcryst/geometry.hpp"
#include "pcryst/potential.hpp"

// Total dimensionless energy of a configuration,
//
//   E / (hbar omega) = sum_{i<j} v(s_ij) + c/2 * sum_i s_i^2,
//
// with v the pair law, s_ij pair separations, s_i distances from the trap
// center and c the confinement strength (c = 1 is the physical trap).
// Plus the exact analytic gradient used for local refinement.

namespace pcryst {

struct ModelParams {
    int n_particles = 0;
    PairPotentialSpec potential{};
    double confinement_strength = 1.0;

    void validate() const {
        if (n_particles < 1)
            throw std::invalid_argument("ModelParams: n_particles must be >= 1");
        if (!(confinement_strength > 0.0) || !std::isfinite(confinement_strength))
            throw std::invalid_argument("ModelParams: confinement_strength must be positive");
        potential.validate();
    }
};

namespace detail {

inline void check_configuration(const ModelParams& params, const Configuration& config) {
    params.validate();
    if (config.size() != static_cast<std::size_t>(params.n_particles))
        throw std::invalid_argument("configuration size does not match ModelParams::n_particles");
    for (std::size_t i = 0; i < config.size(); ++i)
        if (!std::isfinite(config[i].x) || !std::isfinite(config[i].y))
            throw std::invalid_argument("configuration: non-finite coordinate at particle " +
                                        std::to_string(i));
}

// Unvalidated total energy; +infinity on contact under a divergent law.
// Summation order is fixed (i<j, lexicographic) so results are
// bit-reproducible.
inline double total_energy_raw(const ModelParams& params, const Configuration& config) noexcept {
    const std::size_t n = config.size();
    double e = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            e += pair_value_raw(params.potential, norm(config[j] - config[i]));
    double r2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) r2 += norm2(config[i]);
    return e + 0.5 * params.confinement_strength * r2;
}

// Energy terms owned by particle i when placed at pos: its confinement
// plus its interactions with every other particle. Moving one particle
// changes the total energy by the difference of two of these.
inline double site_energy_raw(const ModelParams& params, const Configuration& config,
                              std::size_t i, Vec2 pos) noexcept {
    double e = 0.5 * params.confinement_strength * norm2(pos);
    for (std::size_t j = 0; j < config.size(); ++j) {
        if (j == i) continue;
        e += pair_value_raw(params.potential, norm(pos - config[j]));
    }
    return e;
}

inline std::vector<Vec2> energy_gradient_raw(const ModelParams& params,
                                             const Configuration& config) {
    const std::size_t n = config.size();
    std::vector<Vec2> grad(n);
    for (std::size_t i = 0; i < n; ++i)
        grad[i] = params.confinement_strength * config[i];
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vec2 d = config[i] - config[j];
            const double s = norm(d);
            if (s == 0.0) continue;  // validated path rejects this earlier
            const Vec2 f = (pair_derivative_raw(params.potential, s) / s) * d;
            grad[i] = grad[i] + f;
            grad[j] = grad[j] - f;
        }
    }
    return grad;
}

inline double gradient_max_norm(const std::vector<Vec2>& grad) {
    double m = 0.0;
    for (Vec2 g : grad) m = std::max({m, std::abs(g.x), std::abs(g.y)});
    return m;
}

}  // namespace detail

// E / (hbar omega). Throws if two particles coincide under a law that
// diverges at contact, naming the offending pair.
inline double total_energy(const ModelParams& params, const Configuration& config) {
    detail::check_configuration(params, config);
    if (params.potential.divergent_at_contact()) {
        for (std::size_t i = 0; i + 1 < config.size(); ++i)
            for (std::size_t j = i + 1; j < config.size(); ++j)
                if (config[i] == config[j])
                    throw std::domain_error("total_energy: particles " + std::to_string(i) +
                                            " and " + std::to_string(j) +
                                            " coincide under a divergent potential");
    }
    return detail::total_energy_raw(params, config);
}

// Exact analytic gradient: dE/dr_i = c r_i + sum_{j != i} v'(s_ij) (r_i - r_j)/s_ij.
inline std::vector<Vec2> energy_gradient(const ModelParams& params, const Configuration& config) {
    detail::check_configuration(params, config);
    if (params.potential.divergent_at_contact()) {
        for (std::size_t i = 0; i + 1 < config.size(); ++i)
            for (std::size_t j = i + 1; j < config.size(); ++j)
                if (config[i] == config[j])
                    throw std::domain_error("energy_gradient: particles " + std::to_string(i) +
                                            " and " + std::to_string(j) +
                                            " coincide under a divergent potential");
    }
    return detail::energy_gradient_raw(params, config);
}

}  // namespace pcryst

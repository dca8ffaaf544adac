#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

// Pair interaction laws v(s) and their radial derivatives, with s = r/l0
// the separation in oscillator lengths and energies in units of hbar*omega.
//
// The statistical kinds implement the effective quantum-statistical pair
// potential v(s) = -alpha * ln(1 -+ exp(-alpha s^2)) (- fermions, + bosons):
// a classical stand-in for exchange correlations, repulsive for fermions
// and weakly attractive for bosons, with range set by the thermal
// wavelength (alpha s^2 ~ 2 pi).

namespace pcryst {

enum class PotentialKind {
    StatisticalFermion,
    StatisticalBoson,
    Coulomb,
    NoInteraction,
};

inline const char* to_string(PotentialKind kind) {
    switch (kind) {
        case PotentialKind::StatisticalFermion: return "fermion";
        case PotentialKind::StatisticalBoson: return "boson";
        case PotentialKind::Coulomb: return "coulomb";
        case PotentialKind::NoInteraction: return "none";
    }
    return "unknown";
}

struct PairPotentialSpec {
    PotentialKind kind = PotentialKind::StatisticalFermion;
    // dimensionless temperature kB T / (hbar omega); statistical kinds only
    double alpha = 1.0;
    // coupling of the 1/s law; Coulomb kind only
    double coulomb_strength = 1.0;

    static PairPotentialSpec fermion(double alpha) {
        return {PotentialKind::StatisticalFermion, alpha, 1.0};
    }
    static PairPotentialSpec boson(double alpha) {
        return {PotentialKind::StatisticalBoson, alpha, 1.0};
    }
    static PairPotentialSpec coulomb(double strength = 1.0) {
        return {PotentialKind::Coulomb, 1.0, strength};
    }
    static PairPotentialSpec none() {
        return {PotentialKind::NoInteraction, 1.0, 1.0};
    }

    void validate() const {
        const bool statistical = kind == PotentialKind::StatisticalFermion ||
                                 kind == PotentialKind::StatisticalBoson;
        if (statistical && !(alpha > 0.0 && std::isfinite(alpha)))
            throw std::domain_error("PairPotentialSpec: alpha must be positive for statistical kinds");
        if (kind == PotentialKind::Coulomb &&
            !(coulomb_strength > 0.0 && std::isfinite(coulomb_strength)))
            throw std::domain_error("PairPotentialSpec: coulomb_strength must be positive");
    }

    // true if v(s) diverges as s -> 0 (coincident particles are forbidden)
    bool divergent_at_contact() const {
        return kind == PotentialKind::StatisticalFermion || kind == PotentialKind::Coulomb;
    }
};

namespace detail {

// exp(-x) underflows past this point; the statistical potential is then
// far below any representable scale and is clamped to exactly 0
inline constexpr double stat_underflow_cut = 700.0;

// Unvalidated pair energy. s = 0 under a divergent kind yields +infinity
// (used by the annealer to auto-reject coincident proposals).
inline double pair_value_raw(const PairPotentialSpec& spec, double s) noexcept {
    switch (spec.kind) {
        case PotentialKind::StatisticalFermion: {
            const double x = spec.alpha * s * s;
            if (x > stat_underflow_cut) return 0.0;
            // ln(1 - e^-x): expm1 keeps precision for small x, log1p for
            // large x where the result itself is tiny
            if (x < 0.6931471805599453)  // ln 2
                return -spec.alpha * std::log(-std::expm1(-x));
            return -spec.alpha * std::log1p(-std::exp(-x));
        }
        case PotentialKind::StatisticalBoson: {
            const double x = spec.alpha * s * s;
            if (x > stat_underflow_cut) return 0.0;
            return -spec.alpha * std::log1p(std::exp(-x));
        }
        case PotentialKind::Coulomb:
            return s > 0.0 ? spec.coulomb_strength / s
                           : std::numeric_limits<double>::infinity();
        case PotentialKind::NoInteraction:
            return 0.0;
    }
    return 0.0;
}

inline double pair_derivative_raw(const PairPotentialSpec& spec, double s) noexcept {
    switch (spec.kind) {
        case PotentialKind::StatisticalFermion: {
            const double x = spec.alpha * s * s;
            if (x > stat_underflow_cut) return 0.0;
            // dv/ds = -2 alpha^2 s / (e^x - 1), strictly negative (repulsive)
            return -2.0 * spec.alpha * spec.alpha * s / std::expm1(x);
        }
        case PotentialKind::StatisticalBoson: {
            const double x = spec.alpha * s * s;
            if (x > stat_underflow_cut) return 0.0;
            // dv/ds = +2 alpha^2 s / (e^x + 1), strictly positive (attractive)
            return 2.0 * spec.alpha * spec.alpha * s / (std::exp(x) + 1.0);
        }
        case PotentialKind::Coulomb:
            return -spec.coulomb_strength / (s * s);
        case PotentialKind::NoInteraction:
            return 0.0;
    }
    return 0.0;
}

inline void check_separation(const PairPotentialSpec& spec, double s, bool zero_allowed) {
    if (!std::isfinite(s) || s < 0.0)
        throw std::domain_error(std::string("pair potential (") + to_string(spec.kind) +
                                "): separation must be finite and non-negative");
    if (s == 0.0 && !zero_allowed)
        throw std::domain_error(std::string("pair potential (") + to_string(spec.kind) +
                                "): separation must be strictly positive");
}

}  // namespace detail

// v(s) in units of hbar*omega. s = 0 is permitted only where the law is
// finite at contact (boson, no-interaction).
inline double pair_value(const PairPotentialSpec& spec, double s) {
    spec.validate();
    detail::check_separation(spec, s, /*zero_allowed=*/!spec.divergent_at_contact());
    return detail::pair_value_raw(spec, s);
}

// dv/ds; requires s > 0 for every kind.
inline double pair_derivative(const PairPotentialSpec& spec, double s) {
    spec.validate();
    detail::check_separation(spec, s, /*zero_allowed=*/false);
    return detail::pair_derivative_raw(spec, s);
}

}  // namespace pcryst

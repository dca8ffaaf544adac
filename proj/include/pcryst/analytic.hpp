#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "pcryst/energy.hpp"
#include "pcryst/geometry.hpp"

// Closed-form and template-constrained minimizers for small N under the
// fermionic statistical potential: every small-N minimum is a single ring
// of particles with an optional particle at the trap center, so the
// 2N-dimensional problem collapses to one radius.

namespace pcryst {

// Ring of `ring_size` particles, optionally plus one at the center.
struct TemplateKind {
    int ring_size = 0;
    bool centered = false;

    int particle_count() const { return ring_size + (centered ? 1 : 0); }
    friend bool operator==(TemplateKind a, TemplateKind b) = default;
};

inline constexpr TemplateKind kTriangle3{3, false};
inline constexpr TemplateKind kSquare4{4, false};
inline constexpr TemplateKind kRing5{5, false};
inline constexpr TemplateKind kPentagonPlusCenter6{5, true};

struct TemplateGeometry {
    TemplateKind kind{};
    double radius = 0.0;  // shell radius r/l0
    double phase = 0.0;   // overall rotation, radians

    void validate() const {
        if (kind.ring_size < 1)
            throw std::invalid_argument("TemplateGeometry: ring_size must be >= 1");
        if (!(radius > 0.0) || !std::isfinite(radius))
            throw std::invalid_argument("TemplateGeometry: radius must be positive");
        if (!std::isfinite(phase))
            throw std::invalid_argument("TemplateGeometry: phase must be finite");
    }
};

// Explicit particle positions: ring sites first, center (if any) last.
inline Configuration realize(const TemplateGeometry& geom) {
    geom.validate();
    Configuration config;
    config.reserve(static_cast<std::size_t>(geom.kind.particle_count()));
    for (int k = 0; k < geom.kind.ring_size; ++k) {
        const double angle =
            geom.phase + 2.0 * std::numbers::pi * k / geom.kind.ring_size;
        config.push_back({geom.radius * std::cos(angle), geom.radius * std::sin(angle)});
    }
    if (geom.kind.centered) config.push_back({0.0, 0.0});
    return config;
}

// Equilateral-triangle (N=3) shell radius, exact at any alpha:
// r/l0 = sqrt(ln(6 alpha^2 + 1) / (3 alpha)).
inline double triangle_radius(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw std::domain_error("triangle_radius: alpha must be positive");
    return std::sqrt(std::log(6.0 * alpha * alpha + 1.0) / (3.0 * alpha));
}

struct SquareSolution {
    double z;       // exp(-2 alpha (r/l0)^2), in (0, 1)
    double radius;  // r/l0
};

// Square (N=4) minimum. The stationarity condition is a quadratic in
// z = exp(-2 alpha r^2); the positive root is the physical one:
// z = (-2 alpha^2 + sqrt(1 + 8 alpha^2 + 4 alpha^4)) / (1 + 8 alpha^2).
inline SquareSolution square_solution(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw std::domain_error("square_solution: alpha must be positive");
    const double a2 = alpha * alpha;
    const double z =
        (-2.0 * a2 + std::sqrt(1.0 + 8.0 * a2 + 4.0 * a2 * a2)) / (1.0 + 8.0 * a2);
    return {z, std::sqrt(-std::log(z) / (2.0 * alpha))};
}

// Ring-template energy from the chord-length relations: a ring of n
// particles at radius r has n pairs at 2r sin(pi k/n) for each chord
// index k < n/2 (n/2 pairs when k = n/2), plus n center pairs at r when
// a center particle is present. Fermionic statistical pair law.
inline double template_energy(double alpha, const TemplateGeometry& geom) {
    geom.validate();
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw std::domain_error("template_energy: alpha must be positive");
    const auto spec = PairPotentialSpec::fermion(alpha);
    const int n = geom.kind.ring_size;
    double e = 0.0;
    for (int k = 1; 2 * k <= n; ++k) {
        const double multiplicity = (2 * k == n) ? n / 2.0 : static_cast<double>(n);
        const double chord = 2.0 * geom.radius * std::sin(std::numbers::pi * k / n);
        e += multiplicity * detail::pair_value_raw(spec, chord);
    }
    if (geom.kind.centered) e += n * detail::pair_value_raw(spec, geom.radius);
    return e + 0.5 * n * geom.radius * geom.radius;
}

namespace detail {

// Golden-section search on [lo, hi]; assumes a single interior minimum.
template <typename F>
double golden_section_minimize(F&& f, double lo, double hi, double tol) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

// Scan a geometric grid over [lo, hi] and bracket the lowest interior
// grid point by its neighbors. Throws if the minimum sits on the grid
// boundary (no interior minimum to refine).
template <typename F>
std::pair<double, double> bracket_minimum(F&& f, double lo, double hi, double factor) {
    std::vector<double> xs;
    for (double x = lo; x < hi; x *= factor) xs.push_back(x);
    xs.push_back(hi);
    std::size_t best = 0;
    double best_f = f(xs[0]);
    for (std::size_t i = 1; i < xs.size(); ++i) {
        const double fx = f(xs[i]);
        if (fx < best_f) {
            best_f = fx;
            best = i;
        }
    }
    if (best == 0 || best + 1 == xs.size())
        throw std::runtime_error("minimize_template: no interior minimum bracketed in radius range");
    return {xs[best - 1], xs[best + 1]};
}

}  // namespace detail

struct TemplateMinimum {
    double radius;
    double energy;
};

// 1-D minimization of the template energy over the shell radius
// (golden-section, bracket located on a geometric grid over
// (1e-4, 50) l0, converged when the bracket is narrower than 1e-10).
inline TemplateMinimum minimize_template(double alpha, TemplateKind kind) {
    const auto energy_of = [&](double r) {
        return template_energy(alpha, TemplateGeometry{kind, r, 0.0});
    };
    const auto [lo, hi] = detail::bracket_minimum(energy_of, 1e-4, 50.0, 1.05);
    const double r = detail::golden_section_minimize(energy_of, lo, hi, 1e-10);
    return {r, energy_of(r)};
}

}  // namespace pcryst

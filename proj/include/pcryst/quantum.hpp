#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

// Non-interacting quantum reference quantities for the 2D isotropic
// harmonic trap: normalized oscillator orbitals, level degeneracies and
// filled-shell (magic) particle numbers, and the N=3 one-particle density
// of the filled lowest two shells. Coordinates are dimensionless (units
// of l0).

namespace pcryst {

struct OrbitalIndex {
    int nx = 0;
    int ny = 0;
};

namespace detail {

// Normalized 1D Hermite function h_n(u) = H_n(u) e^{-u^2/2} / sqrt(2^n n! sqrt(pi)),
// evaluated by the stable normalized three-term recurrence (no factorial
// overflow for large n).
inline double hermite_function(int n, double u) {
    const double h0 = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * u * u);
    if (n == 0) return h0;
    double prev = h0;
    double cur = std::sqrt(2.0) * u * h0;
    for (int k = 1; k < n; ++k) {
        const double next = std::sqrt(2.0 / (k + 1.0)) * u * cur -
                            std::sqrt(k / (k + 1.0)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace detail

// Normalized 2D oscillator orbital phi_{nx,ny}(x, y).
inline double orbital_value(OrbitalIndex idx, double x, double y) {
    if (idx.nx < 0 || idx.ny < 0)
        throw std::domain_error("orbital_value: quantum numbers must be non-negative");
    return detail::hermite_function(idx.nx, x) * detail::hermite_function(idx.ny, y);
}

// Degeneracy of the k-th oscillator level E = hbar omega k (k = nx+ny+1): k states.
inline int level_degeneracy(int shell_index) {
    if (shell_index < 1)
        throw std::domain_error("level_degeneracy: shell index must be >= 1");
    return shell_index;
}

// Particle numbers with all levels filled up to some energy:
// partial sums k(k+1)/2 -> 1, 3, 6, 10, 15, 21, ...
inline std::vector<int> magic_numbers(int max_shells) {
    if (max_shells < 1)
        throw std::domain_error("magic_numbers: max_shells must be >= 1");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(max_shells));
    int total = 0;
    for (int k = 1; k <= max_shells; ++k) {
        total += level_degeneracy(k);
        out.push_back(total);
    }
    return out;
}

// Square grid of density values over [-extent, extent]^2.
struct DensityGrid {
    double extent = 0.0;
    int resolution = 0;
    std::vector<double> values;  // row-major, values[j*resolution + i] = rho(x_i, y_j)

    double coord(int i) const {
        return -extent + 2.0 * extent * i / (resolution - 1);
    }
    double at(int i, int j) const {
        return values[static_cast<std::size_t>(j) * resolution + i];
    }
};

// One-particle density of N=3 fermions filling the lowest two levels:
// rho = |phi_00|^2 + |phi_10|^2 + |phi_01|^2. Radially symmetric, so it
// shows no trace of any geometric particle arrangement.
inline DensityGrid density_n3(double extent, int resolution) {
    if (!(extent > 0.0))
        throw std::domain_error("density_n3: extent must be positive");
    if (resolution < 3)
        throw std::domain_error("density_n3: resolution must be >= 3");

    DensityGrid grid{extent, resolution, {}};
    grid.values.resize(static_cast<std::size_t>(resolution) * resolution);

    std::vector<double> g0(resolution), g1(resolution);  // squared 1-D orbitals
    for (int i = 0; i < resolution; ++i) {
        const double u = grid.coord(i);
        const double h0 = detail::hermite_function(0, u);
        const double h1 = detail::hermite_function(1, u);
        g0[i] = h0 * h0;
        g1[i] = h1 * h1;
    }
    for (int j = 0; j < resolution; ++j) {
        for (int i = 0; i < resolution; ++i) {
            const double s_wave = g0[i] * g0[j];
            const double p_x = g1[i] * g0[j];
            const double p_y = g0[i] * g1[j];
            // single multiplies plus this grouping keep rho(x,y) == rho(y,x)
            // bit-exact
            grid.values[static_cast<std::size_t>(j) * resolution + i] =
                s_wave + (p_x + p_y);
        }
    }
    return grid;
}

// Trapezoid-rule integral of the gridded density.
inline double grid_integral(const DensityGrid& grid) {
    const int res = grid.resolution;
    const double h = 2.0 * grid.extent / (res - 1);
    double total = 0.0;
    for (int j = 0; j < res; ++j) {
        const double wy = (j == 0 || j == res - 1) ? 0.5 : 1.0;
        double row = 0.0;
        for (int i = 0; i < res; ++i) {
            const double wx = (i == 0 || i == res - 1) ? 0.5 : 1.0;
            row += wx * grid.at(i, j);
        }
        total += wy * row;
    }
    return total * h * h;
}

}  // namespace pcryst

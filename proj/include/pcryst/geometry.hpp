#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace pcryst {

// Planar position/displacement vector, coordinates in units of the
// oscillator length l0.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double c, Vec2 a) { return {c * a.x, c * a.y}; }
    friend Vec2 operator*(Vec2 a, double c) { return {c * a.x, c * a.y}; }

    friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

// z-component of the 3D cross product of in-plane vectors
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

inline double norm2(Vec2 a) { return a.x * a.x + a.y * a.y; }

inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

inline Vec2 rotated(Vec2 a, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * a.x - s * a.y, s * a.x + c * a.y};
}

// reflection across the x axis
inline Vec2 mirrored(Vec2 a) { return {a.x, -a.y}; }

// N particle positions in the trap plane, dimensionless units of l0
using Configuration = std::vector<Vec2>;

inline Configuration rotated(const Configuration& c, double angle) {
    Configuration out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = rotated(c[i], angle);
    return out;
}

inline Configuration mirrored(const Configuration& c) {
    Configuration out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = mirrored(c[i]);
    return out;
}

inline Vec2 centroid(const Configuration& c) {
    Vec2 sum{0.0, 0.0};
    for (Vec2 p : c) sum = sum + p;
    const double n = c.empty() ? 1.0 : static_cast<double>(c.size());
    return {sum.x / n, sum.y / n};
}

}  // namespace pcryst

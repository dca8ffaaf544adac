#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcryst/geometry.hpp"

// Radial shell classification of point configurations, orientation- and
// permutation-invariant structure comparison, and the stored reference
// shell structures used for cross-comparison (reported Pauli-crystal
// tuples and classical Coulomb/Wigner tuples).

namespace pcryst {

// Occupancies of concentric shells, innermost first, e.g. (1,4,10),
// with the mean radius of each shell.
struct ShellStructure {
    std::vector<int> occupancies;
    std::vector<double> shell_radii;

    friend bool operator==(const ShellStructure& a, const ShellStructure& b) = default;
};

// "(1,4,10)" form
inline std::string tuple_string(const ShellStructure& shells) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < shells.occupancies.size(); ++i) {
        if (i) out << ',';
        out << shells.occupancies[i];
    }
    out << ')';
    return out.str();
}

struct ShellClassifyOptions {
    // new shell when consecutive sorted radii jump by this ratio...
    double gap_factor = 1.8;
    // ...or by this absolute gap in l0
    double absolute_gap = 0.4;
    // radii below this form the center shell
    double center_threshold = 0.25;
};

// Gap-based radial classifier: sort radii, open a new shell at every
// relative or absolute jump between consecutive radii; particles closer
// to the origin than center_threshold form a center shell of radius ~0.
inline ShellStructure classify_shells(const Configuration& config,
                                      const ShellClassifyOptions& opts = {}) {
    if (config.empty())
        throw std::invalid_argument("classify_shells: empty configuration");
    std::vector<double> radii(config.size());
    for (std::size_t i = 0; i < config.size(); ++i) radii[i] = norm(config[i]);
    std::sort(radii.begin(), radii.end());

    ShellStructure shells;
    std::size_t start = 0;

    const auto close_shell = [&](std::size_t begin, std::size_t end) {
        double mean = 0.0;
        for (std::size_t i = begin; i < end; ++i) mean += radii[i];
        shells.occupancies.push_back(static_cast<int>(end - begin));
        shells.shell_radii.push_back(mean / static_cast<double>(end - begin));
    };

    std::size_t center_end = 0;
    while (center_end < radii.size() && radii[center_end] < opts.center_threshold)
        ++center_end;
    if (center_end > 0) {
        close_shell(0, center_end);
        start = center_end;
    }

    for (std::size_t i = start; i < radii.size(); ++i) {
        if (i > start) {
            const double prev = radii[i - 1];
            const bool ratio_jump = prev > 0.0 && radii[i] / prev > opts.gap_factor;
            const bool abs_jump = radii[i] - prev > opts.absolute_gap;
            if (ratio_jump || abs_jump) {
                close_shell(start, i);
                start = i;
            }
        }
    }
    if (start < radii.size()) close_shell(start, radii.size());
    return shells;
}

namespace detail {

// Exact min-cost assignment (Hungarian algorithm with potentials,
// O(n^3)). cost is row-major n x n; returns column assigned to each row.
inline std::vector<int> hungarian_assignment(const std::vector<double>& cost, int n) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            const int i0 = p[j0];
            double delta = inf;
            int j1 = 0;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    std::vector<int> row_to_col(n);
    for (int j = 1; j <= n; ++j)
        if (p[j] > 0) row_to_col[p[j] - 1] = j - 1;
    return row_to_col;
}

// Rotation angle minimizing sum_i |a_i - R(theta) b_i|^2 (2D orthogonal
// Procrustes, rotation only).
inline double procrustes_angle(const Configuration& a, const Configuration& b) {
    double s_cross = 0.0, s_dot = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s_cross += cross(b[i], a[i]);
        s_dot += dot(b[i], a[i]);
    }
    if (s_cross == 0.0 && s_dot == 0.0) return 0.0;
    return std::atan2(s_cross, s_dot);
}

// Max pointwise distance after the best assignment at a fixed rotation of
// b, refined once by Procrustes on the matched pairs.
inline double aligned_max_distance(const Configuration& a, const Configuration& b,
                                   double angle) {
    const int n = static_cast<int>(a.size());
    Configuration rb = rotated(b, angle);
    std::vector<double> cost(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cost[i * n + j] = norm2(a[i] - rb[j]);
    std::vector<int> match = hungarian_assignment(cost, n);

    // one Procrustes refinement round on the matched pairs, then re-match
    Configuration b_matched(n);
    for (int i = 0; i < n; ++i) b_matched[i] = rb[match[i]];
    const double extra = procrustes_angle(a, b_matched);
    rb = rotated(rb, extra);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cost[i * n + j] = norm2(a[i] - rb[j]);
    match = hungarian_assignment(cost, n);

    double worst = 0.0;
    for (int i = 0; i < n; ++i) worst = std::max(worst, norm(a[i] - rb[match[i]]));
    return worst;
}

}  // namespace detail

// True iff the two configurations have identical shell occupancies and
// some rotation/reflection plus particle permutation brings every
// particle of b within tol of its counterpart in a.
inline bool same_structure(const Configuration& a, const Configuration& b, double tol) {
    if (a.size() != b.size())
        throw std::invalid_argument("same_structure: configurations must have equal N");
    if (a.empty()) return true;
    if (classify_shells(a).occupancies != classify_shells(b).occupancies) return false;

    // reference: the particle of a farthest from the center
    std::size_t ref = 0;
    for (std::size_t i = 1; i < a.size(); ++i)
        if (norm(a[i]) > norm(a[ref])) ref = i;
    const double ref_radius = norm(a[ref]);
    const double ref_angle = std::atan2(a[ref].y, a[ref].x);

    double best = std::numeric_limits<double>::infinity();
    for (const bool reflect : {false, true}) {
        const Configuration bv = reflect ? mirrored(b) : b;
        if (ref_radius < 1e-12) {
            best = std::min(best, detail::aligned_max_distance(a, bv, 0.0));
            continue;
        }
        // candidate rotations: send each comparably-distant particle of b
        // onto the reference particle of a
        for (std::size_t j = 0; j < bv.size(); ++j) {
            if (norm(bv[j]) < 0.5 * ref_radius) continue;
            const double angle = ref_angle - std::atan2(bv[j].y, bv[j].x);
            best = std::min(best, detail::aligned_max_distance(a, bv, angle));
            if (best < tol) return true;
        }
    }
    return best < tol;
}

enum class ReferenceKind {
    PauliCrystalReported,  // structures reported from single-shot imaging
    WignerClassical,       // classical Coulomb crystal in a parabolic trap
};

struct ReferenceEntry {
    ShellStructure shells;
    std::string source;
};

// Stored reference shell structures; absent when not tabulated.
inline std::optional<ReferenceEntry> reference_lookup(int n, ReferenceKind kind) {
    switch (kind) {
        case ReferenceKind::PauliCrystalReported:
            if (n == 6) return ReferenceEntry{{{1, 5}, {0.0, 1.265}}, "single-shot imaging"};
            if (n == 15) return ReferenceEntry{{{1, 5, 9}, {}}, "single-shot imaging"};
            break;
        case ReferenceKind::WignerClassical:
            if (n == 15) return ReferenceEntry{{{5, 10}, {}}, "classical Coulomb crystal"};
            if (n == 30) return ReferenceEntry{{{5, 10, 15}, {}}, "classical Coulomb crystal"};
            break;
    }
    return std::nullopt;
}

inline const char* to_string(ReferenceKind kind) {
    switch (kind) {
        case ReferenceKind::PauliCrystalReported: return "pauli";
        case ReferenceKind::WignerClassical: return "wigner";
    }
    return "unknown";
}

}  // namespace pcryst

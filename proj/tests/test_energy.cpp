#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "pcryst/energy.hpp"
#include "pcryst/rng.hpp"

using namespace pcryst;

namespace {
Configuration random_config(int n, Rng& rng, double radius = 3.0) {
    Configuration c(n);
    for (auto& p : c) {
        auto [x, y] = rng.disk_point(radius);
        p = Vec2{x, y};
    }
    return c;
}
}  // namespace

TEST_CASE("two-particle energy decomposes into pair + confinement", "[energy]") {
    ModelParams params{2, PairPotentialSpec::fermion(1.0), 1.0};
    Configuration c{{1.0, 0.0}, {-1.0, 0.0}};
    // pair distance 2, both radii 1: E = v(2) + 1
    CHECK(total_energy(params, c) == Catch::Approx(1.0184854468258866).epsilon(1e-15));
}

TEST_CASE("confinement strength scales the one-body term", "[energy]") {
    Configuration c{{1.0, 1.0}, {-2.0, 0.5}};
    ModelParams weak{2, PairPotentialSpec::none(), 1.0};
    ModelParams strong{2, PairPotentialSpec::none(), 3.0};
    CHECK(total_energy(weak, c) == Catch::Approx(0.5 * (2.0 + 4.25)).epsilon(1e-15));
    CHECK(total_energy(strong, c) == Catch::Approx(3.0 * total_energy(weak, c)).epsilon(1e-15));
}

TEST_CASE("gradient matches central finite differences", "[energy]") {
    Rng rng(99);
    for (auto spec : {PairPotentialSpec::fermion(1.4), PairPotentialSpec::boson(0.8),
                      PairPotentialSpec::coulomb(1.0), PairPotentialSpec::none()}) {
        ModelParams params{6, spec, 1.0};
        Configuration c = random_config(6, rng);
        const auto grad = energy_gradient(params, c);
        const double h = 1e-5;
        for (std::size_t i = 0; i < c.size(); ++i) {
            for (int axis = 0; axis < 2; ++axis) {
                Configuration plus = c, minus = c;
                (axis == 0 ? plus[i].x : plus[i].y) += h;
                (axis == 0 ? minus[i].x : minus[i].y) -= h;
                const double fd =
                    (total_energy(params, plus) - total_energy(params, minus)) / (2 * h);
                const double an = axis == 0 ? grad[i].x : grad[i].y;
                CHECK(an == Catch::Approx(fd).epsilon(1e-6).margin(1e-9));
            }
        }
    }
}

TEST_CASE("energy is invariant under rotation and permutation", "[energy]") {
    Rng rng(7);
    ModelParams params{8, PairPotentialSpec::fermion(2.0), 1.0};
    Configuration c = random_config(8, rng);
    const double e0 = total_energy(params, c);

    Configuration rot = rotated(c, 1.234567);
    CHECK(total_energy(params, rot) == Catch::Approx(e0).margin(1e-12));

    Configuration perm = c;
    std::swap(perm[0], perm[5]);
    std::swap(perm[2], perm[7]);
    CHECK(total_energy(params, perm) == Catch::Approx(e0).margin(1e-12));

    Configuration mir = c;
    for (auto& p : mir) p = mirrored(p);
    CHECK(total_energy(params, mir) == Catch::Approx(e0).margin(1e-12));
}

TEST_CASE("coincident particles under a divergent kind throw", "[energy]") {
    ModelParams params{2, PairPotentialSpec::fermion(1.0), 1.0};
    Configuration c{{0.5, 0.5}, {0.5, 0.5}};
    CHECK_THROWS_AS(total_energy(params, c), std::domain_error);
    CHECK_THROWS_AS(energy_gradient(params, c), std::domain_error);

    ModelParams bos{2, PairPotentialSpec::boson(1.0), 1.0};
    CHECK_NOTHROW(total_energy(bos, c));
}

TEST_CASE("size mismatch and non-finite input are rejected", "[energy]") {
    ModelParams params{3, PairPotentialSpec::fermion(1.0), 1.0};
    Configuration two{{0.0, 0.0}, {1.0, 0.0}};
    CHECK_THROWS_AS(total_energy(params, two), std::invalid_argument);
    Configuration bad{{0.0, 0.0}, {1.0, 0.0}, {std::nan(""), 0.0}};
    CHECK_THROWS_AS(total_energy(params, bad), std::invalid_argument);
}

TEST_CASE("site energy delta agrees with full recomputation", "[energy]") {
    Rng rng(17);
    ModelParams params{7, PairPotentialSpec::fermion(1.5), 1.0};
    Configuration c = random_config(7, rng);
    const double e0 = detail::total_energy_raw(params, c);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Vec2 moved{c[i].x + 0.37, c[i].y - 0.21};
        const double delta = detail::site_energy_raw(params, c, i, moved) -
                             detail::site_energy_raw(params, c, i, c[i]);
        Configuration after = c;
        after[i] = moved;
        const double e1 = detail::total_energy_raw(params, after);
        CHECK(e0 + delta == Catch::Approx(e1).margin(1e-10));
    }
}

TEST_CASE("model params validate", "[energy]") {
    ModelParams params{0, PairPotentialSpec::fermion(1.0), 1.0};
    CHECK_THROWS_AS(params.validate(), std::invalid_argument);
    params.n_particles = 5;
    params.confinement_strength = 0.0;
    CHECK_THROWS_AS(params.validate(), std::invalid_argument);
    params.confinement_strength = 1.0;
    CHECK_NOTHROW(params.validate());
}

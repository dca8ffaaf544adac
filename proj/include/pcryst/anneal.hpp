#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "pcryst/energy.hpp"
#include "pcryst/geometry.hpp"
#include "pcryst/rng.hpp"
#include "pcryst/shells.hpp"

// Global minimization of the 2N-dimensional energy: Metropolis simulated
// annealing with geometric cooling and per-stage step adaptation, BFGS
// polish of the best configuration visited, and a deterministic
// multi-restart driver whose result is independent of execution order.

namespace pcryst {

struct AnnealSchedule {
    double t_initial = 1.0;     // annealing temperature (optimizer-internal, not alpha)
    double t_final = 1e-4;
    double cooling_factor = 0.95;   // geometric decay per stage
    int sweeps_per_stage = 200;     // 1 sweep = N proposed single-particle moves
    double step_initial = 0.5;      // max displacement scale, in l0
    double step_adapt_target = 0.44;// target acceptance ratio

    void validate() const {
        if (!(t_initial > 0.0) || !(t_final > 0.0) || !(t_final < t_initial))
            throw std::invalid_argument("AnnealSchedule: need 0 < t_final < t_initial");
        if (!(cooling_factor > 0.0) || !(cooling_factor < 1.0))
            throw std::invalid_argument("AnnealSchedule: cooling_factor must be in (0,1)");
        if (sweeps_per_stage < 1)
            throw std::invalid_argument("AnnealSchedule: sweeps_per_stage must be >= 1");
        if (!(step_initial > 0.0))
            throw std::invalid_argument("AnnealSchedule: step_initial must be positive");
        if (!(step_adapt_target > 0.0) || !(step_adapt_target < 1.0))
            throw std::invalid_argument("AnnealSchedule: step_adapt_target must be in (0,1)");
    }
};

struct AnnealStageInfo {
    int stage;
    double temperature;
    double step;
    double acceptance_ratio;
    double best_energy;  // best raw-chain energy so far (pre-refinement)
};
using AnnealMonitor = std::function<void(const AnnealStageInfo&)>;

struct RefineResult {
    Configuration config;
    double energy;
    int iterations = 0;
    bool converged = false;
    bool line_search_failed = false;
};

namespace detail {

inline void flatten(const Configuration& config, std::vector<double>& x) {
    x.resize(2 * config.size());
    for (std::size_t i = 0; i < config.size(); ++i) {
        x[2 * i] = config[i].x;
        x[2 * i + 1] = config[i].y;
    }
}

inline void unflatten(const std::vector<double>& x, Configuration& config) {
    config.resize(x.size() / 2);
    for (std::size_t i = 0; i < config.size(); ++i)
        config[i] = {x[2 * i], x[2 * i + 1]};
}

}  // namespace detail

// Deterministic local descent (BFGS with Armijo backtracking) until the
// gradient max-norm drops below 1e-8 or 1e5 iterations. The energy is
// non-increasing across iterations; a failed line search returns the best
// point reached with line_search_failed set.
inline RefineResult refine(const ModelParams& params, const Configuration& start) {
    detail::check_configuration(params, start);
    constexpr double grad_tol = 1e-8;
    constexpr int max_iterations = 100000;
    constexpr double armijo_c = 1e-4;

    const std::size_t dim = 2 * start.size();
    Configuration work = start;
    std::vector<double> x, g(dim), d(dim), x_new(dim), g_new(dim);
    detail::flatten(start, x);

    const auto energy_at = [&](const std::vector<double>& v) {
        detail::unflatten(v, work);
        return detail::total_energy_raw(params, work);
    };
    const auto gradient_at = [&](const std::vector<double>& v, std::vector<double>& out) {
        detail::unflatten(v, work);
        const auto grad = detail::energy_gradient_raw(params, work);
        detail::flatten(grad, out);
    };

    double f = energy_at(x);
    if (!std::isfinite(f))
        throw std::domain_error("refine: starting configuration has non-finite energy");
    gradient_at(x, g);

    // inverse Hessian approximation, row-major
    std::vector<double> h(dim * dim, 0.0);
    const auto reset_h = [&] {
        std::fill(h.begin(), h.end(), 0.0);
        for (std::size_t i = 0; i < dim; ++i) h[i * dim + i] = 1.0;
    };
    reset_h();
    bool first_step = true;

    RefineResult result;
    result.config = start;
    result.energy = f;

    std::vector<double> s(dim), y(dim), hy(dim);
    for (int iter = 0; iter < max_iterations; ++iter) {
        double gmax = 0.0;
        for (double gi : g) gmax = std::max(gmax, std::abs(gi));
        if (gmax < grad_tol) {
            result.converged = true;
            break;
        }

        // d = -H g; fall back to steepest descent if not a descent direction
        double slope = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            double di = 0.0;
            for (std::size_t j = 0; j < dim; ++j) di -= h[i * dim + j] * g[j];
            d[i] = di;
            slope += di * g[i];
        }
        if (!(slope < 0.0)) {
            reset_h();
            first_step = true;
            slope = 0.0;
            for (std::size_t i = 0; i < dim; ++i) {
                d[i] = -g[i];
                slope -= g[i] * g[i];
            }
        }

        double t = 1.0;
        double f_new = std::numeric_limits<double>::infinity();
        while (true) {
            for (std::size_t i = 0; i < dim; ++i) x_new[i] = x[i] + t * d[i];
            f_new = energy_at(x_new);
            if (f_new <= f + armijo_c * t * slope) break;
            t *= 0.5;
            if (t < 1e-16) {
                result.line_search_failed = true;
                result.iterations = iter;
                detail::unflatten(x, result.config);
                result.energy = f;
                return result;
            }
        }

        gradient_at(x_new, g_new);
        double ys = 0.0, yy = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            s[i] = x_new[i] - x[i];
            y[i] = g_new[i] - g[i];
            ys += y[i] * s[i];
            yy += y[i] * y[i];
        }
        if (ys > 0.0 && std::isfinite(ys) && std::isfinite(yy)) {
            if (first_step && yy > 0.0) {
                // scale the initial inverse Hessian to the local curvature
                std::fill(h.begin(), h.end(), 0.0);
                const double scale = ys / yy;
                for (std::size_t i = 0; i < dim; ++i) h[i * dim + i] = scale;
                first_step = false;
            }
            const double rho = 1.0 / ys;
            for (std::size_t i = 0; i < dim; ++i) {
                double acc = 0.0;
                for (std::size_t j = 0; j < dim; ++j) acc += h[i * dim + j] * y[j];
                hy[i] = acc;
            }
            double yhy = 0.0;
            for (std::size_t i = 0; i < dim; ++i) yhy += y[i] * hy[i];
            const double c2 = rho * rho * yhy + rho;
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    h[i * dim + j] +=
                        c2 * s[i] * s[j] - rho * (s[i] * hy[j] + hy[i] * s[j]);
        }

        x.swap(x_new);
        g.swap(g_new);
        f = f_new;
        result.iterations = iter + 1;
    }

    detail::unflatten(x, result.config);
    result.energy = f;
    return result;
}

struct AnnealResult {
    Configuration config;
    double energy;           // refined energy
    double chain_energy;     // best raw-chain energy before refinement
    int refine_iterations = 0;
    bool refine_converged = false;
};

// One annealing run: Metropolis single-particle Gaussian moves with
// geometric cooling, step adapted per stage toward the target acceptance
// ratio, followed by BFGS refinement of the best configuration visited.
// Fully deterministic in (params, schedule, seed).
inline AnnealResult anneal(const ModelParams& params, const AnnealSchedule& schedule,
                           std::uint64_t seed, const AnnealMonitor& monitor = {}) {
    params.validate();
    schedule.validate();
    if (params.n_particles < 2)
        throw std::invalid_argument("anneal: need at least 2 particles");

    const std::size_t n = static_cast<std::size_t>(params.n_particles);
    Rng rng(seed);

    // initial positions uniform over the confinement basin
    Configuration config(n);
    const double init_radius = std::sqrt(static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const auto [px, py] = rng.disk_point(init_radius);
        config[i] = {px, py};
    }

    double energy = detail::total_energy_raw(params, config);
    Configuration best = config;
    double best_energy = energy;

    double step = schedule.step_initial;
    int stage = 0;
    for (double temp = schedule.t_initial; temp > schedule.t_final;
         temp *= schedule.cooling_factor, ++stage) {
        long accepted = 0;
        const long proposals =
            static_cast<long>(schedule.sweeps_per_stage) * static_cast<long>(n);
        for (int sweep = 0; sweep < schedule.sweeps_per_stage; ++sweep) {
            for (std::size_t i = 0; i < n; ++i) {
                const auto [gx, gy] = rng.gaussian_pair();
                const Vec2 proposal{config[i].x + step * gx, config[i].y + step * gy};
                const double delta =
                    detail::site_energy_raw(params, config, i, proposal) -
                    detail::site_energy_raw(params, config, i, config[i]);
                // delta = +inf (coincident proposal under a divergent law)
                // fails both branches and is auto-rejected
                const bool accept =
                    delta <= 0.0 || rng.uniform() < std::exp(-delta / temp);
                if (accept) {
                    config[i] = proposal;
                    energy += delta;
                    ++accepted;
                    if (energy < best_energy) {
                        best_energy = energy;
                        best = config;
                    }
                }
            }
        }
        const double ratio =
            static_cast<double>(accepted) / static_cast<double>(proposals);
        step *= (ratio > schedule.step_adapt_target) ? 1.1 : (1.0 / 1.1);
        step = std::clamp(step, 1e-6, 10.0);
        if (monitor) monitor({stage, temp, step, ratio, best_energy});
    }

    // re-evaluate cleanly (the chain energy accumulates rounding drift)
    best_energy = detail::total_energy_raw(params, best);
    RefineResult polished = refine(params, best);
    return {std::move(polished.config), polished.energy, best_energy,
            polished.iterations, polished.converged};
}

// Full provenance of one multi-restart optimization run.
struct RunRecord {
    ModelParams params;
    AnnealSchedule schedule;
    std::uint64_t master_seed = 0;
    int n_restarts = 0;
    double best_energy = 0.0;
    Configuration best_config;
    ShellStructure shells;
    std::vector<double> per_restart_energies;
    int refinement_iterations = 0;
};

// Independent restarts with per-restart seeds split_seed(master_seed, k).
// Restarts are embarrassingly parallel; the assembled record depends only
// on the inputs, not on thread count or completion order.
inline RunRecord multi_restart(const ModelParams& params, const AnnealSchedule& schedule,
                               int n_restarts, std::uint64_t master_seed,
                               int n_threads = 1) {
    params.validate();
    schedule.validate();
    if (n_restarts < 1)
        throw std::invalid_argument("multi_restart: n_restarts must be >= 1");

    std::vector<AnnealResult> results(static_cast<std::size_t>(n_restarts));
    if (n_threads <= 1) {
        for (int k = 0; k < n_restarts; ++k)
            results[static_cast<std::size_t>(k)] =
                anneal(params, schedule, split_seed(master_seed, static_cast<std::uint64_t>(k)));
    } else {
        std::atomic<int> next{0};
        const auto worker = [&] {
            for (int k = next.fetch_add(1); k < n_restarts; k = next.fetch_add(1))
                results[static_cast<std::size_t>(k)] =
                    anneal(params, schedule, split_seed(master_seed, static_cast<std::uint64_t>(k)));
        };
        std::vector<std::thread> pool;
        const int count = std::min(n_threads, n_restarts);
        pool.reserve(static_cast<std::size_t>(count));
        for (int t = 0; t < count; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::size_t best = 0;
    for (std::size_t k = 1; k < results.size(); ++k)
        if (results[k].energy < results[best].energy) best = k;

    RunRecord record;
    record.params = params;
    record.schedule = schedule;
    record.master_seed = master_seed;
    record.n_restarts = n_restarts;
    record.best_energy = results[best].energy;
    record.best_config = results[best].config;
    record.shells = classify_shells(record.best_config);
    record.per_restart_energies.reserve(results.size());
    for (const auto& r : results) record.per_restart_energies.push_back(r.energy);
    record.refinement_iterations = results[best].refine_iterations;
    return record;
}

}  // namespace pcryst

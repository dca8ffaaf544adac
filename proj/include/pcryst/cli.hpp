#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcryst/analytic.hpp"
#include "pcryst/anneal.hpp"
#include "pcryst/energy.hpp"
#include "pcryst/io.hpp"
#include "pcryst/quantum.hpp"
#include "pcryst/shells.hpp"
#include "pcryst/units.hpp"

// Command-line front end. Subcommands: analytic | optimize | sweep |
// classify | density | compare. All I/O is dimensionless (l0, hbar*omega,
// alpha); exit codes: 0 success, 1 I/O error, 2 usage error.

namespace pcryst::cli {

namespace detail_cli {

// semantic usage errors discovered after parsing (mapped to exit code 2)
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// CLI11 config reader for a JSON file mirroring the flags:
// {"optimize": {"n": 15, "alpha": 3.0}}. Flags given on the command line
// override file values.
class JsonConfig : public CLI::Config {
  public:
    std::string to_config(const CLI::App*, bool, bool, std::string) const override {
        return "{}\n";
    }

    std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
        nlohmann::json j;
        try {
            input >> j;
        } catch (const nlohmann::json::parse_error& err) {
            throw CLI::ConfigError(std::string("invalid JSON config: ") + err.what());
        }
        std::vector<CLI::ConfigItem> items;
        collect(j, {}, items);
        return items;
    }

  private:
    static void collect(const nlohmann::json& j, std::vector<std::string> parents,
                        std::vector<CLI::ConfigItem>& items) {
        if (!j.is_object()) throw CLI::ConfigError("JSON config root must be an object");
        for (const auto& [key, value] : j.items()) {
            if (value.is_object()) {
                auto nested = parents;
                nested.push_back(key);
                collect(value, nested, items);
                continue;
            }
            CLI::ConfigItem item;
            item.parents = parents;
            item.name = key;
            if (value.is_array()) {
                for (const auto& elem : value) item.inputs.push_back(scalar_to_string(elem));
            } else {
                item.inputs.push_back(scalar_to_string(value));
            }
            items.push_back(std::move(item));
        }
    }

    static std::string scalar_to_string(const nlohmann::json& v) {
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    }
};

inline std::string iso_timestamp_utc() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// timestamps live only under "meta" so the primary document is
// deterministic for a fixed seed
inline nlohmann::json with_meta(nlohmann::json doc) {
    doc["meta"] = {{"timestamp", iso_timestamp_utc()}};
    return doc;
}

inline std::string format_full(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline std::string format_3dp(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

inline double outer_shell_radius(const ShellStructure& shells) {
    if (shells.shell_radii.empty())
        throw UsageError("structure has no shell radii");
    return shells.shell_radii.back();
}

struct PotentialCliOptions {
    std::string kind = "fermion";
    double alpha = 1.0;
    double coulomb_strength = 1.0;

    PairPotentialSpec to_spec() const {
        PairPotentialSpec spec;
        spec.kind = potential_kind_from_string(kind);
        spec.alpha = alpha;
        spec.coulomb_strength = coulomb_strength;
        spec.validate();
        return spec;
    }
};

inline void add_potential_options(CLI::App* cmd, PotentialCliOptions& opts) {
    cmd->add_option("--potential", opts.kind, "pair interaction law")
        ->check(CLI::IsMember({"fermion", "boson", "coulomb", "none"}))
        ->capture_default_str();
    cmd->add_option("--alpha", opts.alpha, "dimensionless temperature kB T/(hbar omega)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--coulomb-strength", opts.coulomb_strength,
                    "coupling of the 1/s law (coulomb kind)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

inline void add_schedule_options(CLI::App* cmd, AnnealSchedule& schedule) {
    cmd->add_option("--schedule-t-initial", schedule.t_initial, "initial annealing temperature")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--schedule-t-final", schedule.t_final, "final annealing temperature")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--schedule-cooling-factor", schedule.cooling_factor,
                    "geometric cooling factor per stage")
        ->check(CLI::Range(1e-6, 0.999999))
        ->capture_default_str();
    cmd->add_option("--schedule-sweeps", schedule.sweeps_per_stage,
                    "sweeps per stage (1 sweep = N proposed moves)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--schedule-step-initial", schedule.step_initial,
                    "initial proposal step, in l0")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--schedule-accept-target", schedule.step_adapt_target,
                    "target acceptance ratio for step adaptation")
        ->check(CLI::Range(1e-6, 0.999999))
        ->capture_default_str();
}

}  // namespace detail_cli

// Runs the CLI on the given arguments (program name excluded).
// Returns the process exit code; output goes to the given streams.
inline int run(std::vector<std::string> args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    using namespace detail_cli;

    CLI::App app{"minimum-energy configurations of harmonically trapped interacting particles"};
    app.set_config("--config", "", "JSON file mirroring the flags (flags override it)");
    app.config_formatter(std::make_shared<JsonConfig>());
    app.require_subcommand(0, 1);

    // --physical helper: report lambda and l0 for a real mass/temperature/trap
    bool physical = false;
    double phys_mass = 0.0, phys_temperature = 0.0, phys_omega = 0.0;
    app.add_flag("--physical", physical,
                 "report thermal wavelength, oscillator length and alpha for "
                 "--mass, --temperature, --omega");
    app.add_option("--mass", phys_mass, "particle mass in kg")->check(CLI::PositiveNumber);
    app.add_option("--temperature", phys_temperature, "temperature in K")
        ->check(CLI::PositiveNumber);
    app.add_option("--omega", phys_omega, "trap angular frequency in rad/s")
        ->check(CLI::PositiveNumber);

    // ---- analytic ----
    auto* analytic = app.add_subcommand(
        "analytic", "closed-form / template minima for N = 3, 4, 5, 6");
    int ana_n = 3;
    double ana_alpha = 1.0;
    std::string ana_format = "text", ana_out;
    analytic->add_option("--n", ana_n, "particle count")
        ->required()
        ->check(CLI::IsMember({3, 4, 5, 6}));
    analytic->add_option("--alpha", ana_alpha, "dimensionless temperature")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    analytic->add_option("--format", ana_format, "stdout format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    analytic->add_option("--out", ana_out, "write result JSON to this path");

    // ---- optimize ----
    auto* optimize = app.add_subcommand(
        "optimize", "multi-restart simulated annealing for arbitrary N");
    int opt_n = 6, opt_restarts = 20, opt_threads = 1;
    double opt_confinement = 1.0;
    std::uint64_t opt_seed = 1;
    PotentialCliOptions opt_potential;
    AnnealSchedule opt_schedule;
    std::string opt_format = "text", opt_out, opt_csv;
    optimize->add_option("--n", opt_n, "particle count")->required()->check(CLI::Range(2, 1000));
    add_potential_options(optimize, opt_potential);
    optimize->add_option("--confinement", opt_confinement, "confinement strength")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    optimize->add_option("--restarts", opt_restarts, "independent annealing restarts")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    optimize->add_option("--seed", opt_seed, "master seed (echoed in output)")
        ->capture_default_str();
    optimize->add_option("--threads", opt_threads, "worker threads for restarts")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_schedule_options(optimize, opt_schedule);
    optimize->add_option("--format", opt_format, "stdout format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    optimize->add_option("--out", opt_out, "write the run record JSON to this path");
    optimize->add_option("--csv", opt_csv, "write the best configuration CSV to this path");

    // ---- sweep ----
    auto* sweep = app.add_subcommand("sweep", "one optimization per alpha value");
    int swp_n = 15, swp_restarts = 20, swp_threads = 1;
    std::uint64_t swp_seed = 1;
    std::vector<double> swp_alphas;
    PotentialCliOptions swp_potential;
    AnnealSchedule swp_schedule;
    std::string swp_format = "text", swp_out_csv, swp_out_json;
    sweep->add_option("--n", swp_n, "particle count")->required()->check(CLI::Range(2, 1000));
    sweep->add_option("--alphas", swp_alphas, "alpha grid, comma separated, strictly increasing")
        ->required()
        ->delimiter(',');
    add_potential_options(sweep, swp_potential);
    sweep->get_option("--alpha")->description("ignored by sweep (grid comes from --alphas)");
    sweep->add_option("--restarts", swp_restarts, "restarts per grid point")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sweep->add_option("--seed", swp_seed, "master seed (echoed in output)")
        ->capture_default_str();
    sweep->add_option("--threads", swp_threads, "worker threads for restarts")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_schedule_options(sweep, swp_schedule);
    sweep->add_option("--format", swp_format, "stdout format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    sweep->add_option("--out-csv", swp_out_csv, "write the sweep table CSV to this path");
    sweep->add_option("--out-json", swp_out_json, "write the sweep table JSON to this path");

    // ---- classify ----
    auto* classify = app.add_subcommand("classify", "radial shell structure of a stored configuration");
    std::string cls_input, cls_format = "text";
    ShellClassifyOptions cls_opts;
    classify->add_option("--input", cls_input, "configuration file (.csv or .json)")
        ->required()
        ->check(CLI::ExistingFile);
    classify->add_option("--gap-factor", cls_opts.gap_factor, "relative radius jump opening a new shell")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    classify->add_option("--abs-gap", cls_opts.absolute_gap, "absolute radius jump opening a new shell")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    classify->add_option("--center-threshold", cls_opts.center_threshold,
                         "radius below which particles form the center shell")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    classify->add_option("--format", cls_format, "stdout format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    // ---- density ----
    auto* density = app.add_subcommand(
        "density", "one-particle density grid of the N=3 quantum ground state");
    double den_extent = 8.0;
    int den_resolution = 201;
    std::string den_format = "gnuplot", den_out;
    density->add_option("--extent", den_extent, "grid half-width in l0")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    density->add_option("--resolution", den_resolution, "grid points per side")
        ->check(CLI::Range(3, 100000))
        ->capture_default_str();
    density->add_option("--format", den_format, "output format")
        ->check(CLI::IsMember({"csv", "gnuplot", "json"}))
        ->capture_default_str();
    density->add_option("--out", den_out, "write to this path instead of stdout");

    // ---- compare ----
    auto* compare = app.add_subcommand(
        "compare", "compare two run records, or a run record against a stored reference");
    std::string cmp_a, cmp_b, cmp_reference, cmp_format = "text", cmp_out;
    double cmp_tol = 1e-3;
    compare->add_option("run_a", cmp_a, "run record JSON")->required()->check(CLI::ExistingFile);
    compare->add_option("run_b", cmp_b, "second run record JSON")->check(CLI::ExistingFile);
    compare->add_option("--reference", cmp_reference, "stored reference structure")
        ->check(CLI::IsMember({"pauli", "wigner"}));
    compare->add_option("--tol", cmp_tol, "max pointwise distance for same_structure")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    compare->add_option("--format", cmp_format, "stdout format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    compare->add_option("--out", cmp_out, "write the comparison report JSON to this path");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (physical) {
            if (!(phys_mass > 0.0) || !(phys_temperature > 0.0) || !(phys_omega > 0.0))
                throw UsageError("--physical requires --mass, --temperature and --omega");
            const double lambda = units::thermal_wavelength(phys_mass, phys_temperature);
            const double l0 = units::oscillator_length(phys_mass, phys_omega);
            const double alpha = units::dimensionless_temperature(phys_temperature, phys_omega);
            out << "thermal wavelength lambda = " << format_full(lambda) << " m\n"
                << "oscillator length l0      = " << format_full(l0) << " m\n"
                << "alpha = kB T/(hbar omega) = " << format_full(alpha) << "\n";
            return 0;
        }

        if (analytic->parsed()) {
            const TemplateKind kind = ana_n == 3   ? kTriangle3
                                      : ana_n == 4 ? kSquare4
                                      : ana_n == 5 ? kRing5
                                                   : kPentagonPlusCenter6;
            const TemplateMinimum minimum = minimize_template(ana_alpha, kind);
            double radius = minimum.radius;
            std::string method = "template-minimization";
            std::optional<double> z;
            if (ana_n == 3) {
                radius = triangle_radius(ana_alpha);
                method = "closed-form";
            } else if (ana_n == 4) {
                const SquareSolution sq = square_solution(ana_alpha);
                radius = sq.radius;
                z = sq.z;
                method = "closed-form";
            }
            const double energy =
                template_energy(ana_alpha, TemplateGeometry{kind, radius, 0.0});

            nlohmann::json doc{{"schema", "pcryst.analytic"},
                               {"schema_version", json_schema_version},
                               {"n", ana_n},
                               {"alpha", ana_alpha},
                               {"radius", radius},
                               {"energy", energy},
                               {"method", method},
                               {"config", realize(TemplateGeometry{kind, radius, 0.0})}};
            if (z) doc["z"] = *z;

            if (!ana_out.empty()) write_text_file(ana_out, with_meta(doc).dump(2) + "\n");
            if (ana_format == "json") {
                out << with_meta(doc).dump(2) << "\n";
            } else {
                out << "N = " << ana_n << ", alpha = " << format_full(ana_alpha) << " ("
                    << method << ")\n"
                    << "shell radius r/l0 = " << format_3dp(radius) << "   (full "
                    << format_full(radius) << ")\n"
                    << "energy E/(hbar omega) = " << format_full(energy) << "\n";
                if (z) out << "z = exp(-2 alpha r^2) = " << format_full(*z) << "\n";
            }
            return 0;
        }

        if (optimize->parsed()) {
            ModelParams params{opt_n, opt_potential.to_spec(), opt_confinement};
            const RunRecord record =
                multi_restart(params, opt_schedule, opt_restarts, opt_seed, opt_threads);
            const nlohmann::json doc = record;

            if (!opt_out.empty()) write_text_file(opt_out, with_meta(doc).dump(2) + "\n");
            if (!opt_csv.empty()) {
                std::ostringstream csv;
                write_configuration_csv(csv, record.best_config);
                write_text_file(opt_csv, csv.str());
            }
            if (opt_format == "json") {
                out << with_meta(doc).dump(2) << "\n";
            } else {
                out << "N = " << opt_n << ", potential = " << opt_potential.kind
                    << ", alpha = " << format_full(opt_potential.alpha) << "\n"
                    << "seed = " << opt_seed << ", restarts = " << opt_restarts << "\n"
                    << "best energy E/(hbar omega) = " << format_full(record.best_energy) << "\n"
                    << "shell structure = " << tuple_string(record.shells) << "\n";
                for (std::size_t i = 0; i < record.shells.shell_radii.size(); ++i)
                    out << "  shell " << i + 1 << ": " << record.shells.occupancies[i]
                        << " particles, mean radius " << format_full(record.shells.shell_radii[i])
                        << "\n";
            }
            return 0;
        }

        if (sweep->parsed()) {
            if (swp_alphas.empty()) throw CLI::ValidationError("--alphas", "alpha grid is empty");
            for (std::size_t i = 1; i < swp_alphas.size(); ++i)
                if (!(swp_alphas[i] > swp_alphas[i - 1]))
                    throw CLI::ValidationError("--alphas", "alpha grid must be strictly increasing");
            for (double a : swp_alphas)
                if (!(a > 0.0))
                    throw CLI::ValidationError("--alphas", "alpha values must be positive");

            nlohmann::json rows = nlohmann::json::array();
            std::ostringstream csv;
            std::ostringstream table;
            csv << "alpha,best_energy,shells\n";
            table << "alpha    best_energy        shells\n";
            for (std::size_t i = 0; i < swp_alphas.size(); ++i) {
                PairPotentialSpec spec = swp_potential.to_spec();
                spec.alpha = swp_alphas[i];
                ModelParams params{swp_n, spec, 1.0};
                const std::uint64_t row_seed = split_seed(swp_seed, i);
                const RunRecord record =
                    multi_restart(params, swp_schedule, swp_restarts, row_seed, swp_threads);
                rows.push_back({{"alpha", swp_alphas[i]},
                                {"best_energy", record.best_energy},
                                {"shells", record.shells},
                                {"seed", row_seed}});
                csv << detail::format_double(swp_alphas[i]) << ','
                    << detail::format_double(record.best_energy)
                    << ",\"" << tuple_string(record.shells) << "\"\n";
                table << format_full(swp_alphas[i]) << "    " << format_full(record.best_energy)
                      << "    " << tuple_string(record.shells) << "\n";
            }
            nlohmann::json doc{{"schema", "pcryst.sweep"},
                               {"schema_version", json_schema_version},
                               {"n", swp_n},
                               {"potential_kind", swp_potential.kind},
                               {"master_seed", swp_seed},
                               {"restarts", swp_restarts},
                               {"rows", rows}};

            if (!swp_out_csv.empty()) write_text_file(swp_out_csv, csv.str());
            if (!swp_out_json.empty()) write_text_file(swp_out_json, with_meta(doc).dump(2) + "\n");
            if (swp_format == "json")
                out << with_meta(doc).dump(2) << "\n";
            else if (swp_format == "csv")
                out << csv.str();
            else
                out << "N = " << swp_n << ", potential = " << swp_potential.kind
                    << ", seed = " << swp_seed << "\n"
                    << table.str();
            return 0;
        }

        if (classify->parsed()) {
            const Configuration config = load_configuration(cls_input);
            if (config.empty()) throw UsageError("no particles in " + cls_input);
            const ShellStructure shells = classify_shells(config, cls_opts);
            if (cls_format == "json") {
                nlohmann::json doc{{"schema", "pcryst.shells"},
                                   {"schema_version", json_schema_version},
                                   {"n", config.size()},
                                   {"shells", shells}};
                out << doc.dump(2) << "\n";
            } else {
                out << tuple_string(shells) << "\n";
            }
            return 0;
        }

        if (density->parsed()) {
            const DensityGrid grid = density_n3(den_extent, den_resolution);
            std::ostringstream data;
            if (den_format == "csv") {
                write_density_csv(data, grid);
            } else if (den_format == "gnuplot") {
                write_density_gnuplot(data, grid);
            } else {
                nlohmann::json doc = grid;
                doc["schema"] = "pcryst.density";
                doc["schema_version"] = json_schema_version;
                data << doc.dump() << "\n";
            }
            if (!den_out.empty())
                write_text_file(den_out, data.str());
            else
                out << data.str();
            return 0;
        }

        if (compare->parsed()) {
            if (cmp_b.empty() == cmp_reference.empty())
                throw UsageError("compare needs exactly one of: a second run record, --reference");

            RunRecord record_a;
            from_json(load_json_file(cmp_a), record_a);
            const ShellStructure shells_a = classify_shells(record_a.best_config);

            nlohmann::json doc{{"schema", "pcryst.compare"},
                               {"schema_version", json_schema_version},
                               {"n", record_a.params.n_particles},
                               {"a", {{"path", cmp_a}, {"shells", shells_a}}}};
            std::optional<ShellStructure> shells_b;
            std::optional<double> radius_b;
            std::string label_b;
            std::optional<bool> same;

            if (!cmp_b.empty()) {
                RunRecord record_b;
                from_json(load_json_file(cmp_b), record_b);
                if (record_b.params.n_particles != record_a.params.n_particles)
                    throw UsageError("particle counts differ: " +
                                     std::to_string(record_a.params.n_particles) + " vs " +
                                     std::to_string(record_b.params.n_particles));
                shells_b = classify_shells(record_b.best_config);
                if (!shells_b->shell_radii.empty()) radius_b = outer_shell_radius(*shells_b);
                label_b = cmp_b;
                same = same_structure(record_a.best_config, record_b.best_config, cmp_tol);
                doc["b"] = {{"path", cmp_b}, {"shells", *shells_b}};
            } else {
                const ReferenceKind kind = cmp_reference == "pauli"
                                               ? ReferenceKind::PauliCrystalReported
                                               : ReferenceKind::WignerClassical;
                const auto ref = reference_lookup(record_a.params.n_particles, kind);
                if (!ref)
                    throw UsageError("no stored " + cmp_reference + " reference for N = " +
                                     std::to_string(record_a.params.n_particles));
                shells_b = ref->shells;
                if (!ref->shells.shell_radii.empty())
                    radius_b = outer_shell_radius(ref->shells);
                label_b = cmp_reference + " reference (" + ref->source + ")";
                doc["b"] = {{"reference", cmp_reference},
                            {"source", ref->source},
                            {"shells", *shells_b}};
            }

            const bool occupancy_match = shells_a.occupancies == shells_b->occupancies;
            doc["occupancy_match"] = occupancy_match;
            if (same) doc["same_structure"] = *same;
            doc["tol"] = cmp_tol;

            std::optional<double> discrepancy;
            if (radius_b && !shells_a.shell_radii.empty()) {
                const double radius_a = outer_shell_radius(shells_a);
                discrepancy = std::abs(radius_a - *radius_b) / *radius_b * 100.0;
                doc["outer_radius_a"] = radius_a;
                doc["outer_radius_b"] = *radius_b;
                doc["radius_discrepancy_percent"] = *discrepancy;
            }

            if (!cmp_out.empty()) write_text_file(cmp_out, with_meta(doc).dump(2) + "\n");
            if (cmp_format == "json") {
                out << with_meta(doc).dump(2) << "\n";
            } else {
                out << "a: " << cmp_a << "  " << tuple_string(shells_a) << "\n"
                    << "b: " << label_b << "  " << tuple_string(*shells_b) << "\n"
                    << "occupancies " << (occupancy_match ? "match" : "differ") << "\n";
                if (discrepancy)
                    out << "outer shell radius: " << format_full(outer_shell_radius(shells_a))
                        << " vs " << format_full(*radius_b) << "  (discrepancy "
                        << format_full(*discrepancy) << "%)\n";
                if (same)
                    out << "same_structure (tol " << format_full(cmp_tol) << "): "
                        << (*same ? "true" : "false") << "\n";
            }
            return 0;
        }

        err << "error: a subcommand is required (see --help)\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace pcryst::cli

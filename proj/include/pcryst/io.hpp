#pragma once

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "pcryst/anneal.hpp"
#include "pcryst/energy.hpp"
#include "pcryst/geometry.hpp"
#include "pcryst/potential.hpp"
#include "pcryst/quantum.hpp"
#include "pcryst/shells.hpp"

// JSON and CSV wire formats. JSON documents written by the CLI carry a
// "schema" name and "schema_version"; see docs/file-formats.md.

namespace pcryst {

inline constexpr int json_schema_version = 1;

inline void to_json(nlohmann::json& j, const Vec2& v) { j = nlohmann::json::array({v.x, v.y}); }

inline void from_json(const nlohmann::json& j, Vec2& v) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("Vec2: expected a two-element array");
    v.x = j.at(0).get<double>();
    v.y = j.at(1).get<double>();
}

inline PotentialKind potential_kind_from_string(const std::string& name) {
    if (name == "fermion") return PotentialKind::StatisticalFermion;
    if (name == "boson") return PotentialKind::StatisticalBoson;
    if (name == "coulomb") return PotentialKind::Coulomb;
    if (name == "none") return PotentialKind::NoInteraction;
    throw std::invalid_argument("unknown potential kind: " + name);
}

inline void to_json(nlohmann::json& j, const PairPotentialSpec& spec) {
    j = {{"kind", to_string(spec.kind)},
         {"alpha", spec.alpha},
         {"coulomb_strength", spec.coulomb_strength}};
}

inline void from_json(const nlohmann::json& j, PairPotentialSpec& spec) {
    spec.kind = potential_kind_from_string(j.at("kind").get<std::string>());
    spec.alpha = j.value("alpha", 1.0);
    spec.coulomb_strength = j.value("coulomb_strength", 1.0);
}

inline void to_json(nlohmann::json& j, const ModelParams& params) {
    j = {{"n_particles", params.n_particles},
         {"potential", params.potential},
         {"confinement_strength", params.confinement_strength}};
}

inline void from_json(const nlohmann::json& j, ModelParams& params) {
    params.n_particles = j.at("n_particles").get<int>();
    params.potential = j.at("potential").get<PairPotentialSpec>();
    params.confinement_strength = j.value("confinement_strength", 1.0);
}

inline void to_json(nlohmann::json& j, const AnnealSchedule& s) {
    j = {{"t_initial", s.t_initial},
         {"t_final", s.t_final},
         {"cooling_factor", s.cooling_factor},
         {"sweeps_per_stage", s.sweeps_per_stage},
         {"step_initial", s.step_initial},
         {"step_adapt_target", s.step_adapt_target}};
}

inline void from_json(const nlohmann::json& j, AnnealSchedule& s) {
    AnnealSchedule defaults;
    s.t_initial = j.value("t_initial", defaults.t_initial);
    s.t_final = j.value("t_final", defaults.t_final);
    s.cooling_factor = j.value("cooling_factor", defaults.cooling_factor);
    s.sweeps_per_stage = j.value("sweeps_per_stage", defaults.sweeps_per_stage);
    s.step_initial = j.value("step_initial", defaults.step_initial);
    s.step_adapt_target = j.value("step_adapt_target", defaults.step_adapt_target);
}

inline void to_json(nlohmann::json& j, const ShellStructure& shells) {
    j = {{"occupancies", shells.occupancies}, {"shell_radii", shells.shell_radii}};
}

inline void from_json(const nlohmann::json& j, ShellStructure& shells) {
    shells.occupancies = j.at("occupancies").get<std::vector<int>>();
    shells.shell_radii = j.value("shell_radii", std::vector<double>{});
}

inline void to_json(nlohmann::json& j, const RunRecord& record) {
    j = {{"schema", "pcryst.run_record"},
         {"schema_version", json_schema_version},
         {"params", record.params},
         {"schedule", record.schedule},
         {"master_seed", record.master_seed},
         {"n_restarts", record.n_restarts},
         {"best_energy", record.best_energy},
         {"best_config", record.best_config},
         {"shells", record.shells},
         {"per_restart_energies", record.per_restart_energies},
         {"refinement_iterations", record.refinement_iterations}};
}

inline void from_json(const nlohmann::json& j, RunRecord& record) {
    if (j.contains("schema") && j.at("schema") != "pcryst.run_record")
        throw std::invalid_argument("not a run-record document");
    record.params = j.at("params").get<ModelParams>();
    record.schedule = j.at("schedule").get<AnnealSchedule>();
    record.master_seed = j.at("master_seed").get<std::uint64_t>();
    record.n_restarts = j.at("n_restarts").get<int>();
    record.best_energy = j.at("best_energy").get<double>();
    record.best_config = j.at("best_config").get<Configuration>();
    record.shells = j.at("shells").get<ShellStructure>();
    record.per_restart_energies = j.at("per_restart_energies").get<std::vector<double>>();
    record.refinement_iterations = j.value("refinement_iterations", 0);
}

inline void to_json(nlohmann::json& j, const DensityGrid& grid) {
    j = {{"extent", grid.extent}, {"resolution", grid.resolution}, {"values", grid.values}};
}

inline void from_json(const nlohmann::json& j, DensityGrid& grid) {
    grid.extent = j.at("extent").get<double>();
    grid.resolution = j.at("resolution").get<int>();
    grid.values = j.at("values").get<std::vector<double>>();
    const auto expected = static_cast<std::size_t>(grid.resolution) * grid.resolution;
    if (grid.values.size() != expected)
        throw std::invalid_argument("density grid: values size does not match resolution");
}

namespace detail {

inline std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace detail

// --- configuration CSV (two columns, header "x,y") ---

inline void write_configuration_csv(std::ostream& out, const Configuration& config) {
    out << "x,y\n";
    for (const Vec2& p : config)
        out << detail::format_double(p.x) << ',' << detail::format_double(p.y) << '\n';
}

inline Configuration read_configuration_csv(std::istream& in) {
    Configuration config;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line.find_first_not_of(" \txy,\r") == std::string::npos) continue;  // header
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("configuration CSV: missing comma in line: " + line);
        try {
            config.push_back({std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1))});
        } catch (const std::exception&) {
            throw std::runtime_error("configuration CSV: malformed line: " + line);
        }
    }
    return config;
}

// --- density grid exports ---

// plain matrix, one row per y value
inline void write_density_csv(std::ostream& out, const DensityGrid& grid) {
    for (int j = 0; j < grid.resolution; ++j) {
        for (int i = 0; i < grid.resolution; ++i) {
            if (i) out << ',';
            out << detail::format_double(grid.at(i, j));
        }
        out << '\n';
    }
}

// three columns "x y value" with a blank line between scanlines (splot-ready)
inline void write_density_gnuplot(std::ostream& out, const DensityGrid& grid) {
    for (int j = 0; j < grid.resolution; ++j) {
        for (int i = 0; i < grid.resolution; ++i)
            out << detail::format_double(grid.coord(i)) << ' '
                << detail::format_double(grid.coord(j)) << ' '
                << detail::format_double(grid.at(i, j)) << '\n';
        out << '\n';
    }
}

// --- file helpers (failures surface as std::runtime_error -> exit code 1) ---

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

inline nlohmann::json load_json_file(const std::string& path) {
    const std::string text = read_text_file(path);
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw std::runtime_error("invalid JSON in " + path + ": " + err.what());
    }
}

inline Configuration load_configuration(const std::string& path) {
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        const auto j = load_json_file(path);
        // accept either a bare coordinate array or a run-record document
        if (j.is_array()) return j.get<Configuration>();
        if (j.contains("best_config")) return j.at("best_config").get<Configuration>();
        if (j.contains("positions")) return j.at("positions").get<Configuration>();
        throw std::runtime_error("no configuration found in " + path);
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return read_configuration_csv(in);
}

}  // namespace pcryst

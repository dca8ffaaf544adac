#include <catch2/catch_amalgamated.hpp>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pcryst/anneal.hpp"
#include "pcryst/io.hpp"
#include "pcryst/quantum.hpp"

using namespace pcryst;

namespace {
struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("pcryst_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};
}  // namespace

TEST_CASE("configuration CSV round-trips exactly", "[io]") {
    Configuration c{{0.1234567890123456, -2.5}, {1e-17, 3.0}, {-0.0, 7.25}};
    std::ostringstream out;
    write_configuration_csv(out, c);
    std::istringstream in(out.str());
    const Configuration back = read_configuration_csv(in);
    REQUIRE(back.size() == c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        CHECK(back[i].x == c[i].x);
        CHECK(back[i].y == c[i].y);
    }
    CHECK(out.str().substr(0, 4) == "x,y\n");
}

TEST_CASE("configuration CSV accepts headerless input", "[io]") {
    std::istringstream in("1.5,2.5\n-0.25,0.75\n");
    const Configuration c = read_configuration_csv(in);
    REQUIRE(c.size() == 2);
    CHECK(c[0].x == 1.5);
    CHECK(c[1].y == 0.75);
}

TEST_CASE("malformed CSV is rejected", "[io]") {
    std::istringstream in("x,y\n1.0\n");
    CHECK_THROWS_AS(read_configuration_csv(in), std::runtime_error);
    std::istringstream in2("x,y\n1.0,abc\n");
    CHECK_THROWS_AS(read_configuration_csv(in2), std::runtime_error);
}

TEST_CASE("vectors serialize as coordinate pairs", "[io]") {
    const nlohmann::json j = Vec2{1.5, -2.25};
    CHECK(j.dump() == "[1.5,-2.25]");
    const Vec2 v = j.get<Vec2>();
    CHECK(v.x == 1.5);
    CHECK(v.y == -2.25);
}

TEST_CASE("run record JSON round-trips", "[io]") {
    ModelParams params{4, PairPotentialSpec::fermion(1.0), 1.0};
    AnnealSchedule schedule;
    schedule.sweeps_per_stage = 40;
    const RunRecord rec = multi_restart(params, schedule, 3, 5);

    const nlohmann::json j = rec;
    CHECK(j.at("schema") == "pcryst.run_record");
    CHECK(j.at("schema_version") == json_schema_version);

    RunRecord back;
    from_json(j, back);
    CHECK(back.best_energy == rec.best_energy);
    CHECK(back.master_seed == rec.master_seed);
    CHECK(back.n_restarts == rec.n_restarts);
    CHECK(back.per_restart_energies == rec.per_restart_energies);
    CHECK(back.shells.occupancies == rec.shells.occupancies);
    REQUIRE(back.best_config.size() == rec.best_config.size());
    for (std::size_t i = 0; i < rec.best_config.size(); ++i) {
        CHECK(back.best_config[i].x == rec.best_config[i].x);
        CHECK(back.best_config[i].y == rec.best_config[i].y);
    }
    CHECK(back.params.potential.kind == rec.params.potential.kind);
    CHECK(back.schedule.cooling_factor == rec.schedule.cooling_factor);
}

TEST_CASE("run record JSON validates its schema tag", "[io]") {
    nlohmann::json j{{"schema", "something.else"}, {"schema_version", 1}};
    RunRecord rec;
    CHECK_THROWS_AS(from_json(j, rec), std::invalid_argument);
}

TEST_CASE("density grid writers produce the advertised shapes", "[io]") {
    const DensityGrid grid = density_n3(2.0, 5);

    std::ostringstream csv;
    write_density_csv(csv, grid);
    int lines = 0;
    for (char ch : csv.str())
        if (ch == '\n') ++lines;
    CHECK(lines == 5);  // one row per scanline

    std::ostringstream gp;
    write_density_gnuplot(gp, grid);
    int blanks = 0;
    std::istringstream in(gp.str());
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.empty())
            ++blanks;
        else
            ++rows;
    }
    CHECK(blanks == 5);  // blank separator per scanline block
    CHECK(rows == 25);
}

TEST_CASE("density grid JSON round-trips", "[io]") {
    const DensityGrid grid = density_n3(3.0, 11);
    const nlohmann::json j = grid;
    const DensityGrid back = j.get<DensityGrid>();
    CHECK(back.extent == grid.extent);
    CHECK(back.resolution == grid.resolution);
    CHECK(back.values == grid.values);
}

TEST_CASE("load_configuration reads CSV and JSON files", "[io]") {
    TempDir dir;
    Configuration c{{0.5, -1.5}, {2.0, 0.125}};

    {
        std::ostringstream out;
        write_configuration_csv(out, c);
        write_text_file(dir.file("conf.csv"), out.str());
    }
    const Configuration from_csv = load_configuration(dir.file("conf.csv"));
    REQUIRE(from_csv.size() == 2);
    CHECK(from_csv[1].x == 2.0);

    write_text_file(dir.file("conf.json"), nlohmann::json(c).dump());
    const Configuration from_json_file = load_configuration(dir.file("conf.json"));
    REQUIRE(from_json_file.size() == 2);
    CHECK(from_json_file[0].y == -1.5);

    // run-record JSON also yields its best_config
    ModelParams params{3, PairPotentialSpec::fermion(1.0), 1.0};
    AnnealSchedule schedule;
    schedule.sweeps_per_stage = 30;
    const RunRecord rec = multi_restart(params, schedule, 2, 9);
    nlohmann::json j = rec;
    write_text_file(dir.file("run.json"), j.dump());
    const Configuration from_record = load_configuration(dir.file("run.json"));
    CHECK(from_record.size() == 3);
}

TEST_CASE("missing files raise runtime errors", "[io]") {
    CHECK_THROWS_AS(load_configuration("/nonexistent/path.csv"), std::runtime_error);
    CHECK_THROWS_AS(load_json_file("/nonexistent/path.json"), std::runtime_error);
    CHECK_THROWS_AS(read_text_file("/nonexistent/file"), std::runtime_error);
}

TEST_CASE("doubles are written with round-trip precision", "[io]") {
    const double v = 0.1 + 0.2;  // 0.30000000000000004
    const std::string s = detail::format_double(v);
    CHECK(std::stod(s) == v);
}

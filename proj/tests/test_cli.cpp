#include <catch2/catch_amalgamated.hpp>

#include <unistd.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "pcryst/cli.hpp"

using namespace pcryst;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

// drop the "meta" object (timestamps) before comparing documents
std::string strip_meta(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    j.erase("meta");
    return j.dump();
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("pcryst_cli_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("help succeeds, missing subcommand fails", "[cli]") {
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"analytic", "--help"}).code == 0);
    const CliResult none = run_cli({});
    CHECK(none.code == 2);
    CHECK(none.err.find("subcommand") != std::string::npos);
    CHECK(run_cli({"no-such-command"}).code == 2);
    CHECK(run_cli({"analytic", "--n", "3", "--bogus-flag"}).code == 2);
}

TEST_CASE("analytic prints the known radii", "[cli]") {
    const CliResult tri = run_cli({"analytic", "--n", "3"});
    CHECK(tri.code == 0);
    CHECK(tri.out.find("0.805") != std::string::npos);

    const CliResult hex = run_cli({"analytic", "--n", "6"});
    CHECK(hex.code == 0);
    CHECK(hex.out.find("1.226") != std::string::npos);

    const CliResult sq = run_cli({"analytic", "--n", "4", "--format", "json"});
    CHECK(sq.code == 0);
    const auto doc = nlohmann::json::parse(sq.out);
    CHECK(doc.at("schema") == "pcryst.analytic");
    CHECK(doc.at("radius").get<double>() == Catch::Approx(0.92837422570818024).epsilon(1e-12));
    CHECK(doc.at("z").get<double>() == Catch::Approx(0.17839458616266548).epsilon(1e-12));

    CHECK(run_cli({"analytic", "--n", "7"}).code == 2);   // only 3..6 supported
    CHECK(run_cli({"analytic", "--n", "3", "--alpha", "-1"}).code == 2);
}

TEST_CASE("optimize emits a deterministic run record", "[cli]") {
    const std::vector<std::string> args{"optimize", "--n",    "5",  "--restarts", "4",
                                        "--seed",   "42",     "--schedule-sweeps", "60",
                                        "--format", "json"};
    const CliResult a = run_cli(args);
    const CliResult b = run_cli(args);
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(strip_meta(a.out) == strip_meta(b.out));

    const auto doc = nlohmann::json::parse(a.out);
    CHECK(doc.at("schema") == "pcryst.run_record");
    CHECK(doc.at("master_seed") == 42);
    CHECK(doc.at("n_restarts") == 4);
    CHECK(doc.at("shells").at("occupancies") == nlohmann::json::array({5}));
}

TEST_CASE("optimize text output echoes the seed", "[cli]") {
    const CliResult r = run_cli({"optimize", "--n", "3", "--restarts", "2", "--seed", "17",
                                 "--schedule-sweeps", "40"});
    CHECK(r.code == 0);
    CHECK(r.out.find("seed = 17") != std::string::npos);
    CHECK(r.out.find("(3)") != std::string::npos);
}

TEST_CASE("optimize writes record and csv files", "[cli]") {
    TempDir dir;
    const CliResult r = run_cli({"optimize", "--n", "4", "--restarts", "2", "--seed", "3",
                                 "--schedule-sweeps", "40", "--out", dir.file("run.json"),
                                 "--csv", dir.file("best.csv")});
    REQUIRE(r.code == 0);
    RunRecord rec;
    from_json(load_json_file(dir.file("run.json")), rec);
    CHECK(rec.params.n_particles == 4);
    const Configuration best = load_configuration(dir.file("best.csv"));
    CHECK(best.size() == 4);
}

TEST_CASE("sweep validates its alpha grid", "[cli]") {
    CHECK(run_cli({"sweep", "--n", "3", "--alphas", "2.0,1.0", "--restarts", "1",
                   "--schedule-sweeps", "30"})
              .code == 2);
    CHECK(run_cli({"sweep", "--n", "3", "--alphas", "1.0,1.0", "--restarts", "1",
                   "--schedule-sweeps", "30"})
              .code == 2);
    CHECK(run_cli({"sweep", "--n", "3"}).code == 2);  // --alphas required
}

TEST_CASE("sweep emits csv and json tables", "[cli]") {
    TempDir dir;
    const CliResult r = run_cli({"sweep", "--n", "3", "--alphas", "0.5,1.0", "--restarts", "2",
                                 "--seed", "7", "--schedule-sweeps", "40", "--out-csv",
                                 dir.file("sweep.csv"), "--out-json", dir.file("sweep.json"),
                                 "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.substr(0, 24) == "alpha,best_energy,shells");

    const auto doc = load_json_file(dir.file("sweep.json"));
    CHECK(doc.at("schema") == "pcryst.sweep");
    REQUIRE(doc.at("rows").size() == 2);
    CHECK(doc.at("rows")[0].at("alpha") == 0.5);
    CHECK(doc.at("rows")[1].at("alpha") == 1.0);
    // row seeds are split from the master seed by row index
    CHECK(doc.at("rows")[0].at("seed") == split_seed(7, 0));
    CHECK(doc.at("rows")[1].at("seed") == split_seed(7, 1));

    const std::string csv = read_text_file(dir.file("sweep.csv"));
    CHECK(csv.find("\"(3)\"") != std::string::npos);
}

TEST_CASE("classify reads configurations from files", "[cli]") {
    TempDir dir;
    write_text_file(dir.file("hex.csv"),
                    "x,y\n0,0\n1.226,0\n0.3789,1.1661\n-0.9919,0.7206\n"
                    "-0.9919,-0.7206\n0.3789,-1.1661\n");
    const CliResult r = run_cli({"classify", "--input", dir.file("hex.csv")});
    CHECK(r.code == 0);
    CHECK(r.out == "(1,5)\n");

    const CliResult j =
        run_cli({"classify", "--input", dir.file("hex.csv"), "--format", "json"});
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc.at("shells").at("occupancies") == nlohmann::json::array({1, 5}));

    CHECK(run_cli({"classify", "--input", dir.file("missing.csv")}).code == 2);
}

TEST_CASE("density emits plot data", "[cli]") {
    const CliResult gp =
        run_cli({"density", "--extent", "2", "--resolution", "5"});
    CHECK(gp.code == 0);
    CHECK(gp.out.find("\n\n") != std::string::npos);  // gnuplot block separators

    const CliResult csv =
        run_cli({"density", "--extent", "2", "--resolution", "5", "--format", "csv"});
    int lines = 0;
    for (char ch : csv.out)
        if (ch == '\n') ++lines;
    CHECK(lines == 5);

    const CliResult json =
        run_cli({"density", "--extent", "2", "--resolution", "5", "--format", "json"});
    const auto doc = nlohmann::json::parse(json.out);
    CHECK(doc.at("schema") == "pcryst.density");
    CHECK(doc.at("resolution") == 5);
}

TEST_CASE("compare reports zero discrepancy against itself", "[cli]") {
    TempDir dir;
    REQUIRE(run_cli({"optimize", "--n", "6", "--restarts", "4", "--seed", "1",
                     "--schedule-sweeps", "60", "--out", dir.file("a.json")})
                .code == 0);
    const CliResult r = run_cli({"compare", dir.file("a.json"), dir.file("a.json"),
                                 "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("occupancy_match") == true);
    CHECK(doc.at("same_structure") == true);
    CHECK(doc.at("radius_discrepancy_percent").get<double>() == 0.0);
}

TEST_CASE("compare against the stored six-particle reference", "[cli]") {
    TempDir dir;
    REQUIRE(run_cli({"optimize", "--n", "6", "--restarts", "6", "--seed", "1",
                     "--schedule-sweeps", "60", "--out", dir.file("a.json")})
                .code == 0);
    const CliResult r = run_cli({"compare", dir.file("a.json"), "--reference", "pauli",
                                 "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("occupancy_match") == true);
    const double d = doc.at("radius_discrepancy_percent").get<double>();
    CHECK(std::abs(d - 3.08) < 0.1);
}

TEST_CASE("compare rejects mismatched inputs", "[cli]") {
    TempDir dir;
    REQUIRE(run_cli({"optimize", "--n", "5", "--restarts", "2", "--seed", "1",
                     "--schedule-sweeps", "40", "--out", dir.file("n5.json")})
                .code == 0);
    REQUIRE(run_cli({"optimize", "--n", "6", "--restarts", "2", "--seed", "1",
                     "--schedule-sweeps", "40", "--out", dir.file("n6.json")})
                .code == 0);
    // particle count mismatch
    CHECK(run_cli({"compare", dir.file("n5.json"), dir.file("n6.json")}).code == 2);
    // needs exactly one of run_b / --reference
    CHECK(run_cli({"compare", dir.file("n5.json")}).code == 2);
    CHECK(run_cli({"compare", dir.file("n5.json"), dir.file("n6.json"), "--reference",
                   "pauli"})
              .code == 2);
    // no stored reference for N=5
    CHECK(run_cli({"compare", dir.file("n5.json"), "--reference", "pauli"}).code == 2);
}

TEST_CASE("physical helper converts units", "[cli]") {
    // 87Rb-like numbers; alpha = kB T / (hbar omega)
    const CliResult r = run_cli({"--physical", "--mass", "1.44e-25", "--temperature",
                                 "1e-7", "--omega", "1000"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("alpha") != std::string::npos);
    const CliResult incomplete = run_cli({"--physical", "--mass", "1.44e-25"});
    CHECK(incomplete.code == 2);
}

TEST_CASE("json config files feed subcommand options", "[cli]") {
    TempDir dir;
    write_text_file(dir.file("conf.json"),
                    R"({"optimize": {"n": 4, "restarts": 2, "seed": 11,
                        "schedule-sweeps": 40, "format": "json"}})");
    const CliResult r = run_cli({"--config", dir.file("conf.json"), "optimize"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("master_seed") == 11);
    CHECK(doc.at("params").at("n_particles") == 4);

    // command line overrides the file
    const CliResult o = run_cli({"--config", dir.file("conf.json"), "optimize", "--seed", "12"});
    REQUIRE(o.code == 0);
    CHECK(nlohmann::json::parse(o.out).at("master_seed") == 12);

    write_text_file(dir.file("bad.json"), "{not json");
    CHECK(run_cli({"--config", dir.file("bad.json"), "optimize", "--n", "3"}).code == 2);
}

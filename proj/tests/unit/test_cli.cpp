#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wqed/cli/commands.hpp"
#include "wqed/core/errors.hpp"
#include "wqed/core/hfunc.hpp"

using namespace wqed;
using namespace wqed::cli;
using doctest::Approx;

namespace {
std::filesystem::path scratch(const std::string& name) {
    auto p = std::filesystem::temp_directory_path() / ("wqed_test_" + name);
    std::filesystem::remove_all(p);
    return p;
}
std::string csv_of(const CommandResult& r, std::size_t i = 0) {
    std::ostringstream s;
    write_csv(s, r.tables.at(i).second);
    return s.str();
}
}  // namespace

TEST_SUITE("cli") {

TEST_CASE("numbers keep 17 significant digits") {
    CHECK(format_number(0.1) == "0.10000000000000001");
    CHECK(format_number(2.0) == "2");
    CHECK(format_number(std::nan("")) == "nan");
    CHECK(std::stod(format_number(M_PI)) == M_PI);
}

TEST_CASE("csv layout") {
    Table t;
    t.add("t", {0.0, 0.5});
    t.add("P", {1.0, 0.25});
    std::ostringstream s;
    write_csv(s, t);
    CHECK(s.str() == "t,P\n0,1\n0.5,0.25\n");
    CHECK_THROWS(t.add("bad", {1.0}));
}

TEST_CASE("list parsing") {
    CHECK(parse_list(" 1, 2.5 ,4") == std::vector<double>{1.0, 2.5, 4.0});
    CHECK_THROWS_AS(parse_list("1,x"), UsageError);
}

TEST_CASE("config file and resolution") {
    const auto dir = scratch("cfg");
    std::filesystem::create_directories(dir);
    const auto path = (dir / "sym.toml").string();
    std::ofstream(path) << "[system]\nB = 20\nconfiguration = \"symmetric\"\n[grid]\ntmax = 3\npoints = 31\n"
                           "[solver]\nname = closed-form\n";
    const auto cfg = load_config(path);
    CHECK(cfg.resolved_od() == 20.0);
    CHECK(cfg.configuration == Configuration::SymmetricMirror);
    CHECK(cfg.time_grid().output_times.size() == 31);
    CHECK_FALSE(cfg.resolved_atoms());

    std::ofstream(path) << "[system]\nNatoms = 3\n";
    CHECK_THROWS_AS(load_config(path), UsageError);

    RunConfig c;
    c.n_atoms = 10;
    c.beta = 0.1;
    c.scaled_od = 2.0;
    CHECK_THROWS_AS(c.resolved_od(), UsageError);
}

TEST_CASE("power, exact single atom") {
    RunConfig c;
    c.n_atoms = 1;
    c.beta = 0.2;
    c.solver = Solver::Exact;
    c.t_max = 2.0;
    c.time_points = 5;
    const auto r = cmd_power(c);
    const auto& t = r.tables.at(0).second;
    CHECK(t.header == std::vector<std::string>{"t", "P_r", "P_l", "P_total", "Gamma_norm"});
    for (std::size_t k = 0; k < t.rows(); ++k)
        CHECK(t.columns[3][k] == Approx(0.2 * std::exp(-t.columns[0][k])).epsilon(1e-7));
}

TEST_CASE("power, symmetric closed form splits evenly") {
    RunConfig c;
    c.scaled_od = 20.0;
    c.configuration = Configuration::SymmetricMirror;
    c.t_max = 1.0;
    c.time_points = 11;
    const auto r = cmd_power(c);
    const auto& t = r.tables.at(0).second;
    CHECK(t.columns[1][4] == t.columns[2][4]);
    CHECK(t.columns[4][0] == 1.0);
}

TEST_CASE("incompatible solver and system") {
    RunConfig c;
    c.n_atoms = 20;
    c.beta = 0.05;
    c.solver = Solver::Exact;
    CHECK_THROWS_AS(cmd_power(c), UsageError);
    c.solver = Solver::Hierarchy;  // chiral by default
    CHECK_THROWS_AS(cmd_power(c), UsageError);
    c.solver = Solver::ClosedForm;
    c.initial_state = InitialState::DickeMinusOne;
    CHECK_THROWS_AS(cmd_power(c), UsageError);
}

TEST_CASE("reruns give identical data") {
    RunConfig c;
    c.scaled_od = 10.0;
    c.solver = Solver::Continuum;
    c.grid_points = 65;
    c.t_max = 1.0;
    c.time_points = 11;
    CHECK(csv_of(cmd_power(c)) == csv_of(cmd_power(c)));
}

TEST_CASE("compare reports a difference") {
    RunConfig c;
    c.scaled_od = 10.0;
    c.solver = Solver::Continuum;
    c.compare = Solver::ClosedForm;
    c.grid_points = 129;
    c.t_max = 3.0;
    c.time_points = 31;
    const auto r = cmd_power(c);
    REQUIRE(r.manifest.diagnostics.count("compare_max_rel"));
    CHECK(r.manifest.diagnostics.at("compare_max_rel") < 5e-3);
}

TEST_CASE("g2 closed forms") {
    RunConfig c;
    c.scaled_od = 10.0;
    c.configuration = Configuration::SymmetricMirror;
    c.t_max = 2.0;
    c.time_points = 5;
    const auto sym = cmd_g2(c);
    for (double v : sym.tables.at(0).second.columns[1]) CHECK(v == 2.0);
    c.configuration = Configuration::Chiral;
    const auto chiral = cmd_g2(c);
    const auto& t = chiral.tables.at(0).second;
    CHECK(t.columns[1][0] == Approx(2.0));
    CHECK(t.header[2] == "convergence_flag");
    c.t1 = 0.5;
    CHECK_THROWS_AS(cmd_g2(c), UsageError);
}

TEST_CASE("fields at the special time are zero") {
    RunConfig c;
    c.scaled_od = 10.0;
    c.grid_points = 9;
    c.field_time = special_time_tsp();
    c.depths = {2.0};
    c.t_max = 1.0;
    c.time_points = 3;
    const auto r = cmd_fields(c);
    const auto& c1 = r.tables.at(0).second;
    CHECK(c1.rows() == 81);
    for (double v : c1.columns[3]) CHECK(std::abs(v) < 1e-12);
    CHECK(r.tables.at(1).second.rows() == 3);
}

TEST_CASE("manifest lists hashed outputs") {
    RunConfig c;
    c.scaled_od = 5.0;
    c.t_max = 1.0;
    c.time_points = 3;
    const auto dir = scratch("emit");
    c.out_dir = dir.string();
    auto r = cmd_power(c);
    std::ostringstream sink;
    emit(r, c, sink);
    CHECK(std::filesystem::exists(dir / "power.csv"));
    CHECK(std::filesystem::exists(dir / "power.manifest.json"));
    REQUIRE(r.manifest.files.size() == 1);
    CHECK(r.manifest.files[0].sha256.size() == 64);
    CHECK(r.manifest.to_json().find("\"timestamp\"") != std::string::npos);
}

TEST_CASE("sha256 of a known string") {
    const auto dir = scratch("sha");
    std::filesystem::create_directories(dir);
    const auto path = (dir / "abc").string();
    std::ofstream(path, std::ios::binary) << "abc";
    CHECK(sha256_file(path) == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("sweep keeps input order") {
    RunConfig c;
    c.scaled_od = 2.0;
    c.configuration = Configuration::SymmetricMirror;
    c.solver = Solver::Mf2;
    c.sweep_values = {4, 16, 64};
    c.t_max = 20.0;
    c.time_points = 2001;
    const auto r = cmd_sweep(c, 3);
    const auto& t = r.tables.at(0).second;
    CHECK(t.columns[0] == std::vector<double>{4, 16, 64});
    CHECK(r.exit_code == kOk);
    c.solver = Solver::ClosedForm;
    CHECK_THROWS_AS(cmd_sweep(c, 1), UsageError);
}

TEST_CASE("fig rejects unknown numbers") {
    CHECK_THROWS_AS(cmd_fig(9, RunConfig{}), UsageError);
}

}

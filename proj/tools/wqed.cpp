// wqed: command-line front end for the waveguide emission solvers.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include "wqed/cli/commands.hpp"
#include "wqed/core/errors.hpp"

using namespace wqed;
using namespace wqed::cli;

namespace {

struct Flags {
    std::optional<std::string> config, solver, compare, configuration, initial, out, format, depths, sweep;
    std::optional<std::size_t> n, grid, kmax, points;
    std::optional<double> beta, b, tmax, t1, field_time;
    std::string level = "quick";
    int figure = 0;
};

void add_common(CLI::App& app, Flags& f) {
    app.add_option("--config", f.config, "key = value config file ([system] [grid] [solver] [output])");
    app.add_option("--solver", f.solver, "exact | hierarchy | mf2 | continuum | closed-form");
    app.add_option("--compare", f.compare, "second solver for a difference report");
    app.add_option("--N", f.n, "number of atoms");
    app.add_option("--beta", f.beta, "coupling efficiency into the waveguide");
    app.add_option("--B", f.b, "scaled optical depth N beta");
    app.add_option("--configuration", f.configuration, "chiral | symmetric");
    app.add_option("--initial", f.initial, "inverted | dicke-minus-one");
    app.add_option("--tmax", f.tmax, "final time in units of 1/Gamma0");
    app.add_option("--points", f.points, "number of output times");
    app.add_option("--grid", f.grid, "optical-depth nodes M of the continuum solver");
    app.add_option("--kmax", f.kmax, "series truncation order");
    app.add_option("--t1", f.t1, "first detection time for g2(t1, t)");
    app.add_option("--field-time", f.field_time, "time of the C1 snapshot (default ln 2)");
    app.add_option("--depths", f.depths, "comma-separated x values for e1");
    app.add_option("--sweep", f.sweep, "comma-separated N values (sweep) or B values (energy)");
    app.add_option("--out", f.out, "output directory; stdout if omitted");
    app.add_option("--format", f.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
}

RunConfig resolve(const Flags& f) {
    RunConfig c = f.config ? load_config(*f.config) : RunConfig{};
    if (f.solver) c.solver = parse_solver(*f.solver);
    if (f.compare) c.compare = parse_solver(*f.compare);
    if (f.configuration) c.configuration = parse_configuration(*f.configuration);
    if (f.initial) c.initial_state = parse_initial_state(*f.initial);
    // an explicit flag wins over file values that would contradict it
    if (f.n || f.beta || f.b) {
        if (f.n) c.n_atoms = f.n;
        if (f.beta) c.beta = f.beta;
        if (f.b) c.scaled_od = f.b;
        if (f.b && !(f.n && f.beta)) {
            if (f.n) c.beta.reset();
            else if (f.beta) c.n_atoms.reset();
        }
    }
    if (f.tmax) c.t_max = *f.tmax;
    if (f.points) c.time_points = *f.points;
    if (f.grid) c.grid_points = *f.grid;
    if (f.kmax) c.k_max = *f.kmax;
    if (f.t1) c.t1 = *f.t1;
    if (f.field_time) c.field_time = f.field_time;
    if (f.depths) c.depths = parse_list(*f.depths);
    if (f.sweep) c.sweep_values = parse_list(*f.sweep);
    if (f.out) c.out_dir = f.out;
    if (f.format) c.format = *f.format == "json" ? Format::Json : Format::Csv;
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Collective emission of inverted atoms into a 1D waveguide"};
    app.require_subcommand(1);
    Flags flags;

    auto* power = app.add_subcommand("power", "waveguide power P_r, P_l, P_total and Gamma_norm");
    auto* g2 = app.add_subcommand("g2", "second-order correlation g2(t1, t)");
    auto* fields = app.add_subcommand("fields", "C1(x, y, t*) and e1(x, t) in long format");
    auto* energy = app.add_subcommand("energy", "total photons emitted into the waveguide");
    auto* sweep = app.add_subcommand("sweep", "parallel sweep over N at fixed B");
    auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
    auto* fig = app.add_subcommand("fig", "regenerate figure data (2-7)");
    for (auto* sub : {power, g2, fields, energy, sweep, fig}) add_common(*sub, flags);
    verify->add_option("level", flags.level, "quick | full")->check(CLI::IsMember({"quick", "full"}));
    verify->add_option("--out", flags.out, "directory for the report and manifest");
    verify->add_option("--format", flags.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    fig->add_option("number", flags.figure, "figure number")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        const auto start = std::chrono::steady_clock::now();
        const RunConfig cfg = resolve(flags);
        CommandResult result;
        if (*power) result = cmd_power(cfg);
        else if (*g2) result = cmd_g2(cfg);
        else if (*fields) result = cmd_fields(cfg);
        else if (*energy) result = cmd_energy(cfg);
        else if (*sweep) result = cmd_sweep(cfg, worker_count());
        else if (*verify) result = cmd_verify(flags.level == "full" ? verify::Level::Full : verify::Level::Quick);
        else result = cmd_fig(flags.figure, cfg);
        result.manifest.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        // reports go to stderr so stdout carries data only
        for (const auto& line : result.report) std::cerr << line << '\n';
        emit(result, cfg, std::cout);
        return result.exit_code;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kUsage;
    } catch (const CapacityError& e) {
        std::cerr << "problem too large for this solver: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kNumerical;
    }
}

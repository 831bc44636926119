#include "wqed/cli/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace wqed::cli {

std::string to_string(Solver s) {
    switch (s) {
        case Solver::Exact: return "exact";
        case Solver::Hierarchy: return "hierarchy";
        case Solver::Mf2: return "mf2";
        case Solver::Continuum: return "continuum";
        case Solver::ClosedForm: return "closed-form";
    }
    return "?";
}

Solver parse_solver(const std::string& s) {
    static const std::map<std::string, Solver> names{{"exact", Solver::Exact},
                                                     {"hierarchy", Solver::Hierarchy},
                                                     {"mf2", Solver::Mf2},
                                                     {"continuum", Solver::Continuum},
                                                     {"closed-form", Solver::ClosedForm},
                                                     {"closed_form", Solver::ClosedForm}};
    const auto it = names.find(s);
    if (it == names.end()) throw UsageError("unknown solver '" + s + "' (exact|hierarchy|mf2|continuum|closed-form)");
    return it->second;
}

double RunConfig::resolved_od() const {
    if (n_atoms && beta) {
        const double b = static_cast<double>(*n_atoms) * *beta;
        if (scaled_od && std::abs(*scaled_od - b) > 1e-12 * std::max(1.0, b))
            throw UsageError("--B disagrees with --N * --beta");
        return b;
    }
    if (scaled_od) return *scaled_od;
    throw UsageError("need --B, or both --N and --beta");
}

std::optional<double> RunConfig::resolved_beta() const {
    if (beta) return beta;
    if (scaled_od && n_atoms) return *scaled_od / static_cast<double>(*n_atoms);
    return std::nullopt;
}

std::optional<std::size_t> RunConfig::resolved_atoms() const {
    if (n_atoms) return n_atoms;
    if (scaled_od && beta && *beta > 0.0) {
        const double n = *scaled_od / *beta;
        if (std::abs(n - std::round(n)) < 1e-9 * n) return static_cast<std::size_t>(std::llround(n));
    }
    return std::nullopt;
}

SystemConfig RunConfig::system() const {
    const auto n = resolved_atoms();
    const auto b = resolved_beta();
    if (!n || !b) throw UsageError("this solver needs a finite system: give --N with --beta or --B");
    return SystemConfig(*n, *b, configuration, initial_state);
}

TimeGrid RunConfig::time_grid() const {
    if (!(t_max > 0.0)) throw UsageError("--tmax must be positive");
    if (time_points < 2) throw UsageError("need at least two time points");
    return TimeGrid::uniform(t_max, time_points, rtol, atol);
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        try {
            out.push_back(std::stod(item.substr(first)));
        } catch (const std::exception&) {
            throw UsageError("cannot parse number '" + item + "'");
        }
    }
    return out;
}

namespace {

std::string unquote(std::string v) {
    if (v.size() >= 2 && (v.front() == '"' || v.front() == '\'') && v.back() == v.front()) v = v.substr(1, v.size() - 2);
    return v;
}

template <class T>
T as(const std::string& key, const std::string& v) {
    try {
        if constexpr (std::is_same_v<T, double>) return std::stod(v);
        else return static_cast<T>(std::stoull(v));
    } catch (const std::exception&) {
        throw UsageError("bad value for " + key + ": '" + v + "'");
    }
}

}  // namespace

RunConfig load_config(const std::string& path) {
    boost::property_tree::ptree tree;
    try {
        boost::property_tree::ini_parser::read_ini(path, tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw UsageError("config " + path + ": " + e.message());
    }
    RunConfig c;
    static const std::set<std::string> sections{"system", "grid", "solver", "output"};
    for (const auto& [section, body] : tree) {
        if (!sections.count(section)) throw UsageError("unknown config section [" + section + "]");
        for (const auto& [key, node] : body) {
            const std::string v = unquote(node.get_value<std::string>());
            const std::string full = section + "." + key;
            if (full == "system.N" || full == "system.n_atoms") c.n_atoms = as<std::size_t>(full, v);
            else if (full == "system.beta") c.beta = as<double>(full, v);
            else if (full == "system.B" || full == "system.scaled_od") c.scaled_od = as<double>(full, v);
            else if (full == "system.configuration") c.configuration = parse_configuration(v);
            else if (full == "system.initial_state") c.initial_state = parse_initial_state(v);
            else if (full == "grid.tmax") c.t_max = as<double>(full, v);
            else if (full == "grid.points") c.time_points = as<std::size_t>(full, v);
            else if (full == "grid.M") c.grid_points = as<std::size_t>(full, v);
            else if (full == "grid.kmax") c.k_max = as<std::size_t>(full, v);
            else if (full == "grid.rtol") c.rtol = as<double>(full, v);
            else if (full == "grid.atol") c.atol = as<double>(full, v);
            else if (full == "solver.name") c.solver = parse_solver(v);
            else if (full == "solver.compare") c.compare = parse_solver(v);
            else if (full == "solver.t1") c.t1 = as<double>(full, v);
            else if (full == "solver.field_time") c.field_time = as<double>(full, v);
            else if (full == "solver.depths") c.depths = parse_list(v);
            else if (full == "solver.sweep") c.sweep_values = parse_list(v);
            else if (full == "output.dir") c.out_dir = v;
            else if (full == "output.format") c.format = v == "json" ? Format::Json : v == "csv" ? Format::Csv
                                                        : throw UsageError("format must be csv or json");
            else throw UsageError("unknown config key " + full);
        }
    }
    return c;
}

}  // namespace wqed::cli

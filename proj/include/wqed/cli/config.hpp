#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wqed/core/system_config.hpp"

namespace wqed::cli {

/// Bad flags, bad config files or a solver that cannot handle the system.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Solver { Exact, Hierarchy, Mf2, Continuum, ClosedForm };
enum class Format { Csv, Json };

std::string to_string(Solver s);
Solver parse_solver(const std::string& s);

/// Everything a command needs. Unset optionals mean "not specified";
/// resolution rules live in the helpers below.
struct RunConfig {
    // [system]
    std::optional<std::size_t> n_atoms;
    std::optional<double> beta;
    std::optional<double> scaled_od;
    Configuration configuration = Configuration::Chiral;
    InitialState initial_state = InitialState::FullyInverted;
    // [grid]
    double t_max = 5.0;
    std::size_t time_points = 201;
    std::size_t grid_points = 257;
    std::size_t k_max = 36;
    double rtol = 1e-8;
    double atol = 1e-10;
    // [solver]
    Solver solver = Solver::ClosedForm;
    std::optional<Solver> compare;
    double t1 = 0.0;
    std::optional<double> field_time;
    std::vector<double> depths{2.0, 4.0, 6.0, 8.0, 10.0};
    std::vector<double> sweep_values;
    // [output]
    std::optional<std::string> out_dir;
    Format format = Format::Csv;

    /// B from (B) or (N, beta); throws UsageError if neither is given or
    /// they disagree beyond 1e-12 relative.
    double resolved_od() const;
    /// beta from (beta) or (B, N).
    std::optional<double> resolved_beta() const;
    /// N from (N) or (B, beta) when B / beta is an integer.
    std::optional<std::size_t> resolved_atoms() const;
    SystemConfig system() const;  // needs N and beta
    TimeGrid time_grid() const;
};

/// key = value file with [system], [grid], [solver], [output] sections.
/// Values may be quoted. Unknown keys are a UsageError.
RunConfig load_config(const std::string& path);

/// Parses "1,2.5,4" (whitespace tolerant).
std::vector<double> parse_list(const std::string& text);

}  // namespace wqed::cli

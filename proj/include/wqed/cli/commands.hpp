#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "wqed/cli/config.hpp"
#include "wqed/cli/csv.hpp"
#include "wqed/cli/manifest.hpp"
#include "wqed/verify/acceptance.hpp"

namespace wqed::cli {

/// Exit statuses shared by every subcommand.
enum ExitCode : int { kOk = 0, kUsage = 2, kVerifyFailed = 3, kNumerical = 4 };

/// Tables keyed by file stem, plus the manifest and human-readable notes.
struct CommandResult {
    std::string stem;  // manifest name: <stem>.manifest.json
    std::vector<std::pair<std::string, Table>> tables;
    RunManifest manifest;
    std::vector<std::string> report;
    int exit_code = kOk;
};

/// Columns t, P_r, P_l, P_total, Gamma_norm. With `compare` set, the second
/// solver runs on the same grid and the max difference is reported.
CommandResult cmd_power(const RunConfig& cfg);
/// Columns t, g2, convergence_flag (1 = series not converged).
CommandResult cmd_g2(const RunConfig& cfg);
/// Long-format C1(x, y, t*) and e1(x, t); symmetric configs add a Q(t)
/// comparison of the MF2 closure with the exact hierarchy.
CommandResult cmd_fields(const RunConfig& cfg);
/// Total photons into the waveguide for B (or each B in the sweep list).
CommandResult cmd_energy(const RunConfig& cfg);
/// Independent N points at fixed B on a fixed-size worker pool.
CommandResult cmd_sweep(const RunConfig& cfg, std::size_t threads);
CommandResult cmd_verify(verify::Level level);
/// Figure data for figures 2-7.
CommandResult cmd_fig(int number, const RunConfig& cfg);

/// WQED_THREADS if set (must be a positive integer), else the hardware count.
std::size_t worker_count();

/// Writes tables (and the manifest) under cfg.out_dir, or the tables to
/// `out` when no directory is given.
void emit(CommandResult& result, const RunConfig& cfg, std::ostream& out);

/// Flattened RunConfig for manifests.
std::map<std::string, std::string> describe(const RunConfig& cfg);

}  // namespace wqed::cli

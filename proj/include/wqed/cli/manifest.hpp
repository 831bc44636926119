#pragma once

#include <map>
#include <string>
#include <vector>

namespace wqed::cli {

struct OutputFile {
    std::string path;
    std::string sha256;
};

/// JSON sidecar describing one run. The timestamp lives here, never in the
/// data files, so data bodies stay byte-identical across reruns.
struct RunManifest {
    std::string command;
    std::string figure;  // figure reference for fig commands
    std::map<std::string, std::string> config;
    std::map<std::string, std::string> solver_info;
    std::map<std::string, double> tolerances;
    std::map<std::string, double> diagnostics;
    std::vector<OutputFile> files;
    double wall_seconds = 0.0;

    void add_file(const std::string& path);
    std::string to_json() const;
    void write(const std::string& path) const;
};

std::string sha256_file(const std::string& path);

inline constexpr const char* kVersion = "1.0.0";

}  // namespace wqed::cli

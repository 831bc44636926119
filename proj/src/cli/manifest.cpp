#include "wqed/cli/manifest.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace wqed::cli {

std::string sha256_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    char buf[1 << 15];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, digest, &len);
    EVP_MD_CTX_free(ctx);
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return hex.str();
}

void RunManifest::add_file(const std::string& path) { files.push_back({path, sha256_file(path)}); }

std::string RunManifest::to_json() const {
    nlohmann::ordered_json doc;
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::ostringstream stamp;
    stamp << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ");
    doc["command"] = command;
    if (!figure.empty()) doc["figure"] = figure;
    doc["version"] = kVersion;
    doc["timestamp"] = stamp.str();
    doc["config"] = config;
    doc["solver"] = solver_info;
    doc["tolerances"] = tolerances;
    if (!diagnostics.empty()) doc["diagnostics"] = diagnostics;
    doc["wall_seconds"] = wall_seconds;
    auto arr = nlohmann::json::array();
    for (const auto& f : files) arr.push_back({{"path", f.path}, {"sha256", f.sha256}});
    doc["files"] = arr;
    return doc.dump(2);
}

void RunManifest::write(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << to_json() << '\n';
}

}  // namespace wqed::cli

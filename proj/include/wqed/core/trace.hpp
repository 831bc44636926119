#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wqed {

namespace channel {
inline constexpr const char* power_right = "power_right";
inline constexpr const char* power_left = "power_left";
inline constexpr const char* power_total = "power_total";
inline constexpr const char* gamma_norm = "gamma_norm";
inline constexpr const char* g2_0t = "g2_0t";
inline constexpr const char* g2_tt = "g2_tt";
inline constexpr const char* excitation_mean = "excitation_mean";
inline constexpr const char* q_value = "q_value";
}  // namespace channel

/// Time series of named observables plus free-form provenance.
///
/// Channels keep insertion order so that exports are reproducible. Every
/// channel has exactly as many samples as there are times.
class ObservableTrace {
public:
    ObservableTrace() = default;
    explicit ObservableTrace(std::vector<double> times) : times_(std::move(times)) {}

    const std::vector<double>& times() const noexcept { return times_; }
    std::size_t size() const noexcept { return times_.size(); }

    void set_channel(const std::string& name, std::vector<double> values);
    bool has_channel(const std::string& name) const;
    const std::vector<double>& channel(const std::string& name) const;
    const std::vector<std::pair<std::string, std::vector<double>>>& channels() const noexcept { return channels_; }

    std::map<std::string, std::string>& metadata() noexcept { return metadata_; }
    const std::map<std::string, std::string>& metadata() const noexcept { return metadata_; }

    // Power channels must be non-negative up to `slack` (integrator noise).
    void check_invariants(double slack = 1e-12) const;

private:
    std::vector<double> times_;
    std::vector<std::pair<std::string, std::vector<double>>> channels_;
    std::map<std::string, std::string> metadata_;
};

}  // namespace wqed

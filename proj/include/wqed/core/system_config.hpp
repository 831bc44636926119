#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace wqed {

enum class Configuration { Chiral, SymmetricMirror };
enum class InitialState { FullyInverted, DickeMinusOne };

std::string_view to_string(Configuration c);
std::string_view to_string(InitialState s);
Configuration parse_configuration(std::string_view s);
InitialState parse_initial_state(std::string_view s);

/// Atom number, coupling and geometry of one waveguide system.
///
/// Time is measured in single-atom lifetimes (Gamma_0 = 1). For the chiral
/// waveguide all emission into the guide goes forward with probability beta;
/// the mirror configuration splits beta equally between both directions.
class SystemConfig {
public:
    SystemConfig(std::size_t n_atoms, double beta, Configuration configuration,
                 InitialState initial_state = InitialState::FullyInverted);

    /// Builds a config from the scaled optical depth B = N beta.
    static SystemConfig from_optical_depth(std::size_t n_atoms, double scaled_od,
                                           Configuration configuration,
                                           InitialState initial_state = InitialState::FullyInverted);

    std::size_t n_atoms() const noexcept { return n_atoms_; }
    double beta() const noexcept { return beta_; }
    double scaled_od() const noexcept { return static_cast<double>(n_atoms_) * beta_; }
    Configuration configuration() const noexcept { return configuration_; }
    InitialState initial_state() const noexcept { return initial_state_; }

    double beta_forward() const noexcept;
    double beta_backward() const noexcept;

private:
    std::size_t n_atoms_;
    double beta_;
    Configuration configuration_;
    InitialState initial_state_;
};

/// Output times and integrator tolerances.
struct TimeGrid {
    std::vector<double> output_times;
    double rtol = 1e-8;
    double atol = 1e-10;

    /// Uniform grid 0, dt, ..., t_max with n_points samples.
    static TimeGrid uniform(double t_max, std::size_t n_points, double rtol = 1e-8, double atol = 1e-10);

    double t_max() const { return output_times.empty() ? 0.0 : output_times.back(); }
    void validate() const;
};

}  // namespace wqed

#include "wqed/core/system_config.hpp"

#include <cmath>

#include "wqed/core/errors.hpp"

namespace wqed {

std::string_view to_string(Configuration c) {
    return c == Configuration::Chiral ? "chiral" : "symmetric";
}

std::string_view to_string(InitialState s) {
    return s == InitialState::FullyInverted ? "inverted" : "dicke-minus-one";
}

Configuration parse_configuration(std::string_view s) {
    if (s == "chiral") return Configuration::Chiral;
    if (s == "symmetric" || s == "mirror" || s == "symmetric-mirror") return Configuration::SymmetricMirror;
    throw DomainError("unknown configuration '" + std::string(s) + "'");
}

InitialState parse_initial_state(std::string_view s) {
    if (s == "inverted" || s == "fully-inverted") return InitialState::FullyInverted;
    if (s == "dicke-minus-one" || s == "dicke") return InitialState::DickeMinusOne;
    throw DomainError("unknown initial state '" + std::string(s) + "'");
}

SystemConfig::SystemConfig(std::size_t n_atoms, double beta, Configuration configuration,
                           InitialState initial_state)
    : n_atoms_(n_atoms), beta_(beta), configuration_(configuration), initial_state_(initial_state) {
    if (n_atoms_ == 0) throw DomainError("atom count must be positive");
    if (!(beta_ >= 0.0) || beta_ > 1.0) throw DomainError("coupling beta must lie in [0, 1]");
}

SystemConfig SystemConfig::from_optical_depth(std::size_t n_atoms, double scaled_od,
                                              Configuration configuration, InitialState initial_state) {
    if (n_atoms == 0) throw DomainError("atom count must be positive");
    return SystemConfig(n_atoms, scaled_od / static_cast<double>(n_atoms), configuration, initial_state);
}

double SystemConfig::beta_forward() const noexcept {
    return configuration_ == Configuration::Chiral ? beta_ : 0.5 * beta_;
}

double SystemConfig::beta_backward() const noexcept {
    return configuration_ == Configuration::Chiral ? 0.0 : 0.5 * beta_;
}

TimeGrid TimeGrid::uniform(double t_max, std::size_t n_points, double rtol, double atol) {
    if (!(t_max >= 0.0)) throw DomainError("t_max must be non-negative");
    TimeGrid grid;
    grid.rtol = rtol;
    grid.atol = atol;
    if (n_points < 2 || t_max == 0.0) {
        grid.output_times = {0.0};
        if (t_max > 0.0) grid.output_times.push_back(t_max);
        return grid;
    }
    grid.output_times.resize(n_points);
    for (std::size_t i = 0; i < n_points; ++i)
        grid.output_times[i] = t_max * static_cast<double>(i) / static_cast<double>(n_points - 1);
    return grid;
}

void TimeGrid::validate() const {
    if (output_times.empty() || output_times.front() != 0.0)
        throw DomainError("time grid must start at 0");
    for (std::size_t i = 1; i < output_times.size(); ++i)
        if (!(output_times[i] > output_times[i - 1]))
            throw DomainError("time grid must be strictly increasing");
    if (!(rtol > 0.0) || !(atol > 0.0)) throw DomainError("tolerances must be positive");
}

}  // namespace wqed

#include "wqed/core/trace.hpp"

#include <algorithm>
#include <stdexcept>

#include "wqed/core/errors.hpp"

namespace wqed {

void ObservableTrace::set_channel(const std::string& name, std::vector<double> values) {
    if (values.size() != times_.size())
        throw DomainError("channel '" + name + "' length does not match the time axis");
    auto it = std::find_if(channels_.begin(), channels_.end(), [&](const auto& c) { return c.first == name; });
    if (it != channels_.end())
        it->second = std::move(values);
    else
        channels_.emplace_back(name, std::move(values));
}

bool ObservableTrace::has_channel(const std::string& name) const {
    return std::any_of(channels_.begin(), channels_.end(), [&](const auto& c) { return c.first == name; });
}

const std::vector<double>& ObservableTrace::channel(const std::string& name) const {
    auto it = std::find_if(channels_.begin(), channels_.end(), [&](const auto& c) { return c.first == name; });
    if (it == channels_.end()) throw std::out_of_range("no channel '" + name + "'");
    return it->second;
}

void ObservableTrace::check_invariants(double slack) const {
    for (const auto& [name, values] : channels_) {
        if (values.size() != times_.size()) throw DomainError("channel '" + name + "' has wrong length");
        if (name.rfind("power", 0) == 0)
            for (double v : values)
                if (v < -slack) throw DomainError("negative power in channel '" + name + "'");
    }
}

}  // namespace wqed

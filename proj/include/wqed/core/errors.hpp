#pragma once

#include <stdexcept>
#include <string>

namespace wqed {

// Invalid parameter values (negative coupling, guard violations).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Special-function argument outside the evaluable range.
class RangeError : public std::range_error {
public:
    using std::range_error::range_error;
};

// Problem size beyond a solver's hard cap.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

// Adaptive integrator could not make progress.
class StiffnessError : public std::runtime_error {
public:
    StiffnessError(const std::string& what, double time_reached)
        : std::runtime_error(what), time_reached_(time_reached) {}
    double time_reached() const noexcept { return time_reached_; }

private:
    double time_reached_;
};

// Normalising by a vanishing power.
class NormalizationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A truncated series did not reach its convergence target.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace wqed

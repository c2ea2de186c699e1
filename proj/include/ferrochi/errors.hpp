#pragma once

#include <stdexcept>
#include <string>

namespace ferrochi {

// Precondition violations on user-supplied values (bad set parity, V not in
// range, zero-led composition, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& msg) : std::invalid_argument(msg) {}
};

// An enumeration or construction was asked to exceed its configured size bound.
class BoundError : public std::runtime_error {
public:
    explicit BoundError(const std::string& msg) : std::runtime_error(msg) {}
};

// A rational intermediate failed to clear to an integer result.  This signals
// a bug in the library, never bad input.
class IntegralityError : public std::logic_error {
public:
    explicit IntegralityError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace ferrochi

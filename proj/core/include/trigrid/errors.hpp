// errors.hpp: exception hierarchy shared by all trigrid components.
//
// The CLI maps these onto process exit codes: ConfigError/DomainError/
// InputError -> 2 (usage), TheoremViolation -> 3 (an exact inequality that
// is a theorem failed, i.e. a code bug), ResourceError -> 4 (guard hit).
#pragma once

#include <stdexcept>
#include <string>

namespace trigrid {

// Bad run configuration: empty calibration family, unknown generator kind,
// non-convex polynomial for a convex generator kind, unknown lemma id, ...
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside an operation's mathematical domain (k < 2 for energies,
// non-positive elements where positivity is required, zero shift, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed external data: unparsable scalar, unsorted ground-set file,
// duplicate canonical keys in an incidence input.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation refused to start because it exceeds a configured guard.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// An exactly-provable inequality failed. This is never a data property;
// it means the implementation is wrong, so it aborts the run loudly.
struct TheoremViolation : std::logic_error {
    explicit TheoremViolation(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace trigrid

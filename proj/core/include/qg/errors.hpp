#pragma once

#include <stdexcept>
#include <string>

namespace qg {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed space/run configuration (bad weights, p < 1, unknown kind, ...).
class ConfigError : public Error {
    using Error::Error;
};

// A well-formed object was used with invalid call arguments.
class ArgumentError : public Error {
    using Error::Error;
};

// Enumeration window too small to contain the required extremal sets.
class WindowError : public ArgumentError {
    using ArgumentError::ArgumentError;
};

// Exhaustive enumeration guard tripped; a sampling fallback exists.
class CapacityError : public Error {
    using Error::Error;
};

// No oracle (closed form, exact sigma, ...) registered for this space kind.
class UnsupportedError : public Error {
    using Error::Error;
};

// A checker's hypothesis failed numeric verification; the check was not run.
class HypothesisError : public Error {
    using Error::Error;
};

} // namespace qg

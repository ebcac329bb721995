#pragma once

#include <stdexcept>

namespace inerton {

/// Base of everything thrown by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input: unparseable quantities, malformed config files, unknown
/// presets or keys, mismatched dimensions. The CLI exits with code 2.
class config_error : public error {
public:
    using error::error;
};

/// Value outside the mathematical domain of an operation: superluminal
/// velocity, non-finite magnitude, log of a nonpositive number. The CLI
/// exits with code 3.
class numeric_error : public error {
public:
    using error::error;
};

} // namespace inerton

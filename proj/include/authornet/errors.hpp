#pragma once

#include <stdexcept>
#include <string>

namespace authornet {

/// Base error for all library failures.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid run configuration (bad flag value, out-of-range parameter).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Unreadable or structurally invalid input file.
class InputError : public Error {
public:
    using Error::Error;
};

/// Failure inside a named pipeline stage.
class StageError : public Error {
public:
    StageError(std::string stage, const std::string& message)
        : Error("[" + stage + "] " + message), stage_(std::move(stage)) {}

    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

}  // namespace authornet

#pragma once

#include <stdexcept>
#include <string>

namespace osr {

// Error taxonomy mirrored by the CLI exit codes:
// ConfigError -> 2, DataError -> 3, NumericError/DomainError -> 4.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : Error {
    using Error::Error;
};

struct DataError : Error {
    using Error::Error;
};

struct NumericError : Error {
    using Error::Error;
};

struct DomainError : NumericError {
    using NumericError::NumericError;
};

}  // namespace osr

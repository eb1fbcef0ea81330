#pragma once

#include <stdexcept>
#include <string>

namespace nnssim {

/// Argument outside the mathematical domain of an operation (negative delay, empty input, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Invalid configuration. The message starts with the offending field path.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// File system failure; the message carries the path.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace nnssim

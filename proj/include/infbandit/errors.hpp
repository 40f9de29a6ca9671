#pragma once

#include <stdexcept>
#include <string>

namespace infbandit {

// Bad configuration: invalid graph/experiment parameters, missing dataset
// files, incompatible feedback modes. CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input file that cannot be parsed; message names the offending line.
struct ParseError : ConfigError {
    explicit ParseError(const std::string& msg) : ConfigError(msg) {}
};

// API misuse: out-of-range node, uninitialized arm, mismatched trace lengths.
struct UsageError : std::logic_error {
    explicit UsageError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace infbandit

#pragma once

#include <stdexcept>
#include <string>

namespace macd {

// Bad user input: configs, CLI arguments, malformed specs. CLI maps this to exit status 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated internal invariant: d^2 != 0, cross-path disagreement, non-unit norm.
// CLI maps this to exit status 1.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

inline void require_config(bool ok, const std::string& msg) {
    if (!ok) throw ConfigError(msg);
}

inline void require_internal(bool ok, const std::string& msg) {
    if (!ok) throw InternalError(msg);
}

} // namespace macd

#pragma once

#include <stdexcept>
#include <string>

namespace rauzylab {

// Bad user-supplied data: malformed permutations, out-of-range arguments,
// length vectors outside an operation's domain. CLI maps this to exit 2.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Internal consistency failure: a value the library itself produced violates
// an invariant it is required to maintain. CLI maps this to exit 3.
struct invariant_error : std::runtime_error {
    explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rauzylab

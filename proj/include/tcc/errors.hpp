#pragma once

#include <stdexcept>
#include <string>

namespace tcc {

/// Malformed input or violated precondition. The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured search or enumeration cap was exceeded. The CLI maps this to exit code 3.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tcc

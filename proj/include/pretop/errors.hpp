#pragma once

#include <stdexcept>
#include <string>

namespace pretop {

// Bad user input: unknown point names, malformed files, violated
// preconditions the caller could have checked.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured cap (point count, enumeration size, dimension) was exceeded.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// The requested theory exists in the literature but is not computable here
// (J = I) or the operation is not defined for it (e.g. Kunneth for the
// inductive product).
class unsupported_theory_error : public std::runtime_error {
public:
    explicit unsupported_theory_error(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace pretop

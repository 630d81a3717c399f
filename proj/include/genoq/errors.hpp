#pragma once

#include <stdexcept>
#include <string>

namespace genoq {

// Bad input: malformed sequences, files, arguments, violated preconditions.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Work refused because it would exceed the configured qubit budget.
class cap_error : public std::runtime_error {
public:
    explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace genoq

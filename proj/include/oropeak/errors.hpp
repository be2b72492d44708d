#pragma once

#include <stdexcept>
#include <string>

namespace oropeak {

/// Problem with user-supplied data: malformed files, invalid parameters,
/// inputs that violate a documented precondition. Maps to CLI exit code 1.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A computed result violated an invariant the library promises. Seeing one
/// of these is a bug. Maps to CLI exit code 2.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace oropeak

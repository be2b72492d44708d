#pragma once

#include <charconv>
#include <string>

namespace oropeak {

/// Shortest round-trip decimal representation of a double (std::to_chars).
/// Every number the tool emits goes through here so that repeated runs are
/// byte-identical.
inline std::string fmt_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

} // namespace oropeak

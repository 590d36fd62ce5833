#pragma once

#include <charconv>
#include <string>

namespace mcalc {

/// Shortest round-trip decimal form of v. Deterministic and locale-free, so
/// emitted CSV is bit-stable across runs.
inline std::string format_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace mcalc

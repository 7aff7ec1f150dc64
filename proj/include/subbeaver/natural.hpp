#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace subbeaver {

/// Arbitrary-precision natural number. Only non-negative values are ever produced.
using Natural = boost::multiprecision::cpp_int;

inline std::string to_string(const Natural& n) { return n.str(); }

/// Clamp to uint64_t; values above the range saturate.
inline std::uint64_t saturate_u64(const Natural& n) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    if (n > kMax) return kMax;
    return n.convert_to<std::uint64_t>();
}

/// Parse a decimal natural; throws std::invalid_argument on anything else.
Natural parse_natural(const std::string& text);

}  // namespace subbeaver

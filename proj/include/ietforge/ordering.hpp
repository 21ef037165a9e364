#pragma once

#include <string_view>

namespace ietforge {

// Result of comparing two scalars. Exact backends never produce Unknown;
// ball arithmetic returns Unknown when the intervals overlap without both
// being the same exact point.
enum class Ordering { LT, EQ, GT, Unknown };

constexpr Ordering ordering_from_sign(int s) {
    return s < 0 ? Ordering::LT : (s > 0 ? Ordering::GT : Ordering::EQ);
}

constexpr Ordering reverse(Ordering o) {
    switch (o) {
    case Ordering::LT: return Ordering::GT;
    case Ordering::GT: return Ordering::LT;
    default: return o;
    }
}

constexpr std::string_view to_string(Ordering o) {
    switch (o) {
    case Ordering::LT: return "LT";
    case Ordering::EQ: return "EQ";
    case Ordering::GT: return "GT";
    default: return "UNKNOWN";
    }
}

} // namespace ietforge

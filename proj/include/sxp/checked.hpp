#pragma once

#include <cstdint>

#include "sxp/errors.hpp"

namespace sxp {

// All coefficients are exact 64-bit integers; arithmetic that could wrap
// goes through these helpers and throws instead of wrapping.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
    Int out;
    if (__builtin_add_overflow(a, b, &out)) throw overflow("integer overflow in addition");
    return out;
}

inline Int checked_mul(Int a, Int b) {
    Int out;
    if (__builtin_mul_overflow(a, b, &out)) throw overflow("integer overflow in multiplication");
    return out;
}

} // namespace sxp

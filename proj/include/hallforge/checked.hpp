#pragma once

#include <cstdint>
#include <string>

#include "hallforge/error.hpp"

namespace hallforge {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(ErrorKind::Overflow, std::to_string(a) + " + " + std::to_string(b));
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw Error(ErrorKind::Overflow, std::to_string(a) + " - " + std::to_string(b));
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(ErrorKind::Overflow, std::to_string(a) + " * " + std::to_string(b));
    return r;
}

}  // namespace hallforge

#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace hoflab {

/// Natural numbers. Every quantity computed by the library (F values,
/// substituted lengths, letter counts) is kept below 2^63 so it also fits a
/// signed 64-bit difference; anything larger is reported as an overflow.
using Nat = std::uint64_t;

inline constexpr Nat nat_limit = Nat{1} << 63;

inline Nat checked_add(Nat a, Nat b) {
  Nat r = 0;
  if (__builtin_add_overflow(a, b, &r) || r >= nat_limit) {
    throw std::overflow_error("natural overflow: " + std::to_string(a) + " + " + std::to_string(b));
  }
  return r;
}

inline Nat checked_mul(Nat a, Nat b) {
  Nat r = 0;
  if (__builtin_mul_overflow(a, b, &r) || r >= nat_limit) {
    throw std::overflow_error("natural overflow: " + std::to_string(a) + " * " + std::to_string(b));
  }
  return r;
}

inline std::int64_t to_signed(Nat v) {
  if (v >= nat_limit) {
    throw std::overflow_error("value exceeds signed range: " + std::to_string(v));
  }
  return static_cast<std::int64_t>(v);
}

/// Element cap shared by tables and streams. Read once from HOFLAB_MEM_CAP
/// (a plain element count, e.g. "1073741824"); defaults to 2^30.
Nat memory_cap();

/// Overrides the cap for the current process (tests use this).
void set_memory_cap(Nat cap);

/// Throws std::length_error when `elements` exceeds memory_cap().
void require_within_cap(Nat elements, const char* what);

}  // namespace hoflab

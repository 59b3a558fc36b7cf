#pragma once

// Overflow-checked integer primitives shared by every module, oracles included.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace p2b {

using Int = std::int64_t;

// A caller violated an operation's precondition.
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// An intermediate value left the 64-bit range.
class OverflowError : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

// Two independent computations disagreed; always an implementation bug.
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("integer overflow in addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

inline Int sq(Int a) { return mul(a, a); }

inline Int abs(Int a) { return a < 0 ? neg(a) : a; }

} // namespace checked

// Floor of the square root of n >= 0, exact for the whole int64 range.
inline Int isqrt(Int n) {
  if (n < 0)
    throw DomainError("isqrt of negative number");
  if (n < 2)
    return n;
  // Newton iteration from an upper bound; monotone decreasing until it settles.
  __int128 x = n;
  __int128 y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return static_cast<Int>(x);
}

inline bool is_perfect_square(Int n) {
  if (n < 0)
    return false;
  Int r = isqrt(n);
  return static_cast<__int128>(r) * r == n;
}

// Mathematical mod: result in [0, m).
inline Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

} // namespace p2b

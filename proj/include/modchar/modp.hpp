#pragma once

#include <cstdint>

#include "modchar/error.hpp"

// Residue arithmetic in Z/p for p below 2^63.
namespace modchar::modp {

using Residue = std::uint64_t;

inline Residue reduce(std::int64_t v, std::uint64_t p) {
  auto r = v % static_cast<std::int64_t>(p);
  return static_cast<Residue>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

inline Residue add(Residue a, Residue b, std::uint64_t p) {
  Residue s = a + b;
  return s >= p ? s - p : s;
}

inline Residue sub(Residue a, Residue b, std::uint64_t p) { return a >= b ? a - b : a + (p - b); }

inline Residue neg(Residue a, std::uint64_t p) { return a == 0 ? 0 : p - a; }

inline Residue mul(Residue a, Residue b, std::uint64_t p) {
  return static_cast<Residue>((static_cast<unsigned __int128>(a) * b) % p);
}

inline Residue pow(Residue a, std::uint64_t e, std::uint64_t p) {
  Residue result = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1U) result = mul(result, a, p);
    a = mul(a, a, p);
    e >>= 1U;
  }
  return result;
}

// p is prime, so a^(p-2) is the inverse.
inline Residue inv(Residue a, std::uint64_t p) {
  if (a % p == 0) throw ZeroDivisionError("inverse of zero mod p");
  return pow(a, p - 2, p);
}

// (-1)^k as a residue.
inline Residue sign(std::uint64_t k, std::uint64_t p) { return (k & 1U) ? neg(1 % p, p) : 1 % p; }

}  // namespace modchar::modp

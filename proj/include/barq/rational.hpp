#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace barq {

// Exact arithmetic everywhere: the engine's scalar is an arbitrary-precision
// rational, kept in canonical form (reduced, positive denominator).
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long p, long q = 1) {
    Rat r(p, q);
    r.canonicalize();
    return r;
}

// Parses "p/q" or "p" (used by the JSON schemas, coefficients are strings).
Rat parse_rat(const std::string& s);

std::string to_string(const Rat& r);

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

// (-1)^e as a scalar.
inline Rat sign_pow(long e) { return ((e % 2 + 2) % 2 == 0) ? Rat(1) : Rat(-1); }
inline int parity(long e) { return static_cast<int>((e % 2 + 2) % 2); }

} // namespace barq

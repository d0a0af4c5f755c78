#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace littelmann {

// Exact rational scalar. All arithmetic in the library is exact; there is
// no floating point anywhere.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& q) {
    return mpz_cmp_ui(q.get_den_mpz_t(), 1) == 0;
}

// Largest integer <= q.
long rat_floor(const Rat& q);

// q must be an integer that fits in a long.
long rat_to_long(const Rat& q);

// Canonical form: "p" for integers, "p/q" otherwise.
std::string rat_str(const Rat& q);

// Accepts "p" and "p/q" with optional sign; throws std::invalid_argument
// on malformed input or zero denominator.
Rat parse_rational(const std::string& s);

std::size_t rat_hash(const Rat& q) noexcept;

inline void hash_combine(std::size_t& seed, std::size_t v) noexcept {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace littelmann

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "littelmann/errors.hpp"
#include "littelmann/rational.hpp"

namespace littelmann {

// Weights are stored in fundamental-weight coordinates throughout:
// coords[i] = <chi, alpha_i^vee>.
using QWeight = std::vector<Rat>;
// Integral weights (elements of the weight lattice X).
using ZWeight = std::vector<long>;

inline void check_rank(std::size_t a, std::size_t b) {
    if (a != b) throw RankMismatch("rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

QWeight qw_of(const ZWeight& z);
// Throws NotIntegral if any coordinate is not an integer.
ZWeight zw_of(const QWeight& q);

QWeight add(const QWeight& a, const QWeight& b);
QWeight sub(const QWeight& a, const QWeight& b);
QWeight negate(const QWeight& a);
QWeight scale(const Rat& c, const QWeight& a);
ZWeight add(const ZWeight& a, const ZWeight& b);
ZWeight sub(const ZWeight& a, const ZWeight& b);
ZWeight negate(const ZWeight& a);

bool is_zero(const QWeight& a);
bool all_integral(const QWeight& a);

bool is_dominant(const QWeight& a);
bool is_dominant(const ZWeight& a);

std::size_t qw_hash(const QWeight& a) noexcept;

// "a,b,c" with canonical rational coordinates.
std::string to_string(const QWeight& a);
std::string to_string(const ZWeight& a);

// Parses comma-separated integer coordinates.
ZWeight parse_zweight(const std::string& s);

}  // namespace littelmann

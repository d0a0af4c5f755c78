#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "littelmann/cartan.hpp"
#include "littelmann/weight.hpp"

namespace littelmann {

// Piecewise-linear path from 0, stored as the ordered list of nonzero
// segment vectors (chi_1, ..., chi_p) and traversed at uniform speed per
// segment. The canonical form has no zero segment and never two
// consecutive segments that are positive rational multiples of each
// other, which makes equality of canonical forms the reparametrization
// equivalence of paths.
struct Path {
    int rank = 0;
    std::vector<QWeight> segments;

    static Path make(int rank, std::vector<QWeight> segments);

    bool is_empty() const { return segments.empty(); }
    std::size_t segment_count() const { return segments.size(); }
    bool operator==(const Path& o) const = default;
};

struct PathHash {
    std::size_t operator()(const Path& p) const noexcept;
};

Path straight_path(const QWeight& chi);
Path straight_path(const ZWeight& chi);
Path empty_path(int rank);

Path concat(const Path& a, const Path& b);

// pi*(t) = pi(1-t) - pi(1): segments reversed and negated.
Path dual(const Path& p);

QWeight endpoint(const Path& p);

// Partial sums S_0 = 0, S_1, ..., S_p (the vertices of the path).
std::vector<QWeight> partial_sums(const Path& p);

// H_beta(t) = <pi(t), beta^vee>, sampled at the vertices; piecewise
// linear in between, so vertex minima are global.
struct HeightProfile {
    std::vector<std::pair<Rat, Rat>> breakpoints;  // (time, value), time 0 .. 1
    Rat min_value;
};

HeightProfile height_profile(const Path& p, const RealRoot& beta);

// min_t <pi(t), alpha_i^vee> for the simple coroot i (vertex minimum).
Rat height_min_simple(const Path& p, int i);
Rat height_min(const Path& p, const RealRoot& beta);

// True iff every simple-root height minimum m_alpha is an integer.
bool is_integral(const Path& p, const RootSystem& rs);

}  // namespace littelmann

#pragma once

#include <utility>
#include <vector>

#include "littelmann/crystal.hpp"
#include "littelmann/path.hpp"

namespace littelmann {

// Report of the sufficient extremality criterion: for every supplied
// positive real root beta and every interior vertex j of the path with
// <chi_1+...+chi_j, beta^vee> < 0, the next segment must satisfy
// <chi_{j+1}, beta^vee> <= 0. For piecewise-linear paths this is
// equivalent to: each height function H_beta is either nonnegative
// throughout, or nonnegative up to some time and strictly negative and
// non-increasing after it.
struct CriterionViolation {
    RealRoot beta;
    int vertex;  // 1-based index j of the failing corner
    bool operator<(const CriterionViolation& o) const {
        return beta < o.beta || (beta == o.beta && vertex < o.vertex);
    }
};

struct CriterionReport {
    bool passed = false;
    std::size_t checked_roots = 0;
    bool roots_complete = false;            // whole set of positive real roots?
    std::optional<long> height_cutoff;      // cutoff used when not complete
    std::vector<CriterionViolation> violations;
    // {beta | H_beta(1) < 0} over the supplied roots
    std::vector<RealRoot> predicted_negative_set;
};

// Exact extremality test: eta is extremal iff the dominant representative
// of its endpoint equals the highest weight of its crystal component.
// Also returns the minimal-length w with w * eta(1) dominant.
std::pair<bool, WeylElement> is_extremal(const RootSystem& rs, const Path& eta);

CriterionReport satisfies_criterion(const Path& p, const RootSet& roots);

// {beta in roots | <pi(1), beta^vee> < 0}
std::vector<RealRoot> criterion_negative_set(const Path& p, const RootSet& roots);

// Conditions every extremal path satisfies: for each beta, if
// H_beta(1) >= 0 then H_beta >= 0 everywhere, else H_beta >= H_beta(1)
// everywhere. Necessary but not sufficient.
bool necessary_condition(const Path& p, const RootSet& roots);

}  // namespace littelmann

#include "littelmann/extremal.hpp"

#include <algorithm>

#include "littelmann/errors.hpp"

namespace littelmann {

std::pair<bool, WeylElement> is_extremal(const RootSystem& rs, const Path& eta) {
    auto [top, raising_word] = highest_path(rs, eta);
    (void)raising_word;
    const QWeight component_highest = endpoint(top);
    auto [dom, w] = dominant_representative(rs, endpoint(eta));
    return {dom == component_highest, std::move(w)};
}

CriterionReport satisfies_criterion(const Path& p, const RootSet& roots) {
    CriterionReport report;
    report.checked_roots = roots.roots.size();
    report.roots_complete = roots.complete;
    report.height_cutoff = roots.height_cutoff;

    const auto sums = partial_sums(p);
    const std::size_t np = p.segments.size();
    for (const auto& beta : roots.roots) {
        for (std::size_t j = 1; j + 1 <= np; ++j) {
            // interior corner j: negative prefix forces a nonincreasing
            // continuation along beta
            if (pairing(sums[j], beta) < 0 && pairing(p.segments[j], beta) > 0)
                report.violations.push_back(CriterionViolation{beta, static_cast<int>(j)});
        }
        if (np > 0 && pairing(sums[np], beta) < 0) report.predicted_negative_set.push_back(beta);
    }
    std::sort(report.violations.begin(), report.violations.end());
    std::sort(report.predicted_negative_set.begin(), report.predicted_negative_set.end());
    report.passed = report.violations.empty();
    return report;
}

std::vector<RealRoot> criterion_negative_set(const Path& p, const RootSet& roots) {
    std::vector<RealRoot> out;
    const QWeight end = endpoint(p);
    for (const auto& beta : roots.roots)
        if (pairing(end, beta) < 0) out.push_back(beta);
    std::sort(out.begin(), out.end());
    return out;
}

bool necessary_condition(const Path& p, const RootSet& roots) {
    for (const auto& beta : roots.roots) {
        const HeightProfile prof = height_profile(p, beta);
        const Rat final_value = prof.breakpoints.back().second;
        if (final_value >= 0) {
            if (prof.min_value < 0) return false;
        } else {
            if (prof.min_value < final_value) return false;
        }
    }
    return true;
}

}  // namespace littelmann

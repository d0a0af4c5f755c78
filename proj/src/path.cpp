#include "littelmann/path.hpp"

#include <algorithm>

#include "littelmann/errors.hpp"

namespace littelmann {

namespace {

// True iff b = q a for some rational q > 0.
bool positively_collinear(const QWeight& a, const QWeight& b) {
    std::size_t k = 0;
    while (k < a.size() && a[k] == 0) ++k;
    if (k == a.size()) return false;  // zero segments never appear here
    if (b[k] == 0) return false;
    const Rat q = b[k] / a[k];
    if (q <= 0) return false;
    for (std::size_t j = 0; j < a.size(); ++j)
        if (b[j] != q * a[j]) return false;
    return true;
}

}  // namespace

Path Path::make(int rank, std::vector<QWeight> segments) {
    Path p;
    p.rank = rank;
    for (auto& seg : segments) {
        check_rank(seg.size(), static_cast<std::size_t>(rank));
        if (is_zero(seg)) continue;
        if (!p.segments.empty() && positively_collinear(p.segments.back(), seg)) {
            p.segments.back() = add(p.segments.back(), seg);
        } else {
            p.segments.push_back(std::move(seg));
        }
    }
    return p;
}

std::size_t PathHash::operator()(const Path& p) const noexcept {
    std::size_t h = p.segments.size();
    hash_combine(h, static_cast<std::size_t>(p.rank));
    for (const auto& seg : p.segments) hash_combine(h, qw_hash(seg));
    return h;
}

Path straight_path(const QWeight& chi) {
    return Path::make(static_cast<int>(chi.size()), {chi});
}

Path straight_path(const ZWeight& chi) { return straight_path(qw_of(chi)); }

Path empty_path(int rank) { return Path::make(rank, {}); }

Path concat(const Path& a, const Path& b) {
    if (a.rank != b.rank) throw RankMismatch("concat: rank mismatch");
    std::vector<QWeight> segs(a.segments);
    segs.insert(segs.end(), b.segments.begin(), b.segments.end());
    return Path::make(a.rank, std::move(segs));
}

Path dual(const Path& p) {
    std::vector<QWeight> segs;
    segs.reserve(p.segments.size());
    for (auto it = p.segments.rbegin(); it != p.segments.rend(); ++it) segs.push_back(negate(*it));
    return Path::make(p.rank, std::move(segs));
}

QWeight endpoint(const Path& p) {
    QWeight e(static_cast<std::size_t>(p.rank), Rat(0));
    for (const auto& seg : p.segments) e = add(e, seg);
    return e;
}

std::vector<QWeight> partial_sums(const Path& p) {
    std::vector<QWeight> sums;
    sums.reserve(p.segments.size() + 1);
    sums.emplace_back(static_cast<std::size_t>(p.rank), Rat(0));
    for (const auto& seg : p.segments) sums.push_back(add(sums.back(), seg));
    return sums;
}

HeightProfile height_profile(const Path& p, const RealRoot& beta) {
    HeightProfile prof;
    const auto sums = partial_sums(p);
    const std::size_t np = p.segments.size();
    const Rat step = np == 0 ? Rat(0) : Rat(1, static_cast<long>(np));
    prof.min_value = 0;
    for (std::size_t j = 0; j < sums.size(); ++j) {
        Rat value = pairing(sums[j], beta);
        if (value < prof.min_value) prof.min_value = value;
        prof.breakpoints.emplace_back(step * static_cast<long>(j), std::move(value));
    }
    return prof;
}

Rat height_min_simple(const Path& p, int i) {
    Rat m(0), run(0);
    for (const auto& seg : p.segments) {
        run += seg[static_cast<std::size_t>(i)];
        if (run < m) m = run;
    }
    return m;
}

Rat height_min(const Path& p, const RealRoot& beta) {
    Rat m(0);
    QWeight run(static_cast<std::size_t>(p.rank), Rat(0));
    for (const auto& seg : p.segments) {
        run = add(run, seg);
        Rat v = pairing(run, beta);
        if (v < m) m = std::move(v);
    }
    return m;
}

bool is_integral(const Path& p, const RootSystem& rs) {
    check_rank(static_cast<std::size_t>(p.rank), static_cast<std::size_t>(rs.rank));
    for (int i = 0; i < rs.rank; ++i)
        if (!is_integer(height_min_simple(p, i))) return false;
    return true;
}

}  // namespace littelmann

#include "littelmann/rootops.hpp"

#include <algorithm>

#include "littelmann/errors.hpp"

namespace littelmann {

namespace {

void check_alpha(const RootSystem& rs, int alpha) {
    if (alpha < 0 || alpha >= rs.rank)
        throw IndexOutOfRange("simple root index " + std::to_string(alpha) + " out of range");
}

// Adds t strictly inside (t0, t1) where the affine function through
// (t0, h0), (t1, h1) equals value.
void add_crossing(std::vector<Rat>& times, const Rat& t0, const Rat& t1, const Rat& h0, const Rat& h1,
                  const Rat& value) {
    if (h0 == h1) return;
    Rat t = t0 + (value - h0) / (h1 - h0) * (t1 - t0);
    if (t > t0 && t < t1) times.push_back(std::move(t));
}

}  // namespace

std::optional<Path> lower(const RootSystem& rs, const Path& p, int alpha) {
    check_alpha(rs, alpha);
    const std::size_t np = p.segments.size();
    const auto sums = partial_sums(p);

    std::vector<Rat> h(np + 1);
    Rat m(0);
    for (std::size_t j = 0; j <= np; ++j) {
        h[j] = sums[j][static_cast<std::size_t>(alpha)];
        if (h[j] < m) m = h[j];
    }
    if (h[np] - m < 1) return std::nullopt;

    // Suffix minima over the vertices: L(t) on segment j is
    // min(1, min(H(t), M[j]) - m).
    std::vector<Rat> suffix_min(np + 1);
    suffix_min[np] = h[np];
    for (std::size_t j = np; j-- > 0;) suffix_min[j] = std::min(h[j], suffix_min[j + 1]);

    const ZWeight alpha_w = rs.simple_root(alpha);
    const Rat step(1, static_cast<long>(np));
    const Rat target = m + 1;

    std::vector<QWeight> verts;
    verts.emplace_back(static_cast<std::size_t>(p.rank), Rat(0));
    for (std::size_t j = 1; j <= np; ++j) {
        const Rat t0 = step * static_cast<long>(j - 1);
        const Rat t1 = step * static_cast<long>(j);
        std::vector<Rat> times;
        add_crossing(times, t0, t1, h[j - 1], h[j], suffix_min[j]);
        add_crossing(times, t0, t1, h[j - 1], h[j], target);
        times.push_back(t1);
        std::sort(times.begin(), times.end());
        times.erase(std::unique(times.begin(), times.end()), times.end());
        for (const Rat& t : times) {
            const Rat frac = (t - t0) / step;  // position within the segment
            const Rat ht = h[j - 1] + frac * (h[j] - h[j - 1]);
            Rat lt = std::min(ht, suffix_min[j]) - m;
            if (lt > 1) lt = 1;
            QWeight point(sums[j - 1]);
            for (std::size_t k = 0; k < point.size(); ++k) {
                point[k] += frac * p.segments[j - 1][k];
                point[k] -= lt * alpha_w[k];
            }
            verts.push_back(std::move(point));
        }
    }

    std::vector<QWeight> segs;
    segs.reserve(verts.size() - 1);
    for (std::size_t i = 1; i < verts.size(); ++i) segs.push_back(sub(verts[i], verts[i - 1]));
    return Path::make(p.rank, std::move(segs));
}

std::optional<Path> raise(const RootSystem& rs, const Path& p, int alpha) {
    auto lowered = lower(rs, dual(p), alpha);
    if (!lowered) return std::nullopt;
    return dual(*lowered);
}

std::optional<Path> lower_k(const RootSystem& rs, const Path& p, int alpha, long k) {
    if (k < 0) throw Error("lower_k: negative power");
    std::optional<Path> cur(p);
    for (long i = 0; i < k; ++i) {
        cur = lower(rs, *cur, alpha);
        if (!cur) return std::nullopt;
    }
    return cur;
}

std::optional<Path> raise_k(const RootSystem& rs, const Path& p, int alpha, long k) {
    if (k < 0) throw Error("raise_k: negative power");
    std::optional<Path> cur(p);
    for (long i = 0; i < k; ++i) {
        cur = raise(rs, *cur, alpha);
        if (!cur) return std::nullopt;
    }
    return cur;
}

long max_lower_count(const RootSystem& rs, const Path& p, int alpha) {
    check_alpha(rs, alpha);
    const Rat m = height_min_simple(p, alpha);
    const Rat end = endpoint(p)[static_cast<std::size_t>(alpha)];
    return rat_floor(end - m);
}

long max_raise_count(const RootSystem& rs, const Path& p, int alpha) {
    check_alpha(rs, alpha);
    return rat_floor(-height_min_simple(p, alpha));
}

Path weyl_path_action(const RootSystem& rs, const Path& p, const std::vector<int>& word) {
    for (int i : word) check_alpha(rs, i);
    Path cur(p);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const int i = *it;
        const Rat n = endpoint(cur)[static_cast<std::size_t>(i)];
        if (!is_integer(n))
            throw NotIntegral("path action needs an integer endpoint pairing, got " + rat_str(n));
        const long k = rat_to_long(n);
        std::optional<Path> next = k >= 0 ? lower_k(rs, cur, i, k) : raise_k(rs, cur, i, -k);
        if (!next)
            throw NotIntegral("root operator power undefined on a non-integral path");
        cur = std::move(*next);
    }
    return cur;
}

}  // namespace littelmann

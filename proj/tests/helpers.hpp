#pragma once

#include <random>
#include <vector>

#include "littelmann/crystal.hpp"
#include "littelmann/oracle.hpp"
#include "littelmann/rootops.hpp"

namespace littelmann::testing {

// Random integral paths, produced the way the theory guarantees
// integrality: start from a dominant straight path and walk with the root
// operators; optionally concatenate two such walks.
struct PathSampler {
    const RootSystem& rs;
    std::mt19937_64 rng;

    PathSampler(const RootSystem& r, std::uint64_t seed) : rs(r), rng(seed) {}

    ZWeight random_dominant(long max_coord) {
        ZWeight w(static_cast<std::size_t>(rs.rank));
        std::uniform_int_distribution<long> dist(0, max_coord);
        for (auto& c : w) c = dist(rng);
        return w;
    }

    Path random_walk(long max_coord = 3, int steps = 6) {
        Path p = straight_path(random_dominant(max_coord));
        std::uniform_int_distribution<int> pick_alpha(0, rs.rank - 1);
        std::uniform_int_distribution<int> pick_dir(0, 1);
        for (int s = 0; s < steps; ++s) {
            const int alpha = pick_alpha(rng);
            auto next = pick_dir(rng) ? lower(rs, p, alpha) : raise(rs, p, alpha);
            if (next) p = std::move(*next);
        }
        return p;
    }

    Path random_integral(long max_coord = 3, int steps = 6) {
        if (std::uniform_int_distribution<int>(0, 2)(rng) == 0)
            return concat(random_walk(max_coord, steps / 2), random_walk(max_coord, steps / 2));
        return random_walk(max_coord, steps);
    }

    // Arbitrary rational path (not necessarily integral); used where the
    // operations are total.
    Path random_rational(int max_segments = 4) {
        std::uniform_int_distribution<int> nseg(0, max_segments);
        std::uniform_int_distribution<long> num(-3, 3);
        std::uniform_int_distribution<long> den(1, 3);
        std::vector<QWeight> segs;
        const int n = nseg(rng);
        for (int i = 0; i < n; ++i) {
            QWeight seg;
            for (int j = 0; j < rs.rank; ++j) seg.push_back(rat(num(rng), den(rng)));
            segs.push_back(std::move(seg));
        }
        return Path::make(rs.rank, std::move(segs));
    }
};

// sl2 tensor rule, used as an independent oracle for rank 1.
inline WeightMultiset clebsch_gordan(long a, long b) {
    WeightMultiset out;
    for (long c = std::abs(a - b); c <= a + b; c += 2) out[{c}] = 1;
    return out;
}

// I(w) from the definition: positive roots sent negative.
inline std::vector<RealRoot> inversion_set_bruteforce(const RootSystem& rs, const WeylElement& w) {
    std::vector<RealRoot> out;
    for (const auto& beta : positive_real_roots(rs).roots)
        if (!weyl_apply(rs, w, beta).positive) out.push_back(beta);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace littelmann::testing

#include "littelmann/path.hpp"

#include "doctest.h"
#include "helpers.hpp"
#include "littelmann/errors.hpp"

using namespace littelmann;

TEST_CASE("straight paths and endpoints") {
    const auto p = straight_path(ZWeight{1, 0});
    CHECK(p.segments == std::vector<QWeight>{{Rat(1), Rat(0)}});
    CHECK(endpoint(p) == QWeight{Rat(1), Rat(0)});

    CHECK(straight_path(ZWeight{0, 0}).is_empty());
    CHECK(endpoint(empty_path(2)) == QWeight{Rat(0), Rat(0)});
}

TEST_CASE("concat canonicalizes") {
    const auto a = straight_path(ZWeight{1, 0});
    CHECK(concat(a, empty_path(2)) == a);
    CHECK(concat(empty_path(2), a) == a);
    CHECK(concat(a, straight_path(ZWeight{2, 0})) == straight_path(ZWeight{3, 0}));
    const auto two = concat(a, straight_path(ZWeight{0, 1}));
    CHECK(two.segment_count() == 2);
    CHECK_THROWS_AS(concat(a, straight_path(ZWeight{1})), RankMismatch);

    // positive-multiple merge only: a direction reversal is a corner
    const auto back = Path::make(2, {{Rat(1), Rat(0)}, {Rat(-2), Rat(0)}});
    CHECK(back.segment_count() == 2);
    // rational multiples merge
    const auto frac = Path::make(2, {{Rat(1), Rat(2)}, {rat(1, 2), Rat(1)}});
    CHECK(frac.segment_count() == 1);
    CHECK(frac.segments[0] == QWeight{rat(3, 2), Rat(3)});
}

TEST_CASE("canonicalization is idempotent; concat associative") {
    const auto a2 = builtin_root_system("A2");
    testing::PathSampler sampler(a2, 17);
    for (int t = 0; t < 200; ++t) {
        const Path p = sampler.random_rational();
        CHECK(Path::make(p.rank, p.segments) == p);
        const Path q = sampler.random_rational();
        const Path r = sampler.random_rational();
        CHECK(concat(concat(p, q), r) == concat(p, concat(q, r)));
        CHECK(endpoint(concat(p, q)) == add(endpoint(p), endpoint(q)));
    }
}

TEST_CASE("dual reverses, negates, and is involutive") {
    const auto p = Path::make(2, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
    const auto d = dual(p);
    CHECK(d.segments == std::vector<QWeight>{{Rat(0), Rat(-1)}, {Rat(-1), Rat(0)}});
    CHECK(dual(d) == p);
    CHECK(dual(empty_path(3)).is_empty());
    CHECK(endpoint(d) == negate(endpoint(p)));
}

TEST_CASE("height profiles evaluate at vertices") {
    const auto a1 = builtin_root_system("A1");
    const auto p = Path::make(1, {{Rat(-1)}, {Rat(1)}});
    const auto prof = height_profile(p, a1.simple_real_root(0));
    REQUIRE(prof.breakpoints.size() == 3);
    CHECK(prof.breakpoints[0] == std::pair<Rat, Rat>{Rat(0), Rat(0)});
    CHECK(prof.breakpoints[1] == std::pair<Rat, Rat>{rat(1, 2), Rat(-1)});
    CHECK(prof.breakpoints[2] == std::pair<Rat, Rat>{Rat(1), Rat(0)});
    CHECK(prof.min_value == -1);

    const auto empty = height_profile(empty_path(1), a1.simple_real_root(0));
    REQUIRE(empty.breakpoints.size() == 1);
    CHECK(empty.breakpoints[0] == std::pair<Rat, Rat>{Rat(0), Rat(0)});
    CHECK(empty.min_value == 0);

    const auto a2 = builtin_root_system("A2");
    for (const auto& beta : positive_real_roots(a2).roots)
        CHECK(height_profile(straight_path(ZWeight{2, 1}), beta).min_value == 0);
}

TEST_CASE("dual height profiles: m* = m - H(1)") {
    const auto a2 = builtin_root_system("A2");
    testing::PathSampler sampler(a2, 19);
    const auto roots = positive_real_roots(a2).roots;
    for (int t = 0; t < 100; ++t) {
        const Path p = sampler.random_rational();
        const Path d = dual(p);
        for (const auto& beta : roots) {
            const auto hp = height_profile(p, beta);
            const auto hd = height_profile(d, beta);
            CHECK(hd.min_value == hp.min_value - hp.breakpoints.back().second);
            // values reversed minus final value
            REQUIRE(hd.breakpoints.size() == hp.breakpoints.size());
            const std::size_t n = hp.breakpoints.size();
            for (std::size_t i = 0; i < n; ++i)
                CHECK(hd.breakpoints[i].second ==
                      hp.breakpoints[n - 1 - i].second - hp.breakpoints[n - 1].second);
        }
    }
}

TEST_CASE("integrality is a statement about simple height minima") {
    const auto a1 = builtin_root_system("A1");
    CHECK(is_integral(straight_path(ZWeight{5}), a1));
    CHECK(is_integral(empty_path(1), a1));
    CHECK_FALSE(is_integral(Path::make(1, {{rat(-1, 2)}, {rat(3, 2)}}), a1));

    const auto a2 = builtin_root_system("A2");
    CHECK(is_integral(straight_path(ZWeight{3, 7}), a2));
}

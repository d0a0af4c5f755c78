#include "littelmann/crystal.hpp"

#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "littelmann/errors.hpp"
#include "littelmann/oracle.hpp"

using namespace littelmann;

TEST_CASE("small crystals") {
    const auto a2 = builtin_root_system("A2");
    const auto b = generate_crystal(a2, straight_path(ZWeight{1, 0}));
    CHECK(b.size() == 3);
    CHECK_FALSE(b.truncated);
    const auto ch = character(b);
    CHECK(ch.mults == WeightMultiset{{{-1, 1}, 1}, {{0, -1}, 1}, {{1, 0}, 1}});

    const auto a1 = builtin_root_system("A1");
    CHECK(generate_crystal(a1, straight_path(ZWeight{2})).size() == 3);
    CHECK(generate_crystal(a2, empty_path(2)).size() == 1);

    CHECK_THROWS_AS(generate_crystal(a1, Path::make(1, {{rat(-1, 2)}, {Rat(1)}})), NotIntegral);
}

TEST_CASE("unique source node of an untruncated crystal is the dominant path") {
    const auto a2 = builtin_root_system("A2");
    for (const ZWeight lambda : {ZWeight{1, 1}, ZWeight{2, 0}, ZWeight{2, 1}}) {
        const auto b = generate_crystal(a2, straight_path(lambda));
        int sources = 0;
        for (const auto& node : b.nodes) {
            bool any_raise = false;
            for (int alpha = 0; alpha < 2; ++alpha)
                if (raise(a2, node, alpha)) any_raise = true;
            if (!any_raise) {
                ++sources;
                CHECK(is_dominant_path(node));
                CHECK(node == straight_path(lambda));
            }
        }
        CHECK(sources == 1);
    }
}

TEST_CASE("characters agree with Freudenthal") {
    const auto a2 = builtin_root_system("A2");
    const auto adj = character(generate_crystal(a2, straight_path(ZWeight{1, 1})));
    CHECK(adj.mults.at(ZWeight{0, 0}) == 2);
    long total = 0;
    for (const auto& [w, m] : adj.mults) total += m;
    CHECK(total == 8);
    CHECK(adj.mults == freudenthal_multiplicities(a2, ZWeight{1, 1}).mults);

    CHECK(character(generate_crystal(a2, empty_path(2))).mults == WeightMultiset{{{0, 0}, 1}});
}

TEST_CASE("every node of a dominant-path crystal is integral") {
    const auto b2 = builtin_root_system("B2");
    const auto b = generate_crystal(b2, straight_path(ZWeight{1, 1}));
    for (const auto& node : b.nodes) CHECK(is_integral(node, b2));
}

TEST_CASE("crystal generation is connected: any node regenerates the same set") {
    const auto a2 = builtin_root_system("A2");
    const auto b = generate_crystal(a2, straight_path(ZWeight{1, 1}));
    std::set<std::size_t> hashes;
    for (const auto& n : b.nodes) hashes.insert(PathHash{}(n));
    for (std::size_t i = 0; i < b.size(); i += 3) {
        const auto again = generate_crystal(a2, b.node(static_cast<int>(i)));
        CHECK(again.size() == b.size());
        std::set<std::size_t> h2;
        for (const auto& n : again.nodes) h2.insert(PathHash{}(n));
        CHECK(h2 == hashes);
    }
}

TEST_CASE("highest_path raises to the unique dominant path") {
    const auto a1 = builtin_root_system("A1");
    const auto dom = straight_path(ZWeight{3});
    CHECK(highest_path(a1, dom) == std::pair<Path, std::vector<int>>{dom, {}});

    const auto mid = Path::make(1, {{Rat(-1)}, {Rat(1)}});
    const auto [top, word] = highest_path(a1, mid);
    CHECK(top == straight_path(ZWeight{2}));
    CHECK(word == std::vector<int>{0});

    const auto a2 = builtin_root_system("A2");
    testing::PathSampler sampler(a2, 31);
    for (int t = 0; t < 50; ++t) {
        const auto [h, w] = highest_path(a2, sampler.random_integral());
        CHECK(is_dominant(endpoint(h)));
        CHECK(is_dominant_path(h));
    }
}

TEST_CASE("dominant path detection is a vertex check") {
    CHECK(is_dominant_path(straight_path(ZWeight{2, 0})));
    CHECK(is_dominant_path(empty_path(2)));
    CHECK_FALSE(is_dominant_path(straight_path(ZWeight{-1})));
    // dominant corners suffice even when a segment is not dominant
    CHECK(is_dominant_path(Path::make(2, {{Rat(0), Rat(2)}, {Rat(1), Rat(-1)}})));
    CHECK_FALSE(is_dominant_path(Path::make(2, {{Rat(0), Rat(2)}, {Rat(1), Rat(-3)}})));
}

TEST_CASE("tensor decomposition against independent oracles") {
    const auto a1 = builtin_root_system("A1");
    CHECK(decompose_tensor(a1, straight_path(ZWeight{1}), straight_path(ZWeight{1})).components ==
          testing::clebsch_gordan(1, 1));
    for (long a = 0; a <= 4; ++a)
        for (long b = 0; b <= 4; ++b)
            CHECK(decompose_tensor(a1, straight_path(ZWeight{a}), straight_path(ZWeight{b})).components ==
                  testing::clebsch_gordan(a, b));

    const auto a2 = builtin_root_system("A2");
    CHECK(decompose_tensor(a2, straight_path(ZWeight{1, 0}), straight_path(ZWeight{0, 1})).components ==
          WeightMultiset{{{0, 0}, 1}, {{1, 1}, 1}});

    const auto g2 = builtin_root_system("G2");
    const auto d = decompose_tensor(g2, straight_path(ZWeight{0, 2}), straight_path(ZWeight{2, 2}));
    CHECK(d.components.at(ZWeight{1, 1}) >= 1);

    CHECK_THROWS_AS(decompose_tensor(a1, straight_path(ZWeight{-1}), straight_path(ZWeight{1})),
                    NotDominant);
}

TEST_CASE("tensor decomposition is independent of the dominant path shape") {
    const auto a2 = builtin_root_system("A2");
    const Path bent = concat(straight_path(ZWeight{0, 1}), straight_path(ZWeight{1, 1}));
    REQUIRE(is_dominant_path(bent));
    REQUIRE(endpoint(bent) == qw_of(ZWeight{1, 2}));
    const auto via_bent = decompose_tensor(a2, straight_path(ZWeight{2, 1}), bent);
    const auto via_straight =
        decompose_tensor(a2, straight_path(ZWeight{2, 1}), straight_path(ZWeight{1, 2}));
    CHECK(via_bent.components == via_straight.components);
}

TEST_CASE("limits truncate and are reported") {
    const auto aff = builtin_root_system("A1~");
    CrystalLimits lim;
    lim.max_nodes = 30;
    const auto b = generate_crystal(aff, straight_path(ZWeight{1, 0}), lim);
    CHECK(b.truncated);
    CHECK(b.size() <= 30);
    CHECK(character(b).truncated);

    CrystalLimits depth;
    depth.max_depth = 2;
    const auto shallow = generate_crystal(aff, straight_path(ZWeight{1, 0}), depth);
    CHECK(shallow.truncated);

    CrystalLimits height;
    height.weight_height_bound = 4;
    const auto bounded = generate_crystal(aff, straight_path(ZWeight{1, 0}), height);
    CHECK(bounded.truncated);
    CHECK(bounded.size() > 1);
}

TEST_CASE("crystal edges are consistent with the operators") {
    const auto a2 = builtin_root_system("A2");
    const auto b = generate_crystal(a2, straight_path(ZWeight{2, 1}));
    for (const auto& e : b.edges) {
        const auto f = lower(a2, b.node(e.src), e.alpha);
        REQUIRE(f);
        CHECK(*f == b.node(e.dst));
        const auto back = raise(a2, b.node(e.dst), e.alpha);
        REQUIRE(back);
        CHECK(*back == b.node(e.src));
    }
}

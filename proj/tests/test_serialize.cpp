#include "littelmann/serialize.hpp"

#include "doctest.h"
#include "helpers.hpp"
#include "littelmann/errors.hpp"

using namespace littelmann;
using nlohmann::json;

TEST_CASE("path JSON round trip") {
    const Path p = Path::make(2, {{Rat(1), Rat(0)}, {rat(-1, 2), Rat(1)}});
    const json j = path_to_json(p);
    CHECK(j.dump() == R"([["1","0"],["-1/2","1"]])");
    CHECK(path_from_json(j) == p);
    CHECK(path_from_json(json::parse(R"([[1,0],["-1/2",1]])")) == p);  // integers accepted

    const auto a2 = builtin_root_system("A2");
    testing::PathSampler sampler(a2, 37);
    for (int t = 0; t < 50; ++t) {
        const Path q = sampler.random_rational();
        CHECK(path_from_json(path_to_json(q), 2) == q);
    }

    CHECK_THROWS_AS(path_from_json(json::parse(R"([["1","0"],["1"]])")), RankMismatch);
    CHECK_THROWS_AS(path_from_json(json::parse(R"([["1/0"]])")), std::invalid_argument);
    CHECK_THROWS_AS(path_from_json(json::parse("[]")), Error);
    CHECK(path_from_json(json::parse("[]"), 2).is_empty());
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3") == Rat(3));
    CHECK(parse_rational("-3/6") == rat(-1, 2));
    CHECK(rat_str(parse_rational("4/2")) == "2");
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
}

TEST_CASE("root system from JSON") {
    const auto rs = root_system_from_json(json::parse(R"({"cartan": [[2,-1],[-3,2]]})"));
    CHECK(rs.name == "G2");
    CHECK(rs.finite_type);
    const auto named = root_system_from_json(json::parse(R"({"name":"my","cartan": [[2]]})"));
    CHECK(named.name == "my");
    CHECK_THROWS_AS(root_system_from_json(json::parse(R"({"cartan": [[2,1],[1,2]]})")), NotGCM);
    CHECK_THROWS_AS(root_system_from_json(json::parse(R"({"x": 1})")), Error);
}

TEST_CASE("multiset exports") {
    WeightMultiset m{{{0, 0}, 1}, {{1, 1}, 2}};
    CHECK(multiset_to_tsv(m) == "0,0\t1\n1,1\t2\n");
    const json j = multiset_to_json(m);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["weight"] == json::array({0, 0}));
    CHECK(j[1]["multiplicity"] == 2);
}

TEST_CASE("crystal DOT export is stable") {
    const auto a2 = builtin_root_system("A2");
    const auto b = generate_crystal(a2, straight_path(ZWeight{1, 0}));
    CHECK(crystal_to_dot(b) ==
          "digraph crystal {\n"
          "  n0 [label=\"1,0\"];\n"
          "  n1 [label=\"-1,1\"];\n"
          "  n2 [label=\"0,-1\"];\n"
          "  n0 -> n1 [label=\"1\"];\n"
          "  n1 -> n2 [label=\"2\"];\n"
          "}\n");
    const json j = crystal_to_json(b);
    CHECK(j["nodes"].size() == 3);
    CHECK(j["edges"].size() == 2);
    CHECK(j["truncated"] == false);
}

TEST_CASE("weyl words serialize 1-based") {
    const auto a2 = builtin_root_system("A2");
    const auto w = reduce_word(a2, {0, 1, 0});
    CHECK(weyl_to_json(w).dump() == "[1,2,1]");
    CHECK(word_from_string("1.2.1") == std::vector<int>{0, 1, 0});
    CHECK(word_from_string("").empty());
    CHECK_THROWS_AS(word_from_string("0"), Error);
    CHECK_THROWS_AS(word_from_string("a"), std::exception);
}

TEST_CASE("criterion reports state their scope") {
    const auto a2 = builtin_root_system("A2");
    const auto complete = satisfies_criterion(straight_path(ZWeight{1, 0}), positive_real_roots(a2));
    CHECK(criterion_report_to_json(complete)["scope"] == "all positive real roots");

    const auto aff = builtin_root_system("A1~");
    const auto partial =
        satisfies_criterion(straight_path(ZWeight{1, 0}), positive_real_roots(aff, 7));
    const json j = criterion_report_to_json(partial);
    CHECK(j["scope"] == "positive real roots of height <= 7");
    CHECK(j["roots_complete"] == false);
    CHECK(j["height_cutoff"] == 7);
}

TEST_CASE("witness JSON carries the full instance") {
    const auto a2 = builtin_root_system("A2");
    PRVInstance inst;
    inst.mu = {1, 1};
    inst.nu = {1, 1};
    inst.v = weyl_identity();
    inst.w = weyl_identity();
    inst.betas = {a2.simple_real_root(0)};
    inst.ks = {1};
    inst.kase = PRVCase::VSide;
    const auto wit = build_witness(a2, inst);
    const json j = witness_to_json(wit);
    CHECK(j["lambda"] == json::array({0, 3}));  // mu + nu - alpha_1
    CHECK(j["instance"]["case"] == "v-side");
    CHECK(j["instance"]["ks"] == json::array({1}));
    CHECK(j["criterion"]["passed"] == true);
    CHECK(j["oracle_confirmed"].is_null());
    CHECK(j["reduced"] == false);
    CHECK(path_from_json(j["path"], 2) == wit.witness_path);
}

#include "littelmann/prv.hpp"

#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "littelmann/errors.hpp"
#include "littelmann/oracle.hpp"
#include "littelmann/rootops.hpp"

using namespace littelmann;

TEST_CASE("k = 0 gives the classic PRV witness with one dominant corner") {
    const auto a2 = builtin_root_system("A2");
    PRVInstance inst;
    inst.mu = {1, 1};
    inst.nu = {0, 1};
    inst.v = weyl_identity();
    inst.w = reduce_word(a2, {1});
    inst.betas = {a2.simple_real_root(0)};
    inst.ks = {0};
    inst.kase = PRVCase::VSide;

    const auto wit = build_witness(a2, inst);
    const ZWeight xi = weyl_apply(a2, inst.w, inst.nu);
    REQUIRE(xi == ZWeight{1, -1});
    CHECK(wit.witness_path == concat(straight_path(inst.mu), straight_path(xi)));
    CHECK(wit.criterion.passed);
    CHECK(wit.lambda == add(inst.mu, xi));
    CHECK_FALSE(wit.reduced);

    for (const auto mode : {VerifyMode::Criterion, VerifyMode::BruteForce, VerifyMode::Oracle})
        CHECK_NOTHROW(verify_witness(a2, wit, mode));
}

TEST_CASE("instance validation") {
    const auto a2 = builtin_root_system("A2");
    PRVInstance inst;
    inst.mu = {2, 0};
    inst.nu = {0, 2};
    inst.v = weyl_identity();
    inst.w = weyl_identity();
    inst.betas = {a2.simple_real_root(0)};
    inst.kase = PRVCase::VSide;

    inst.ks = {99};  // bound is min(<mu,a1>, <nu,a1>) = min(2, 0) = 0
    CHECK_THROWS_WITH_AS(validate_instance(a2, inst),
                         doctest::Contains("min(<v mu, beta^vee>, <w nu, beta^vee>) = 0"), CaseInvalid);
    inst.ks = {-1};
    CHECK_THROWS_AS(validate_instance(a2, inst), CaseInvalid);

    inst.ks = {0};
    inst.mu = {-1, 0};
    CHECK_THROWS_AS(validate_instance(a2, inst), NotDominant);
    inst.mu = {2, 0};

    // non-orthogonal family
    PRVInstance multi(inst);
    multi.betas = {a2.simple_real_root(0), a2.simple_real_root(1)};
    multi.ks = {0, 0};
    CHECK_THROWS_AS(validate_instance(a2, multi), CaseInvalid);

    // v-side demands v^{-1} beta simple
    PRVInstance bad(inst);
    RealRoot theta;
    theta.root_coords = {1, 1};
    theta.coroot_coords = {1, 1};
    bad.betas = {theta};
    bad.ks = {0};
    CHECK_THROWS_AS(validate_instance(a2, bad), CaseInvalid);
}

TEST_CASE("the G2 witness for lambda = omega1 + omega2") {
    const auto g2 = builtin_root_system("G2");
    const ZWeight mu{0, 2}, nu{2, 2};
    const RealRoot beta = [&] {
        for (const auto& r : positive_real_roots(g2).roots)
            if (r.root_coords == std::vector<long>{3, 1}) return r;
        throw Error("missing root");
    }();

    // search W x W for pairs realizing v^{-1} w nu = -8 omega1 + 2 omega2
    // with v^{-1} beta simple
    std::vector<std::pair<WeylElement, WeylElement>> hits;
    for (const auto& v : weyl_group_elements(g2)) {
        const auto vi = weyl_inverse(g2, v);
        const auto vib = weyl_apply(g2, vi, beta);
        if (!(vib.positive && vib.root_coords == std::vector<long>{0, 1})) continue;
        for (const auto& w : weyl_group_elements(g2))
            if (weyl_apply(g2, weyl_multiply(g2, vi, w), nu) == ZWeight{-8, 2}) hits.emplace_back(v, w);
    }
    REQUIRE_FALSE(hits.empty());
    // pinned pair from the recorded search
    const auto v = reduce_word(g2, {1, 0, 1, 0});
    const auto w = reduce_word(g2, {0});
    CHECK(std::count_if(hits.begin(), hits.end(), [&](const auto& h) { return h.first == v && h.second == w; }) == 1);

    PRVInstance inst{mu, nu, v, w, {beta}, {1}, PRVCase::VSide};
    auto wit = build_witness(g2, inst);
    CHECK(wit.lambda == ZWeight{1, 1});
    CHECK(wit.witness_path ==
          Path::make(2, {{Rat(0), Rat(2)}, {Rat(-1), Rat(-1)}, {Rat(-4), Rat(1)}}));
    CHECK(wit.criterion.passed);
    CHECK(wit.criterion.roots_complete);
    CHECK(wit.criterion.checked_roots == 6);

    for (const auto mode : {VerifyMode::Criterion, VerifyMode::BruteForce, VerifyMode::Oracle})
        CHECK_NOTHROW(wit = verify_witness(g2, wit, mode));
    CHECK(wit.oracle_confirmed == true);
}

TEST_CASE("case (i) reduction") {
    const auto a2 = builtin_root_system("A2");
    const ZWeight mu{2, 1}, nu{1, 2};
    const RealRoot beta = a2.simple_real_root(0);

    SUBCASE("k at the upper bound reduces to k' = 0") {
        const long l = pairing(nu, beta);  // w = id
        REQUIRE(l == 1);
        PRVInstance inst{mu, nu, weyl_identity(), weyl_identity(), {beta}, {l}, PRVCase::SimpleBeta};
        const auto red = reduce_case_i(a2, inst);
        CHECK(red.kase == PRVCase::VSide);
        CHECK(red.ks == std::vector<long>{0});
        // lambda' of the reduced instance is the original mu
        CHECK(prv_lambda(a2, red) == mu);
    }

    SUBCASE("reduced instance builds and the oracle confirms the original component") {
        PRVInstance inst{mu, nu, weyl_identity(), weyl_identity(), {beta}, {1}, PRVCase::SimpleBeta};
        const ZWeight lambda = prv_lambda(a2, inst);
        REQUIRE(lambda == ZWeight{1, 4});
        auto wit = build_witness(a2, inst);
        CHECK(wit.reduced);
        CHECK(wit.lambda == lambda);
        CHECK(wit.effective_lambda == mu);
        CHECK(wit.criterion.passed);
        CHECK_NOTHROW(verify_witness(a2, wit, VerifyMode::BruteForce));
        CHECK_NOTHROW(wit = verify_witness(a2, wit, VerifyMode::Oracle));
        CHECK(tensor_decompose_oracle(a2, mu, nu).at(lambda) >= 1);
    }

    SUBCASE("errors") {
        RealRoot theta;
        theta.root_coords = {1, 1};
        theta.coroot_coords = {1, 1};
        PRVInstance inst{mu, nu, weyl_identity(), weyl_identity(), {theta}, {0}, PRVCase::SimpleBeta};
        CHECK_THROWS_AS(reduce_case_i(a2, inst), BetaNotSimple);
        const auto aff = builtin_root_system("A1~");
        PRVInstance bad{{1, 0}, {1, 0}, weyl_identity(), weyl_identity(),
                        {aff.simple_real_root(0)}, {0}, PRVCase::SimpleBeta};
        CHECK_THROWS_AS(reduce_case_i(aff, bad), NotFiniteType);
    }
}

TEST_CASE("w-side witnesses swap the tensor factors") {
    const auto a2 = builtin_root_system("A2");
    RealRoot theta;  // alpha_1 + alpha_2; only s_1 theta is simple
    theta.root_coords = {1, 1};
    theta.coroot_coords = {1, 1};
    PRVInstance inst{{2, 1}, {1, 2}, weyl_identity(), reduce_word(a2, {0}), {theta}, {1},
                     PRVCase::WSide};
    validate_instance(a2, inst);
    REQUIRE(prv_lambda(a2, inst) == ZWeight{0, 3});

    auto wit = build_witness(a2, inst);
    CHECK(wit.lambda == ZWeight{0, 3});
    CHECK(wit.effective.mu == inst.nu);  // roles swapped into a v-side build
    CHECK(wit.effective.v == inst.w);
    CHECK(endpoint(wit.witness_path) ==
          weyl_apply(a2, weyl_inverse(a2, inst.w), qw_of(wit.lambda)));
    CHECK(wit.criterion.passed);
    for (const auto mode : {VerifyMode::Criterion, VerifyMode::BruteForce, VerifyMode::Oracle})
        CHECK_NOTHROW(wit = verify_witness(a2, wit, mode));
}

TEST_CASE("case (i) reduction tolerates v^{-1} beta negative") {
    const auto a2 = builtin_root_system("A2");
    // v = s_1 sends beta = alpha_1 to a negative root; bounds force k = 0
    PRVInstance inst{{0, 2}, {1, 1}, reduce_word(a2, {0}), weyl_identity(),
                     {a2.simple_real_root(0)}, {0}, PRVCase::SimpleBeta};
    validate_instance(a2, inst);
    const ZWeight lambda = prv_lambda(a2, inst);
    REQUIRE(lambda == ZWeight{1, 3});

    const auto red = reduce_case_i(a2, inst);
    CHECK_FALSE(red.betas[0].positive);
    CHECK(red.ks == std::vector<long>{1});

    auto wit = build_witness(a2, inst);
    CHECK(wit.reduced);
    CHECK(wit.lambda == lambda);
    CHECK(wit.criterion.passed);
    for (const auto mode : {VerifyMode::Criterion, VerifyMode::BruteForce, VerifyMode::Oracle})
        CHECK_NOTHROW(wit = verify_witness(a2, wit, mode));
}

TEST_CASE("orthogonal pair in A3: closed form equals iterated operators") {
    const auto a3 = builtin_root_system("A3");
    // alpha_1 and alpha_3 are orthogonal
    REQUIRE(pairing(a3, a3.simple_real_root(0), a3.simple_real_root(2)) == 0);
    const ZWeight mu{1, 0, 1}, nu{2, 1, 2};
    PRVInstance inst{mu, nu, weyl_identity(), weyl_identity(),
                     {a3.simple_real_root(0), a3.simple_real_root(2)}, {1, 1}, PRVCase::VSide};
    const auto wit = build_witness(a3, inst);

    // independent route in test code: iterate the operators directly
    const ZWeight xi = nu;  // v = w = id
    auto lowered = lower_k(a3, straight_path(xi), 2, 1);
    REQUIRE(lowered);
    lowered = lower_k(a3, *lowered, 0, 1);
    REQUIRE(lowered);
    CHECK(wit.witness_path == concat(straight_path(mu), *lowered));

    // operators at orthogonal simple roots commute
    auto other_order = lower_k(a3, straight_path(xi), 0, 1);
    REQUIRE(other_order);
    other_order = lower_k(a3, *other_order, 2, 1);
    REQUIRE(other_order);
    CHECK(*other_order == *lowered);

    // breakpoints against the closed form: with a_1 = a_2 = 1/2 the inner
    // corner of the lowered part is theta_1 = a_1 s_{alpha'}s_{alpha}xi,
    // shifted by mu.
    const auto sums = partial_sums(wit.witness_path);
    const long l1 = xi[0], l2 = xi[2];
    REQUIRE(l1 == 2);
    REQUIRE(l2 == 2);
    QWeight theta1 = qw_of(xi);
    const ZWeight a1w = a3.simple_root(0), a3w = a3.simple_root(2);
    for (std::size_t i = 0; i < 3; ++i) theta1[i] -= Rat(l1) * a1w[i] + Rat(l2) * a3w[i];
    theta1 = scale(rat(1, 2), theta1);
    REQUIRE(theta1 == QWeight{Rat(-1), rat(5, 2), Rat(-1)});
    bool found = false;
    for (const auto& s : sums)
        if (s == add(qw_of(mu), theta1)) found = true;
    CHECK(found);

    CHECK(wit.criterion.passed);
    CHECK_NOTHROW(verify_witness(a3, wit, VerifyMode::Oracle));
}

TEST_CASE("orthogonal families reach components single roots cannot") {
    const auto a3 = builtin_root_system("A3");
    const ZWeight mu{2, 0, 2}, nu{2, 0, 2};
    auto lambdas = [](const std::vector<PRVWitness>& ws) {
        std::vector<ZWeight> out;
        for (const auto& w : ws) out.push_back(w.lambda);
        return out;
    };
    const auto single = lambdas(enumerate_prv(a3, mu, nu));
    EnumerateOptions opts;
    opts.multi = true;
    opts.max_p = 3;
    opts.check_oracle = true;
    const auto multi_ws = enumerate_prv(a3, mu, nu, opts);
    const auto multi = lambdas(multi_ws);
    CHECK(std::includes(multi.begin(), multi.end(), single.begin(), single.end()));
    CHECK(multi.size() == single.size() + 2);
    // the family-only components, with their witnesses oracle-confirmed
    for (const ZWeight extra : {ZWeight{0, 2, 0}, ZWeight{2, 2, 2}}) {
        CHECK(std::find(single.begin(), single.end(), extra) == single.end());
        const auto it = std::find_if(multi_ws.begin(), multi_ws.end(),
                                     [&](const PRVWitness& w) { return w.lambda == extra; });
        REQUIRE(it != multi_ws.end());
        CHECK(it->instance.betas.size() == 2);
        CHECK(it->oracle_confirmed == true);
        CHECK(it->criterion.passed);
    }
}

TEST_CASE("rank-1 enumeration recovers the full Clebsch-Gordan support") {
    const auto a1 = builtin_root_system("A1");
    const auto witnesses = enumerate_prv(a1, ZWeight{2}, ZWeight{1});
    std::vector<ZWeight> lambdas;
    for (const auto& w : witnesses) lambdas.push_back(w.lambda);
    CHECK(lambdas == std::vector<ZWeight>{{1}, {3}});
}

TEST_CASE("A2 enumeration: oracle containment, strictness over classic, lattice") {
    const auto a2 = builtin_root_system("A2");
    const ZWeight mu{7, 3}, nu{1, 3};
    EnumerateOptions opts;
    opts.check_oracle = true;
    const auto witnesses = enumerate_prv(a2, mu, nu, opts);
    REQUIRE_FALSE(witnesses.empty());

    const auto oracle = tensor_decompose_oracle(a2, mu, nu);
    for (const auto& wit : witnesses) {
        CHECK(wit.criterion.passed);
        CHECK(wit.oracle_confirmed == true);
        CHECK(oracle.count(wit.lambda) == 1);
        // lambda lies in mu + nu + root lattice
        const long d1 = add(mu, nu)[0] - wit.lambda[0], d2 = add(mu, nu)[1] - wit.lambda[1];
        CHECK((2 * d1 + d2) % 3 == 0);
        CHECK((d1 + 2 * d2) % 3 == 0);
    }

    const auto classic = classic_prv_set(a2, mu, nu);
    std::vector<ZWeight> lambdas;
    for (const auto& w : witnesses) lambdas.push_back(w.lambda);
    CHECK(std::includes(lambdas.begin(), lambdas.end(), classic.begin(), classic.end()));
    CHECK(lambdas.size() > classic.size());
}

TEST_CASE("enumeration is deterministic and --jobs does not change it") {
    const auto b2 = builtin_root_system("B2");
    EnumerateOptions serial, parallel;
    parallel.jobs = 4;
    const auto a = enumerate_prv(b2, ZWeight{1, 1}, ZWeight{1, 1}, serial);
    const auto b = enumerate_prv(b2, ZWeight{1, 1}, ZWeight{1, 1}, parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].lambda == b[i].lambda);
        CHECK(a[i].witness_path == b[i].witness_path);
    }
}

TEST_CASE("verification failures carry the mode") {
    const auto a2 = builtin_root_system("A2");
    PRVInstance inst;
    inst.mu = {1, 1};
    inst.nu = {1, 1};
    inst.v = weyl_identity();
    inst.w = weyl_identity();
    inst.betas = {a2.simple_real_root(0)};
    inst.ks = {1};
    inst.kase = PRVCase::VSide;
    auto wit = build_witness(a2, inst);
    wit.lambda = {9, 9};  // not a component
    CHECK_THROWS_WITH_AS(verify_witness(a2, wit, VerifyMode::Oracle), doctest::Contains("oracle"),
                         VerificationFailed);
}

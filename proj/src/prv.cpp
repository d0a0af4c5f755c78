#include "littelmann/prv.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <future>
#include <set>

#include "littelmann/errors.hpp"
#include "littelmann/oracle.hpp"
#include "littelmann/rootops.hpp"

namespace littelmann {

std::string to_string(PRVCase c) {
    switch (c) {
        case PRVCase::SimpleBeta: return "simple-beta";
        case PRVCase::VSide: return "v-side";
        case PRVCase::WSide: return "w-side";
    }
    return "?";
}

namespace {

bool is_simple_positive(const RealRoot& r) {
    int ones = 0;
    for (long b : r.root_coords) {
        if (b == 1)
            ++ones;
        else if (b != 0)
            return false;
    }
    return ones == 1;
}

int simple_index(const RealRoot& r) {
    for (std::size_t j = 0; j < r.root_coords.size(); ++j)
        if (r.root_coords[j] == 1) return static_cast<int>(j);
    throw Error("internal: not a simple root");
}

}  // namespace

void validate_instance(const RootSystem& rs, const PRVInstance& inst) {
    const auto n = static_cast<std::size_t>(rs.rank);
    check_rank(inst.mu.size(), n);
    check_rank(inst.nu.size(), n);
    if (!is_dominant(inst.mu)) throw NotDominant("mu is not dominant");
    if (!is_dominant(inst.nu)) throw NotDominant("nu is not dominant");
    if (inst.betas.empty()) throw CaseInvalid("no roots given");
    if (inst.betas.size() != inst.ks.size()) throw CaseInvalid("one k per root required");
    for (const auto& beta : inst.betas) {
        check_rank(beta.root_coords.size(), n);
        check_rank(beta.coroot_coords.size(), n);
        if (pairing(root_to_weight(rs, beta), beta) != 2)
            throw CaseInvalid("root/coroot coordinates are inconsistent: <beta, beta^vee> != 2");
    }
    for (std::size_t i = 0; i < inst.betas.size(); ++i)
        for (std::size_t j = i + 1; j < inst.betas.size(); ++j)
            if (pairing(rs, inst.betas[i], inst.betas[j]) != 0)
                throw CaseInvalid("roots must be pairwise orthogonal");

    switch (inst.kase) {
        case PRVCase::SimpleBeta:
            if (!rs.finite_type) throw CaseInvalid("simple-beta case requires finite type");
            for (const auto& beta : inst.betas)
                if (!is_simple_positive(beta)) throw BetaNotSimple("beta is not a simple root");
            break;
        case PRVCase::VSide: {
            const WeylElement vi = weyl_inverse(rs, inst.v);
            for (const auto& beta : inst.betas)
                if (!is_simple_positive(weyl_apply(rs, vi, beta)))
                    throw CaseInvalid("v^{-1} beta is not a simple root");
            break;
        }
        case PRVCase::WSide: {
            const WeylElement wi = weyl_inverse(rs, inst.w);
            for (const auto& beta : inst.betas)
                if (!is_simple_positive(weyl_apply(rs, wi, beta)))
                    throw CaseInvalid("w^{-1} beta is not a simple root");
            break;
        }
    }

    const ZWeight vmu = weyl_apply(rs, inst.v, inst.mu);
    const ZWeight wnu = weyl_apply(rs, inst.w, inst.nu);
    for (std::size_t i = 0; i < inst.betas.size(); ++i) {
        const long bound = std::min(pairing(vmu, inst.betas[i]), pairing(wnu, inst.betas[i]));
        if (inst.ks[i] < 0 || inst.ks[i] > bound)
            throw CaseInvalid("k=" + std::to_string(inst.ks[i]) + " outside 0 <= k <= min(<v mu, beta^vee>, <w nu, beta^vee>) = " +
                              std::to_string(bound));
    }
}

ZWeight prv_lambda(const RootSystem& rs, const PRVInstance& inst) {
    ZWeight lam = add(weyl_apply(rs, inst.v, inst.mu), weyl_apply(rs, inst.w, inst.nu));
    for (std::size_t i = 0; i < inst.betas.size(); ++i) {
        const ZWeight bw = root_to_weight(rs, inst.betas[i]);
        for (std::size_t k = 0; k < lam.size(); ++k) lam[k] -= inst.ks[i] * bw[k];
    }
    return lam;
}

PRVInstance reduce_case_i(const RootSystem& rs, const PRVInstance& inst) {
    if (!rs.finite_type) throw NotFiniteType("case (i) reduction requires finite type");
    for (const auto& beta : inst.betas)
        if (!is_simple_positive(beta)) throw BetaNotSimple("case (i) reduction needs simple roots");
    const ZWeight lambda = prv_lambda(rs, inst);
    if (!is_dominant(lambda)) throw LambdaNotDominant("lambda " + to_string(lambda) + " is not dominant");

    const WeylElement w0 = longest_element(rs);
    const WeylElement vi = weyl_inverse(rs, inst.v);
    std::vector<int> refl_word;
    for (const auto& beta : inst.betas) refl_word.push_back(simple_index(beta));
    // w' = v^{-1} (prod_i s_{beta_i}) w w0
    WeylElement wp = reduce_word(rs, refl_word);
    wp = weyl_multiply(rs, vi, wp);
    wp = weyl_multiply(rs, wp, inst.w);
    wp = weyl_multiply(rs, wp, w0);

    PRVInstance out;
    out.mu = lambda;
    out.nu = negate(weyl_apply(rs, w0, inst.nu));
    out.v = vi;
    out.w = wp;
    out.kase = PRVCase::VSide;
    const ZWeight wnu = weyl_apply(rs, inst.w, inst.nu);
    for (std::size_t i = 0; i < inst.betas.size(); ++i) {
        out.betas.push_back(weyl_apply(rs, vi, inst.betas[i]));
        out.ks.push_back(pairing(wnu, inst.betas[i]) - inst.ks[i]);
    }
    validate_instance(rs, out);  // re-verifies the k' bounds
    return out;
}

namespace {

PRVWitness build_witness_vside(const RootSystem& rs, const PRVInstance& inst,
                               std::optional<long> root_height_cutoff) {
    const ZWeight lambda = prv_lambda(rs, inst);
    if (!is_dominant(lambda)) throw LambdaNotDominant("lambda " + to_string(lambda) + " is not dominant");

    const WeylElement vi = weyl_inverse(rs, inst.v);
    const ZWeight xi = weyl_apply(rs, weyl_multiply(rs, vi, inst.w), inst.nu);  // v^{-1} w nu

    struct Factor {
        Rat ratio;
        int alpha;
        long l;
        long k;
    };
    std::vector<Factor> factors;
    for (std::size_t i = 0; i < inst.betas.size(); ++i) {
        if (inst.ks[i] == 0) continue;  // f^0 elided
        const int alpha = simple_index(weyl_apply(rs, vi, inst.betas[i]));
        const long l = xi[static_cast<std::size_t>(alpha)];
        if (l == 0) throw ZeroString("string length l_i = 0 with k_i > 0");
        factors.push_back(Factor{rat(inst.ks[i], l), alpha, l, inst.ks[i]});
    }
    std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) {
        return a.ratio < b.ratio || (a.ratio == b.ratio && a.alpha < b.alpha);
    });

    // pi_{(a_1-a_0) s_{alpha_p}..s_{alpha_1} xi} * ... * pi_{(1-a_p) xi}
    std::vector<QWeight> segs;
    Rat prev(0);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        ZWeight sigma(xi);
        for (std::size_t j = i; j < factors.size(); ++j) {
            const ZWeight aw = rs.simple_root(factors[j].alpha);
            for (std::size_t k = 0; k < sigma.size(); ++k) sigma[k] -= factors[j].l * aw[k];
        }
        segs.push_back(scale(factors[i].ratio - prev, qw_of(sigma)));
        prev = factors[i].ratio;
    }
    segs.push_back(scale(Rat(1) - prev, qw_of(xi)));
    const Path lowered = Path::make(rs.rank, std::move(segs));

    // Independent route: literal iterated application of the operators.
    std::optional<Path> iterated(straight_path(xi));
    for (std::size_t i = inst.betas.size(); i-- > 0;) {
        if (inst.ks[i] == 0) continue;
        const int alpha = simple_index(weyl_apply(rs, vi, inst.betas[i]));
        iterated = lower_k(rs, *iterated, alpha, inst.ks[i]);
        if (!iterated) throw Error("internal: operator power undefined on straight path");
    }
    if (!(*iterated == lowered))
        throw Error("internal: closed-form witness disagrees with iterated root operators");

    PRVWitness wit;
    wit.instance = inst;
    wit.effective = inst;
    wit.lambda = lambda;
    wit.effective_lambda = lambda;
    wit.witness_path = concat(straight_path(inst.mu), lowered);

    const QWeight expected_end = weyl_apply(rs, vi, qw_of(lambda));
    if (!(endpoint(wit.witness_path) == expected_end))
        throw Error("internal: witness endpoint is not v^{-1} lambda");

    RootSet roots;
    if (rs.finite_type) {
        roots = positive_real_roots(rs);
    } else {
        if (!root_height_cutoff)
            throw CutoffRequired("criterion check over an infinite root system needs a height cutoff");
        roots = positive_real_roots(rs, root_height_cutoff);
    }
    wit.criterion = satisfies_criterion(wit.witness_path, roots);
    if (rs.finite_type && !wit.criterion.passed)
        throw VerificationFailed("internal: constructed witness failed the criterion");
    return wit;
}

}  // namespace

PRVWitness build_witness(const RootSystem& rs, const PRVInstance& inst,
                         std::optional<long> root_height_cutoff) {
    validate_instance(rs, inst);
    switch (inst.kase) {
        case PRVCase::VSide:
            return build_witness_vside(rs, inst, root_height_cutoff);
        case PRVCase::WSide: {
            PRVInstance swapped;
            swapped.mu = inst.nu;
            swapped.nu = inst.mu;
            swapped.v = inst.w;
            swapped.w = inst.v;
            swapped.betas = inst.betas;
            swapped.ks = inst.ks;
            swapped.kase = PRVCase::VSide;
            PRVWitness wit = build_witness_vside(rs, swapped, root_height_cutoff);
            wit.instance = inst;
            return wit;
        }
        case PRVCase::SimpleBeta: {
            const ZWeight lambda = prv_lambda(rs, inst);
            if (!is_dominant(lambda)) throw LambdaNotDominant("lambda " + to_string(lambda) + " is not dominant");
            PRVWitness wit = build_witness_vside(rs, reduce_case_i(rs, inst), root_height_cutoff);
            wit.instance = inst;
            wit.reduced = true;
            wit.lambda = lambda;
            return wit;
        }
    }
    throw Error("internal: unknown case");
}

namespace {

bool witness_order(const PRVWitness& a, const PRVWitness& b) {
    if (a.lambda != b.lambda) return a.lambda < b.lambda;
    const int ca = static_cast<int>(a.instance.kase), cb = static_cast<int>(b.instance.kase);
    if (ca != cb) return ca < cb;
    auto roots_key = [](const PRVWitness& w) {
        std::vector<std::vector<long>> key;
        for (const auto& r : w.instance.betas) key.push_back(r.root_coords);
        return key;
    };
    const auto ra = roots_key(a), rb = roots_key(b);
    if (ra != rb) return ra < rb;
    if (a.instance.ks != b.instance.ks) return a.instance.ks < b.instance.ks;
    if (!(a.instance.v == b.instance.v)) return a.instance.v < b.instance.v;
    return a.instance.w < b.instance.w;
}

// Pairwise-orthogonal subsets of `pool` of size 2..max_p, DFS in index order.
void orthogonal_families(const RootSystem& rs, const std::vector<RealRoot>& pool, int max_p,
                         std::vector<std::size_t>& stack,
                         const std::function<void(const std::vector<std::size_t>&)>& emit) {
    const std::size_t start = stack.empty() ? 0 : stack.back() + 1;
    for (std::size_t i = start; i < pool.size(); ++i) {
        bool ortho = true;
        for (std::size_t j : stack)
            if (pairing(rs, pool[j], pool[i]) != 0) {
                ortho = false;
                break;
            }
        if (!ortho) continue;
        stack.push_back(i);
        if (stack.size() >= 2) emit(stack);
        if (static_cast<int>(stack.size()) < max_p) orthogonal_families(rs, pool, max_p, stack, emit);
        stack.pop_back();
    }
}

}  // namespace

std::vector<PRVWitness> enumerate_prv(const RootSystem& rs, const ZWeight& mu, const ZWeight& nu,
                                      const EnumerateOptions& options) {
    if (!rs.finite_type) throw NotFiniteType("PRV enumeration requires finite type");
    if (!is_dominant(mu)) throw NotDominant("mu is not dominant");
    if (!is_dominant(nu)) throw NotDominant("nu is not dominant");

    const auto group = weyl_group_elements(rs);
    const auto roots = positive_real_roots(rs).roots;

    struct PairTask {
        WeylElement v, w;
        ZWeight vmu, wnu;
        WeylElement vi, wi;
    };
    std::vector<PairTask> tasks;
    tasks.reserve(group.size() * group.size());
    for (const auto& v : group)
        for (const auto& w : group)
            tasks.push_back(PairTask{v, w, weyl_apply(rs, v, mu), weyl_apply(rs, w, nu),
                                     weyl_inverse(rs, v), weyl_inverse(rs, w)});

    auto run_range = [&](std::size_t lo, std::size_t hi) {
        std::vector<PRVWitness> local;
        for (std::size_t t = lo; t < hi; ++t) {
            const PairTask& task = tasks[t];
            auto emit_single = [&](const RealRoot& beta, PRVCase kase) {
                const long bound = std::min(pairing(task.vmu, beta), pairing(task.wnu, beta));
                for (long k = 0; k <= bound; ++k) {
                    PRVInstance inst{mu, nu, task.v, task.w, {beta}, {k}, kase};
                    if (!is_dominant(prv_lambda(rs, inst))) continue;
                    local.push_back(build_witness(rs, inst));
                }
            };
            // A root may qualify for several cases; single-beta instances
            // yield the same lambda either way, so one emission suffices,
            // but the family pools must stay independent per case.
            std::vector<RealRoot> v_pool, w_pool, s_pool;
            for (const auto& beta : roots) {
                const bool v_ok = is_simple_positive(weyl_apply(rs, task.vi, beta));
                const bool w_ok = is_simple_positive(weyl_apply(rs, task.wi, beta));
                const bool s_ok = is_simple_positive(beta);
                if (v_ok)
                    emit_single(beta, PRVCase::VSide);
                else if (w_ok)
                    emit_single(beta, PRVCase::WSide);
                else if (s_ok)
                    emit_single(beta, PRVCase::SimpleBeta);
                if (v_ok) v_pool.push_back(beta);
                if (w_ok) w_pool.push_back(beta);
                if (s_ok) s_pool.push_back(beta);
            }
            if (options.multi && options.max_p >= 2) {
                auto emit_family = [&](const std::vector<RealRoot>& pool, PRVCase kase) {
                    std::vector<std::size_t> stack;
                    orthogonal_families(rs, pool, options.max_p, stack, [&](const std::vector<std::size_t>& idx) {
                        std::vector<RealRoot> betas;
                        std::vector<long> bounds;
                        for (std::size_t i : idx) {
                            betas.push_back(pool[i]);
                            const long b = std::min(pairing(task.vmu, pool[i]), pairing(task.wnu, pool[i]));
                            if (b < 0) return;
                            bounds.push_back(b);
                        }
                        std::vector<long> ks(betas.size(), 0);
                        for (;;) {  // odometer over 0..bound_i
                            std::size_t pos = 0;
                            while (pos < ks.size() && ++ks[pos] > bounds[pos]) {
                                ks[pos] = 0;
                                ++pos;
                            }
                            if (pos == ks.size()) break;
                            PRVInstance inst{mu, nu, task.v, task.w, betas, ks, kase};
                            if (!is_dominant(prv_lambda(rs, inst))) continue;
                            local.push_back(build_witness(rs, inst));
                        }
                    });
                };
                emit_family(v_pool, PRVCase::VSide);
                emit_family(w_pool, PRVCase::WSide);
                emit_family(s_pool, PRVCase::SimpleBeta);
            }
        }
        return local;
    };

    std::vector<PRVWitness> all;
    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        all = run_range(0, tasks.size());
    } else {
        std::vector<std::future<std::vector<PRVWitness>>> futures;
        const std::size_t chunk = (tasks.size() + static_cast<std::size_t>(jobs) - 1) / static_cast<std::size_t>(jobs);
        for (std::size_t lo = 0; lo < tasks.size(); lo += chunk)
            futures.push_back(std::async(std::launch::async, run_range, lo, std::min(lo + chunk, tasks.size())));
        for (auto& f : futures) {
            auto part = f.get();
            all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        }
    }

    std::sort(all.begin(), all.end(), witness_order);
    std::vector<PRVWitness> out;
    for (auto& wit : all)
        if (out.empty() || out.back().lambda != wit.lambda) out.push_back(std::move(wit));

    if (options.check_oracle && !out.empty()) {
        const auto table = tensor_decompose_oracle(rs, mu, nu);
        for (auto& wit : out) {
            auto it = table.find(wit.lambda);
            wit.oracle_confirmed = it != table.end() && it->second >= 1;
        }
    }
    return out;
}

std::vector<ZWeight> classic_prv_set(const RootSystem& rs, const ZWeight& mu, const ZWeight& nu) {
    if (!rs.finite_type) throw NotFiniteType("classic PRV set requires finite type");
    std::set<ZWeight> out;
    const auto group = weyl_group_elements(rs);
    for (const auto& v : group) {
        const ZWeight vmu = weyl_apply(rs, v, mu);
        for (const auto& w : group) {
            const ZWeight lam = add(vmu, weyl_apply(rs, w, nu));
            if (is_dominant(lam)) out.insert(lam);
        }
    }
    return {out.begin(), out.end()};
}

PRVWitness verify_witness(const RootSystem& rs, PRVWitness wit, VerifyMode mode,
                          std::optional<long> root_height_cutoff) {
    switch (mode) {
        case VerifyMode::Criterion: {
            RootSet roots;
            if (rs.finite_type)
                roots = positive_real_roots(rs);
            else {
                const auto cutoff = root_height_cutoff ? root_height_cutoff : wit.criterion.height_cutoff;
                if (!cutoff) throw CutoffRequired("criterion verification needs a root height cutoff");
                roots = positive_real_roots(rs, cutoff);
            }
            wit.criterion = satisfies_criterion(wit.witness_path, roots);
            if (!wit.criterion.passed) throw VerificationFailed("criterion verification failed");
            return wit;
        }
        case VerifyMode::BruteForce: {
            auto [ok, w] = is_extremal(rs, wit.witness_path);
            (void)w;
            auto [dom, w2] = dominant_representative(rs, endpoint(wit.witness_path));
            (void)w2;
            if (!ok || !(dom == qw_of(wit.effective_lambda)))
                throw VerificationFailed("brute-force extremality verification failed");
            return wit;
        }
        case VerifyMode::Oracle: {
            const auto table = tensor_decompose_oracle(rs, wit.instance.mu, wit.instance.nu);
            auto it = table.find(wit.lambda);
            wit.oracle_confirmed = it != table.end() && it->second >= 1;
            if (!*wit.oracle_confirmed) throw VerificationFailed("oracle verification failed");
            return wit;
        }
    }
    throw Error("internal: unknown verification mode");
}

}  // namespace littelmann

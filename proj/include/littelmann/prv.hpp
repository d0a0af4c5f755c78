#pragma once

#include <optional>
#include <string>
#include <vector>

#include "littelmann/extremal.hpp"

namespace littelmann {

// A claimed generalized PRV component lambda = v mu + w nu - sum k_i beta_i
// of V(mu) (x) V(nu), with pairwise orthogonal beta_i and
// 0 <= k_i <= min(<v mu, beta_i^vee>, <w nu, beta_i^vee>).
//
// Case discipline:
//   VSide      every v^{-1} beta_i is simple (any symmetrizable type);
//   WSide      every w^{-1} beta_i is simple (any symmetrizable type);
//   SimpleBeta every beta_i is simple, finite type only; handled by
//              reduce_case_i, which rewrites it as a VSide instance.
enum class PRVCase { SimpleBeta, VSide, WSide };

std::string to_string(PRVCase c);

struct PRVInstance {
    ZWeight mu;
    ZWeight nu;
    WeylElement v;
    WeylElement w;
    std::vector<RealRoot> betas;
    std::vector<long> ks;
    PRVCase kase = PRVCase::VSide;
};

// Throws CaseInvalid / NotDominant / RankMismatch / ZeroString on a
// malformed instance; LambdaNotDominant when lambda fails dominance.
void validate_instance(const RootSystem& rs, const PRVInstance& inst);

ZWeight prv_lambda(const RootSystem& rs, const PRVInstance& inst);

struct PRVWitness {
    PRVInstance instance;    // as given
    PRVInstance effective;   // VSide instance the path was built for
    bool reduced = false;    // true when case (i) reduction was applied
    ZWeight lambda;          // component claimed inside V(mu) (x) V(nu)
    ZWeight effective_lambda;  // highest weight of the witness path's component
    Path witness_path;       // extremal path of weight v_eff^{-1} lambda_eff
    CriterionReport criterion;
    std::optional<bool> oracle_confirmed;
};

// Builds the witness path from the sorted closed form
//   pi_mu * pi_{a_1 s(..)xi} * ... * pi_{(1-a_p) xi},   xi = v^{-1} w nu,
// cross-checks it against iterated application of the root operators, and
// runs the criterion over the root set (complete in finite type, else up
// to root_height_cutoff, which is then required).
PRVWitness build_witness(const RootSystem& rs, const PRVInstance& inst,
                         std::optional<long> root_height_cutoff = {});

// Case (i) -> case (ii) rewrite (finite type, all beta_i simple):
//   lambda' = mu, mu' = lambda, nu' = -w0 nu, v' = v^{-1},
//   w' = v^{-1} (prod_i s_{beta_i}) w w0, beta_i' = v^{-1} beta_i,
//   k_i' = <w nu, beta_i^vee> - k_i.
PRVInstance reduce_case_i(const RootSystem& rs, const PRVInstance& inst);

struct EnumerateOptions {
    bool multi = false;   // also enumerate orthogonal families
    int max_p = 2;
    bool check_oracle = false;
    int jobs = 1;
};

// All generalized PRV components of V(mu) (x) V(nu) reachable through the
// three cases, one witness per lambda, sorted by (lambda, case, betas, ks).
// Finite type only.
std::vector<PRVWitness> enumerate_prv(const RootSystem& rs, const ZWeight& mu, const ZWeight& nu,
                                      const EnumerateOptions& options = {});

// Dominant weights vmu + wnu over W x W: the classic PRV components.
std::vector<ZWeight> classic_prv_set(const RootSystem& rs, const ZWeight& mu, const ZWeight& nu);

enum class VerifyMode { Criterion, BruteForce, Oracle };

// Re-checks the witness in the requested mode and returns it with updated
// fields; throws VerificationFailed (message names the mode) on failure.
PRVWitness verify_witness(const RootSystem& rs, PRVWitness wit, VerifyMode mode,
                          std::optional<long> root_height_cutoff = {});

}  // namespace littelmann

#pragma once

#include "littelmann/cartan.hpp"
#include "littelmann/crystal.hpp"

namespace littelmann {

// Independent finite-type character theory, used to cross-validate the
// path model. Depends only on cartan (root-system arithmetic), never on
// paths, root operators or crystals.

struct CharacterTable {
    ZWeight highest;
    WeightMultiset mults;  // every weight of V(highest), with multiplicity
    long dim = 0;
};

// Weyl dimension formula; exact. Throws NotFiniteType / NotDominant.
long weyl_dim(const RootSystem& rs, const ZWeight& lambda);

// Freudenthal's recursion, expanded over the full Weyl orbits.
CharacterTable freudenthal_multiplicities(const RootSystem& rs, const ZWeight& lambda);

// Klimyk's formula: decomposition of V(mu) (x) V(nu) into irreducibles.
WeightMultiset tensor_decompose_oracle(const RootSystem& rs, const ZWeight& mu, const ZWeight& nu);
// Same, reusing a precomputed character table for nu.
WeightMultiset tensor_decompose_oracle(const RootSystem& rs, const ZWeight& mu,
                                       const CharacterTable& nu_table);

}  // namespace littelmann

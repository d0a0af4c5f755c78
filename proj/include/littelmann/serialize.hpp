#pragma once

#include <string>

#include "json.hpp"
#include "littelmann/crystal.hpp"
#include "littelmann/prv.hpp"

namespace littelmann {

// External formats. Reflection and simple-root indices are 1-based in all
// serialized forms; weights are comma-separated fundamental coordinates;
// rationals are exact strings "p" or "p/q".

nlohmann::json path_to_json(const Path& p);
// expected_rank < 0 accepts any rank.
Path path_from_json(const nlohmann::json& j, int expected_rank = -1);

// {"name": str?, "cartan": [[int]]}
RootSystem root_system_from_json(const nlohmann::json& j);

nlohmann::json multiset_to_json(const WeightMultiset& m);
// Rows "coords TAB multiplicity", sorted by weight.
std::string multiset_to_tsv(const WeightMultiset& m);

std::string crystal_to_dot(const CrystalGraph& g);
nlohmann::json crystal_to_json(const CrystalGraph& g);

nlohmann::json real_root_to_json(const RealRoot& r);
nlohmann::json weyl_to_json(const WeylElement& w);
std::vector<int> word_from_string(const std::string& dotted);  // "1.2.1" -> {0,1,0}

nlohmann::json criterion_report_to_json(const CriterionReport& r);
nlohmann::json witness_to_json(const PRVWitness& w);

}  // namespace littelmann

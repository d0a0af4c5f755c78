#pragma once

#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "littelmann/path.hpp"

namespace littelmann {

// Weight -> multiplicity, ordered for deterministic output.
using WeightMultiset = std::map<ZWeight, long>;

struct CrystalLimits {
    std::optional<std::size_t> max_nodes;
    std::optional<int> max_depth;
    // Bound on sum_i |c_i| where the node's endpoint is
    // root_endpoint - sum c_i alpha_i (tracked along the operators).
    std::optional<long> weight_height_bound;

    bool any() const { return max_nodes || max_depth || weight_height_bound; }
};

struct CrystalEdge {
    int src;
    int alpha;
    int dst;  // f_alpha(node[src]) = node[dst]
    auto operator<=>(const CrystalEdge&) const = default;
};

// B(pi): the closure of pi under all defined e_alpha / f_alpha, within
// the given limits. Nodes are listed in deterministic BFS order.
struct CrystalGraph {
    RootSystem rs;
    std::vector<Path> nodes;
    std::vector<CrystalEdge> edges;
    int root = 0;
    bool truncated = false;
    CrystalLimits limits_used;

    const Path& node(int i) const { return nodes[static_cast<std::size_t>(i)]; }
    std::size_t size() const { return nodes.size(); }
    std::optional<int> find(const Path& p) const;

  private:
    std::unordered_map<Path, int, PathHash> index_;
    friend CrystalGraph generate_crystal(const RootSystem&, const Path&, const CrystalLimits&);
};

// Throws NotIntegral if pi is not an integral path.
CrystalGraph generate_crystal(const RootSystem& rs, const Path& pi, const CrystalLimits& limits = {});

struct CharacterResult {
    WeightMultiset mults;
    bool truncated = false;  // partial character when the crystal was truncated
};

CharacterResult character(const CrystalGraph& crystal);

// Raises eta to the unique dominant path of B(eta); returns the path and
// the word of raising indices applied, in application order. Throws
// NonTerminating if the iteration cap is exceeded.
std::pair<Path, std::vector<int>> highest_path(const RootSystem& rs, const Path& eta,
                                               long iteration_cap = 1000000);

// True iff the whole image lies in the dominant chamber (vertex check).
bool is_dominant_path(const Path& p);

struct TensorDecomposition {
    WeightMultiset components;  // dominant highest weights with multiplicity
    bool truncated = false;
};

// Decomposes V(pi(1)) (x) V(pi2(1)) by iterating eta over B(pi2) and
// keeping the eta with pi * eta dominant. Both inputs must be dominant
// integral paths.
TensorDecomposition decompose_tensor(const RootSystem& rs, const Path& pi, const Path& pi2,
                                     const CrystalLimits& limits = {});
// Same, with the second factor's crystal already generated.
TensorDecomposition decompose_tensor(const RootSystem& rs, const Path& pi,
                                     const CrystalGraph& crystal2);

}  // namespace littelmann

#include "littelmann/crystal.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "littelmann/errors.hpp"
#include "littelmann/rootops.hpp"

namespace littelmann {

std::optional<int> CrystalGraph::find(const Path& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

CrystalGraph generate_crystal(const RootSystem& rs, const Path& pi, const CrystalLimits& limits) {
    if (!is_integral(pi, rs)) throw NotIntegral("crystal generation needs an integral path");
    if (!all_integral(endpoint(pi)))
        throw NotIntegral("crystal generation needs a path ending in the weight lattice");
    CrystalGraph g;
    g.rs = rs;
    g.limits_used = limits;

    std::vector<int> depth;
    std::vector<std::vector<long>> offset;  // endpoint = root endpoint - sum offset_i alpha_i

    g.nodes.push_back(pi);
    g.index_.emplace(pi, 0);
    depth.push_back(0);
    offset.emplace_back(static_cast<std::size_t>(rs.rank), 0);

    std::map<std::pair<int, int>, int> f_edges;  // (src, alpha) -> dst
    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int cur = queue.front();
        queue.pop_front();
        if (limits.max_depth && depth[static_cast<std::size_t>(cur)] >= *limits.max_depth) {
            g.truncated = true;
            continue;
        }
        for (int alpha = 0; alpha < rs.rank; ++alpha) {
            for (const bool lowering : {true, false}) {
                // nodes[cur] is copied out: appending to g.nodes may invalidate references
                const Path src = g.nodes[static_cast<std::size_t>(cur)];
                auto next = lowering ? lower(rs, src, alpha) : raise(rs, src, alpha);
                if (!next) continue;
                std::vector<long> noff = offset[static_cast<std::size_t>(cur)];
                noff[static_cast<std::size_t>(alpha)] += lowering ? 1 : -1;
                if (limits.weight_height_bound) {
                    long h = 0;
                    for (long c : noff) h += std::abs(c);
                    if (h > *limits.weight_height_bound) {
                        g.truncated = true;
                        continue;
                    }
                }
                int tgt;
                auto it = g.index_.find(*next);
                if (it != g.index_.end()) {
                    tgt = it->second;
                } else {
                    if (limits.max_nodes && g.nodes.size() >= *limits.max_nodes) {
                        g.truncated = true;
                        continue;
                    }
                    tgt = static_cast<int>(g.nodes.size());
                    g.nodes.push_back(std::move(*next));
                    g.index_.emplace(g.nodes.back(), tgt);
                    depth.push_back(depth[static_cast<std::size_t>(cur)] + 1);
                    offset.push_back(std::move(noff));
                    queue.push_back(tgt);
                }
                if (lowering)
                    f_edges.emplace(std::make_pair(cur, alpha), tgt);
                else
                    f_edges.emplace(std::make_pair(tgt, alpha), cur);
            }
        }
    }
    g.edges.reserve(f_edges.size());
    for (const auto& [key, dst] : f_edges) g.edges.push_back(CrystalEdge{key.first, key.second, dst});
    return g;
}

CharacterResult character(const CrystalGraph& crystal) {
    CharacterResult out;
    out.truncated = crystal.truncated;
    for (const auto& node : crystal.nodes) ++out.mults[zw_of(endpoint(node))];
    return out;
}

std::pair<Path, std::vector<int>> highest_path(const RootSystem& rs, const Path& eta,
                                               long iteration_cap) {
    Path cur(eta);
    std::vector<int> word;
    long steps = 0;
    for (;;) {
        int applied = -1;
        for (int alpha = 0; alpha < rs.rank; ++alpha) {
            if (auto next = raise(rs, cur, alpha)) {
                cur = std::move(*next);
                applied = alpha;
                break;
            }
        }
        if (applied < 0) break;
        word.push_back(applied);
        if (++steps > iteration_cap)
            throw NonTerminating("raising did not terminate within " + std::to_string(iteration_cap) +
                                 " steps");
    }
    return {std::move(cur), std::move(word)};
}

bool is_dominant_path(const Path& p) {
    QWeight run(static_cast<std::size_t>(p.rank), Rat(0));
    for (const auto& seg : p.segments) {
        run = add(run, seg);
        if (!is_dominant(run)) return false;
    }
    return true;
}

TensorDecomposition decompose_tensor(const RootSystem& rs, const Path& pi, const Path& pi2,
                                     const CrystalLimits& limits) {
    if (!is_dominant_path(pi2)) throw NotDominant("second tensor factor path is not dominant");
    if (!is_integral(pi2, rs)) throw NotIntegral("second tensor factor path is not integral");
    return decompose_tensor(rs, pi, generate_crystal(rs, pi2, limits));
}

TensorDecomposition decompose_tensor(const RootSystem& rs, const Path& pi,
                                     const CrystalGraph& crystal2) {
    if (!is_dominant_path(pi)) throw NotDominant("first tensor factor path is not dominant");
    if (!is_integral(pi, rs)) throw NotIntegral("first tensor factor path is not integral");
    TensorDecomposition out;
    out.truncated = crystal2.truncated;
    const ZWeight mu = zw_of(endpoint(pi));
    const QWeight mu_q = qw_of(mu);
    for (const auto& eta : crystal2.nodes) {
        bool dominant = true;
        QWeight run(mu_q);
        for (const auto& seg : eta.segments) {
            run = add(run, seg);
            if (!is_dominant(run)) {
                dominant = false;
                break;
            }
        }
        if (!dominant) continue;
        ++out.components[add(mu, zw_of(endpoint(eta)))];
    }
    return out;
}

}  // namespace littelmann

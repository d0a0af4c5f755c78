#pragma once

#include <string>
#include <vector>

#include "littelmann/crystal.hpp"
#include "littelmann/path.hpp"

namespace littelmann {

// Static SVG renderings in the plane spanned by the two simple roots
// (finite rank-2 systems only). Grid dots mark the root lattice (resp.
// its coset through mu+nu); every marked point carries its weight in a
// data-weight attribute, so the marked sets can be read back exactly.

std::string svg_path_figure(const RootSystem& rs, const Path& p, long unit = 40);

std::string svg_decomposition_figure(const RootSystem& rs, const ZWeight& mu, const ZWeight& nu,
                                     const WeightMultiset& support,
                                     const std::vector<ZWeight>& classic,
                                     const std::vector<ZWeight>& generalized, long unit = 40);

}  // namespace littelmann

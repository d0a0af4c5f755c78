#pragma once

#include <optional>
#include <vector>

#include "littelmann/path.hpp"

namespace littelmann {

// Littelmann root operators. lower is f_alpha, raise is e_alpha; both are
// partial maps, and an empty optional means "not defined" (this is a
// normal outcome, not an error).
//
// f_alpha pi (t) = pi(t) - L(t) alpha with
//   L(t) = min{1, min_{t<=s<=1} (H_alpha(s) - m_alpha)},
// defined iff H_alpha(1) - m_alpha >= 1. e_alpha is computed through the
// duality e_alpha pi = (f_alpha pi*)*, defined iff m_alpha <= -1.

std::optional<Path> lower(const RootSystem& rs, const Path& p, int alpha);
std::optional<Path> raise(const RootSystem& rs, const Path& p, int alpha);

std::optional<Path> lower_k(const RootSystem& rs, const Path& p, int alpha, long k);
std::optional<Path> raise_k(const RootSystem& rs, const Path& p, int alpha, long k);

// Closed-form maximal powers: floor(H_alpha(1) - m_alpha) and floor(-m_alpha).
long max_lower_count(const RootSystem& rs, const Path& p, int alpha);
long max_raise_count(const RootSystem& rs, const Path& p, int alpha);

// The Weyl-group action on paths: s~_alpha pi = f_alpha^n pi when
// n = <pi(1), alpha^vee> >= 0, else e_alpha^{-n} pi. Applied along the
// word, rightmost reflection first. Throws NotIntegral when an endpoint
// pairing is not an integer.
Path weyl_path_action(const RootSystem& rs, const Path& p, const std::vector<int>& word);

}  // namespace littelmann

#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "littelmann/weight.hpp"

namespace littelmann {

// A positive (or negative) real root beta = sum_j b_j alpha_j, carried
// together with the coordinates of its coroot beta^vee = sum_j c_j alpha_j^vee.
struct RealRoot {
    std::vector<long> root_coords;    // b
    std::vector<long> coroot_coords;  // c
    bool positive = true;

    long height() const;

    bool operator==(const RealRoot& o) const { return root_coords == o.root_coords; }
    // sort key: (height, lex root coords)
    bool operator<(const RealRoot& o) const;
};

// Element of the Weyl group, stored as a canonical reduced word of simple
// reflection indices (0-based). Two elements are equal iff they act
// identically on rho, which for a canonical word means literal equality.
struct WeylElement {
    std::vector<int> word;

    int length() const { return static_cast<int>(word.size()); }
    bool is_identity() const { return word.empty(); }
    bool operator==(const WeylElement& o) const = default;
    bool operator<(const WeylElement& o) const;
};

struct RootSystem {
    int rank = 0;
    // cartan[i][j] = <alpha_j, alpha_i^vee>; column j holds the
    // fundamental-weight coordinates of alpha_j.
    std::vector<std::vector<long>> cartan;
    // positive d_i with d_i * cartan[i][j] = d_j * cartan[j][i], integral
    // and with gcd 1 per connected component.
    std::vector<long> symmetrizer;
    std::string name = "custom";
    bool finite_type = false;

    long a(int i, int j) const { return cartan[i][j]; }
    ZWeight simple_root(int j) const;  // fundamental coords of alpha_j
    RealRoot simple_real_root(int j) const;
    ZWeight rho() const;  // all-ones weight

    // chi - chi_i * alpha_i
    QWeight simple_reflect(const QWeight& chi, int i) const;
    ZWeight simple_reflect(const ZWeight& chi, int i) const;
};

// Validates the matrix (NotGCM), computes the symmetrizer
// (NotSymmetrizable) and the finite-type flag, and classifies the type
// name when recognizable.
RootSystem build_root_system(const std::vector<std::vector<long>>& matrix,
                             std::optional<std::string> name = {});

// "A3", "B2", "G2", "E6".. "F4", and untwisted affine forms "A1~", "G2~", ...
RootSystem builtin_root_system(const std::string& name);

Rat pairing(const QWeight& chi, const RealRoot& beta);
long pairing(const ZWeight& chi, const RealRoot& beta);
// <beta, gamma^vee> for roots
long pairing(const RootSystem& rs, const RealRoot& beta, const RealRoot& gamma);

// Fundamental-weight coordinates of beta: (A b)_i.
ZWeight root_to_weight(const RootSystem& rs, const RealRoot& beta);

QWeight reflect(const RootSystem& rs, const QWeight& chi, const RealRoot& beta);
ZWeight reflect(const RootSystem& rs, const ZWeight& chi, const RealRoot& beta);

struct RootSet {
    std::vector<RealRoot> roots;
    bool complete = false;                  // true only in finite type
    std::optional<long> height_cutoff;      // set when enumeration was truncated
};

// All positive real roots (finite type), or those of height <= cutoff.
// Throws CutoffRequired for infinite type without a cutoff.
RootSet positive_real_roots(const RootSystem& rs, std::optional<long> height_cutoff = {});

// Canonical reduced word for the element the input word represents.
WeylElement reduce_word(const RootSystem& rs, const std::vector<int>& word);

WeylElement weyl_identity();
WeylElement weyl_multiply(const RootSystem& rs, const WeylElement& a, const WeylElement& b);
WeylElement weyl_inverse(const RootSystem& rs, const WeylElement& w);

// Simple reflections applied along the word, rightmost first.
QWeight weyl_apply(const RootSystem& rs, const WeylElement& w, const QWeight& chi);
ZWeight weyl_apply(const RootSystem& rs, const WeylElement& w, const ZWeight& chi);
RealRoot weyl_apply(const RootSystem& rs, const WeylElement& w, const RealRoot& beta);

// {beta > 0 | w(beta) < 0}; size equals length(w). Sorted.
std::vector<RealRoot> inversion_set(const RootSystem& rs, const WeylElement& w);

// (w chi, w) with w chi dominant and w of minimal length. Throws
// IterationCapExceeded if chi cannot be dominated within the cap.
std::pair<QWeight, WeylElement> dominant_representative(const RootSystem& rs, const QWeight& chi,
                                                        long iteration_cap = 100000);
std::pair<ZWeight, WeylElement> dominant_representative(const RootSystem& rs, const ZWeight& chi,
                                                        long iteration_cap = 100000);

// Whole group in finite type; ball of the given word-length radius
// otherwise (max_length required then). Sorted by (length, word).
std::vector<WeylElement> weyl_group_elements(const RootSystem& rs,
                                             std::optional<int> max_length = {});

// Finite type only.
WeylElement longest_element(const RootSystem& rs);

}  // namespace littelmann

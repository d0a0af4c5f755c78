#include "littelmann/cartan.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "littelmann/errors.hpp"

namespace littelmann {

long RealRoot::height() const {
    long h = 0;
    for (long b : root_coords) h += b;
    return h;
}

bool RealRoot::operator<(const RealRoot& o) const {
    const long ha = height(), hb = o.height();
    if (ha != hb) return ha < hb;
    return root_coords < o.root_coords;
}

bool WeylElement::operator<(const WeylElement& o) const {
    if (word.size() != o.word.size()) return word.size() < o.word.size();
    return word < o.word;
}

ZWeight RootSystem::simple_root(int j) const {
    ZWeight w(static_cast<std::size_t>(rank));
    for (int i = 0; i < rank; ++i) w[static_cast<std::size_t>(i)] = cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return w;
}

RealRoot RootSystem::simple_real_root(int j) const {
    RealRoot r;
    r.root_coords.assign(static_cast<std::size_t>(rank), 0);
    r.coroot_coords.assign(static_cast<std::size_t>(rank), 0);
    r.root_coords[static_cast<std::size_t>(j)] = 1;
    r.coroot_coords[static_cast<std::size_t>(j)] = 1;
    r.positive = true;
    return r;
}

ZWeight RootSystem::rho() const { return ZWeight(static_cast<std::size_t>(rank), 1); }

QWeight RootSystem::simple_reflect(const QWeight& chi, int i) const {
    QWeight out(chi);
    const Rat c = chi[static_cast<std::size_t>(i)];
    if (c == 0) return out;
    for (int k = 0; k < rank; ++k)
        out[static_cast<std::size_t>(k)] -= c * cartan[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
    return out;
}

ZWeight RootSystem::simple_reflect(const ZWeight& chi, int i) const {
    ZWeight out(chi);
    const long c = chi[static_cast<std::size_t>(i)];
    if (c == 0) return out;
    for (int k = 0; k < rank; ++k)
        out[static_cast<std::size_t>(k)] -= c * cartan[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
    return out;
}

namespace {

void check_gcm(const std::vector<std::vector<long>>& m) {
    const std::size_t n = m.size();
    if (n == 0) throw NotGCM("empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw NotGCM("matrix is not square");
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][i] != 2) throw NotGCM("diagonal entry != 2 at index " + std::to_string(i));
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (m[i][j] > 0) throw NotGCM("positive off-diagonal entry");
            if ((m[i][j] == 0) != (m[j][i] == 0)) throw NotGCM("asymmetric zero pattern");
        }
    }
}

std::vector<long> compute_symmetrizer(const std::vector<std::vector<long>>& m) {
    const int n = static_cast<int>(m.size());
    std::vector<Rat> d(static_cast<std::size_t>(n), Rat(0));
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int ncomp = 0;
    for (int start = 0; start < n; ++start) {
        if (comp[static_cast<std::size_t>(start)] >= 0) continue;
        comp[static_cast<std::size_t>(start)] = ncomp;
        d[static_cast<std::size_t>(start)] = 1;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            const int i = queue.front();
            queue.pop_front();
            for (int j = 0; j < n; ++j) {
                if (i == j || m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == 0) continue;
                if (comp[static_cast<std::size_t>(j)] >= 0) continue;
                comp[static_cast<std::size_t>(j)] = ncomp;
                // d_i A_ij = d_j A_ji
                d[static_cast<std::size_t>(j)] = d[static_cast<std::size_t>(i)] *
                                                 rat(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                                                     m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
                queue.push_back(j);
            }
        }
        ++ncomp;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (d[static_cast<std::size_t>(i)] * m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
                d[static_cast<std::size_t>(j)] * m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                throw NotSymmetrizable("no symmetrizer exists");
    // Scale to the smallest positive integers, per connected component.
    std::vector<long> out(static_cast<std::size_t>(n));
    for (int c = 0; c < ncomp; ++c) {
        mpz_class l(1);
        for (int i = 0; i < n; ++i)
            if (comp[static_cast<std::size_t>(i)] == c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d[static_cast<std::size_t>(i)].get_den_mpz_t());
        mpz_class g(0);
        for (int i = 0; i < n; ++i)
            if (comp[static_cast<std::size_t>(i)] == c) {
                mpz_class num = mpz_class(d[static_cast<std::size_t>(i)].get_num()) * l / d[static_cast<std::size_t>(i)].get_den();
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
            }
        for (int i = 0; i < n; ++i)
            if (comp[static_cast<std::size_t>(i)] == c) {
                mpz_class num = mpz_class(d[static_cast<std::size_t>(i)].get_num()) * l / d[static_cast<std::size_t>(i)].get_den() / g;
                out[static_cast<std::size_t>(i)] = num.get_si();
            }
    }
    return out;
}

// Positive definiteness of the symmetrized matrix, by Sylvester's
// criterion with exact arithmetic.
bool symmetrized_positive_definite(const std::vector<std::vector<long>>& m, const std::vector<long>& d) {
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<Rat>> b(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                Rat(d[static_cast<std::size_t>(i)]) * m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    // Gaussian elimination without pivoting; leading minors positive iff
    // all pivots stay positive.
    for (int k = 0; k < n; ++k) {
        if (b[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] <= 0) return false;
        for (int i = k + 1; i < n; ++i) {
            const Rat f = b[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] / b[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
            for (int j = k; j < n; ++j)
                b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= f * b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        }
    }
    return true;
}

std::vector<std::vector<long>> series_matrix(char series, int n) {
    std::vector<std::vector<long>> m(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
    auto link = [&](int i, int j, long aij, long aji) {
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = aij;
        m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = aji;
    };
    switch (series) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
            break;
        case 'B':  // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
            if (n < 2) throw Error("B series needs rank >= 2");
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
            m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 2)] = -2;
            break;
        case 'C':  // alpha_n long
            if (n < 2) throw Error("C series needs rank >= 2");
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
            m[static_cast<std::size_t>(n - 2)][static_cast<std::size_t>(n - 1)] = -2;
            break;
        case 'D':
            if (n < 3) throw Error("D series needs rank >= 3");
            for (int i = 0; i + 1 < n - 1; ++i) link(i, i + 1, -1, -1);
            link(n - 3, n - 1, -1, -1);
            break;
        case 'E': {
            if (n < 6 || n > 8) throw Error("E series needs rank 6..8");
            // Bourbaki numbering: chain 1-3-4-5-..-n, node 2 hangs off node 4.
            for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1, -1);
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            break;
        }
        case 'F': {
            if (n != 4) throw Error("F series needs rank 4");
            link(0, 1, -1, -1);
            link(2, 3, -1, -1);
            // alpha_2 long, alpha_3 short
            link(1, 2, -1, -2);
            break;
        }
        case 'G': {
            if (n != 2) throw Error("G series needs rank 2");
            // alpha_1 short, alpha_2 long
            link(0, 1, -3, -1);
            break;
        }
        default:
            throw Error(std::string("unknown series ") + series);
    }
    return m;
}

// Cosmetic type recognition; "custom" when unrecognized.
std::string classify(const std::vector<std::vector<long>>& m, bool finite) {
    const int n = static_cast<int>(m.size());
    if (!finite) return "custom";
    if (n == 1) return "A1";
    std::vector<std::pair<char, int>> candidates;
    candidates.emplace_back('A', n);
    if (n >= 2) candidates.emplace_back('B', n);
    if (n >= 3) candidates.emplace_back('C', n);
    if (n >= 4) candidates.emplace_back('D', n);
    if (n >= 6 && n <= 8) candidates.emplace_back('E', n);
    if (n == 4) candidates.emplace_back('F', n);
    if (n == 2) candidates.emplace_back('G', n);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    if (n <= 8) {
        for (const auto& [series, rank] : candidates) {
            const auto target = series_matrix(series, rank);
            std::vector<int> p(perm);
            do {
                bool ok = true;
                for (int i = 0; ok && i < n; ++i)
                    for (int j = 0; ok && j < n; ++j)
                        if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
                            target[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])][static_cast<std::size_t>(p[static_cast<std::size_t>(j)])])
                            ok = false;
                if (ok) return std::string(1, series) + std::to_string(rank);
            } while (std::next_permutation(p.begin(), p.end()));
        }
    } else {
        for (const auto& [series, rank] : candidates)
            if (m == series_matrix(series, rank)) return std::string(1, series) + std::to_string(rank);
    }
    return "custom";
}

}  // namespace

RootSystem build_root_system(const std::vector<std::vector<long>>& matrix, std::optional<std::string> name) {
    check_gcm(matrix);
    RootSystem rs;
    rs.rank = static_cast<int>(matrix.size());
    rs.cartan = matrix;
    rs.symmetrizer = compute_symmetrizer(matrix);
    rs.finite_type = symmetrized_positive_definite(matrix, rs.symmetrizer);
    rs.name = name ? *name : classify(matrix, rs.finite_type);
    return rs;
}

RootSystem builtin_root_system(const std::string& name) {
    if (name.empty()) throw Error("empty root-system name");
    const bool affine = name.back() == '~';
    const std::string base = affine ? name.substr(0, name.size() - 1) : name;
    if (base.size() < 2) throw Error("unrecognized root-system name: " + name);
    const char series = base[0];
    int n = 0;
    try {
        std::size_t pos = 0;
        n = std::stoi(base.substr(1), &pos);
        if (pos != base.size() - 1) throw std::invalid_argument(base);
    } catch (const std::exception&) {
        throw Error("unrecognized root-system name: " + name);
    }
    if (n < 1) throw Error("rank must be positive: " + name);
    auto finite = build_root_system(series_matrix(series, n), base);
    if (!finite.finite_type) throw Error("internal: builtin series not finite type");
    if (!affine) return finite;

    // Untwisted affine extension: alpha_0 = delta - theta for the highest
    // root theta; new node gets index 0.
    const auto roots = positive_real_roots(finite);
    const RealRoot& theta = roots.roots.back();  // sorted by height; theta is the unique maximum
    const int m = n + 1;
    std::vector<std::vector<long>> aff(static_cast<std::size_t>(m), std::vector<long>(static_cast<std::size_t>(m), 0));
    aff[0][0] = 2;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) aff[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j + 1)] = finite.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    const ZWeight theta_w = root_to_weight(finite, theta);  // <theta, alpha_i^vee>
    for (int j = 0; j < n; ++j) {
        long coroot_pair = 0;  // <alpha_j, theta^vee>
        for (int k = 0; k < n; ++k)
            coroot_pair += theta.coroot_coords[static_cast<std::size_t>(k)] * finite.cartan[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        aff[0][static_cast<std::size_t>(j + 1)] = -coroot_pair;
        aff[static_cast<std::size_t>(j + 1)][0] = -theta_w[static_cast<std::size_t>(j)];
    }
    return build_root_system(aff, base + "~");
}

Rat pairing(const QWeight& chi, const RealRoot& beta) {
    check_rank(chi.size(), beta.coroot_coords.size());
    Rat s(0);
    for (std::size_t j = 0; j < chi.size(); ++j) s += chi[j] * beta.coroot_coords[j];
    return s;
}

long pairing(const ZWeight& chi, const RealRoot& beta) {
    check_rank(chi.size(), beta.coroot_coords.size());
    long s = 0;
    for (std::size_t j = 0; j < chi.size(); ++j) s += chi[j] * beta.coroot_coords[j];
    return s;
}

long pairing(const RootSystem& rs, const RealRoot& beta, const RealRoot& gamma) {
    return pairing(root_to_weight(rs, beta), gamma);
}

ZWeight root_to_weight(const RootSystem& rs, const RealRoot& beta) {
    ZWeight w(static_cast<std::size_t>(rs.rank), 0);
    for (int i = 0; i < rs.rank; ++i) {
        long s = 0;
        for (int j = 0; j < rs.rank; ++j)
            s += rs.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * beta.root_coords[static_cast<std::size_t>(j)];
        w[static_cast<std::size_t>(i)] = s;
    }
    return w;
}

QWeight reflect(const RootSystem& rs, const QWeight& chi, const RealRoot& beta) {
    const Rat c = pairing(chi, beta);
    if (c == 0) return chi;
    const ZWeight bw = root_to_weight(rs, beta);
    QWeight out(chi);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= c * bw[i];
    return out;
}

ZWeight reflect(const RootSystem& rs, const ZWeight& chi, const RealRoot& beta) {
    const long c = pairing(chi, beta);
    if (c == 0) return chi;
    const ZWeight bw = root_to_weight(rs, beta);
    ZWeight out(chi);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= c * bw[i];
    return out;
}

namespace {

// s_i on root coordinates: b -= <beta, alpha_i^vee> e_i, and the matching
// coroot transform c -= <alpha_i, beta^vee> e_i.
void reflect_root_inplace(const RootSystem& rs, RealRoot& r, int i) {
    long rb = 0, rc = 0;
    for (int j = 0; j < rs.rank; ++j) {
        rb += rs.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * r.root_coords[static_cast<std::size_t>(j)];
        rc += rs.cartan[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] * r.coroot_coords[static_cast<std::size_t>(j)];
    }
    r.root_coords[static_cast<std::size_t>(i)] -= rb;
    r.coroot_coords[static_cast<std::size_t>(i)] -= rc;
}

void set_root_sign(RealRoot& r) {
    bool any_pos = false, any_neg = false;
    for (long b : r.root_coords) {
        if (b > 0) any_pos = true;
        if (b < 0) any_neg = true;
    }
    if (any_pos == any_neg) throw Error("internal: real root with mixed signs");
    r.positive = any_pos;
}

}  // namespace

RootSet positive_real_roots(const RootSystem& rs, std::optional<long> height_cutoff) {
    if (!rs.finite_type && !height_cutoff)
        throw CutoffRequired("positive real roots are infinite for " + rs.name + "; a height cutoff is required");
    RootSet out;
    out.complete = rs.finite_type;
    if (!rs.finite_type) out.height_cutoff = height_cutoff;

    std::set<std::vector<long>> seen;
    std::deque<RealRoot> queue;
    for (int j = 0; j < rs.rank; ++j) {
        auto r = rs.simple_real_root(j);
        if (height_cutoff && r.height() > *height_cutoff) continue;
        seen.insert(r.root_coords);
        queue.push_back(std::move(r));
    }
    while (!queue.empty()) {
        RealRoot r = std::move(queue.front());
        queue.pop_front();
        for (int i = 0; i < rs.rank; ++i) {
            long pair_i = 0;  // <r, alpha_i^vee>
            for (int j = 0; j < rs.rank; ++j)
                pair_i += rs.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * r.root_coords[static_cast<std::size_t>(j)];
            if (pair_i >= 0) continue;  // only walk upward in height
            RealRoot nr = r;
            reflect_root_inplace(rs, nr, i);
            if (height_cutoff && nr.height() > *height_cutoff) continue;
            if (seen.insert(nr.root_coords).second) queue.push_back(std::move(nr));
        }
        out.roots.push_back(std::move(r));
    }
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

namespace {

void check_indices(const RootSystem& rs, const std::vector<int>& word) {
    for (int i : word)
        if (i < 0 || i >= rs.rank)
            throw IndexOutOfRange("reflection index " + std::to_string(i) + " out of range for rank " +
                                  std::to_string(rs.rank));
}

// Canonical reduced word recovered from the image of rho: repeatedly
// reflect the smallest negative coordinate back up to dominance.
WeylElement canonical_from_rho_image(const RootSystem& rs, ZWeight chi) {
    std::vector<int> letters;
    for (;;) {
        int neg = -1;
        for (int i = 0; i < rs.rank; ++i)
            if (chi[static_cast<std::size_t>(i)] < 0) {
                neg = i;
                break;
            }
        if (neg < 0) break;
        letters.push_back(neg);
        chi = rs.simple_reflect(chi, neg);
        if (letters.size() > 4000000) throw IterationCapExceeded("weyl canonicalization did not terminate");
    }
    return WeylElement{std::move(letters)};
}

}  // namespace

WeylElement reduce_word(const RootSystem& rs, const std::vector<int>& word) {
    check_indices(rs, word);
    ZWeight chi = rs.rho();
    for (auto it = word.rbegin(); it != word.rend(); ++it) chi = rs.simple_reflect(chi, *it);
    return canonical_from_rho_image(rs, chi);
}

WeylElement weyl_identity() { return WeylElement{}; }

WeylElement weyl_multiply(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
    std::vector<int> word(a.word);
    word.insert(word.end(), b.word.begin(), b.word.end());
    return reduce_word(rs, word);
}

WeylElement weyl_inverse(const RootSystem& rs, const WeylElement& w) {
    std::vector<int> word(w.word.rbegin(), w.word.rend());
    return reduce_word(rs, word);
}

QWeight weyl_apply(const RootSystem& rs, const WeylElement& w, const QWeight& chi) {
    check_rank(chi.size(), static_cast<std::size_t>(rs.rank));
    QWeight out(chi);
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) out = rs.simple_reflect(out, *it);
    return out;
}

ZWeight weyl_apply(const RootSystem& rs, const WeylElement& w, const ZWeight& chi) {
    check_rank(chi.size(), static_cast<std::size_t>(rs.rank));
    ZWeight out(chi);
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) out = rs.simple_reflect(out, *it);
    return out;
}

RealRoot weyl_apply(const RootSystem& rs, const WeylElement& w, const RealRoot& beta) {
    RealRoot out(beta);
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) reflect_root_inplace(rs, out, *it);
    set_root_sign(out);
    return out;
}

std::vector<RealRoot> inversion_set(const RootSystem& rs, const WeylElement& w) {
    // For reduced w = s_{i_1} ... s_{i_m} (rightmost applied first),
    // I(w) = { s_{i_m} ... s_{i_{k+1}} alpha_{i_k} : k = 1..m }.
    const auto& word = w.word;
    const std::size_t m = word.size();
    std::vector<RealRoot> out;
    out.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
        RealRoot r = rs.simple_real_root(word[k]);
        for (std::size_t j = k + 1; j < m; ++j) reflect_root_inplace(rs, r, word[j]);
        set_root_sign(r);
        if (!r.positive) throw Error("internal: inversion set produced a negative root (word not reduced?)");
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw Error("internal: duplicate inversion root");
    return out;
}

std::pair<QWeight, WeylElement> dominant_representative(const RootSystem& rs, const QWeight& chi,
                                                        long iteration_cap) {
    check_rank(chi.size(), static_cast<std::size_t>(rs.rank));
    QWeight cur(chi);
    std::vector<int> applied;
    long steps = 0;
    for (;;) {
        int neg = -1;
        for (int i = 0; i < rs.rank; ++i)
            if (cur[static_cast<std::size_t>(i)] < 0) {
                neg = i;
                break;
            }
        if (neg < 0) break;
        if (++steps > iteration_cap)
            throw IterationCapExceeded("weight could not be dominated within " + std::to_string(iteration_cap) +
                                       " reflections");
        cur = rs.simple_reflect(cur, neg);
        applied.push_back(neg);
    }
    // w = s_{last} ... s_{first}: rightmost-first word is the reverse
    // application order.
    std::vector<int> word(applied.rbegin(), applied.rend());
    return {std::move(cur), reduce_word(rs, word)};
}

std::pair<ZWeight, WeylElement> dominant_representative(const RootSystem& rs, const ZWeight& chi,
                                                        long iteration_cap) {
    auto [q, w] = dominant_representative(rs, qw_of(chi), iteration_cap);
    return {zw_of(q), std::move(w)};
}

std::vector<WeylElement> weyl_group_elements(const RootSystem& rs, std::optional<int> max_length) {
    if (!rs.finite_type && !max_length)
        throw NotFiniteType("Weyl group of " + rs.name + " is infinite; a length bound is required");
    std::vector<WeylElement> out;
    std::set<std::vector<int>> seen;
    std::deque<WeylElement> queue;
    WeylElement id = weyl_identity();
    seen.insert(id.word);
    queue.push_back(id);
    while (!queue.empty()) {
        WeylElement w = std::move(queue.front());
        queue.pop_front();
        for (int i = 0; i < rs.rank; ++i) {
            std::vector<int> next_word{i};
            next_word.insert(next_word.end(), w.word.begin(), w.word.end());
            WeylElement next = reduce_word(rs, next_word);
            if (next.length() <= w.length()) continue;
            if (max_length && next.length() > *max_length) continue;
            if (seen.insert(next.word).second) queue.push_back(std::move(next));
        }
        out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end());
    return out;
}

WeylElement longest_element(const RootSystem& rs) {
    if (!rs.finite_type) throw NotFiniteType("longest element requires finite type");
    ZWeight minus_rho = negate(rs.rho());
    return dominant_representative(rs, minus_rho).second;
}

}  // namespace littelmann

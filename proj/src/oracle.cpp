#include "littelmann/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "littelmann/errors.hpp"

namespace littelmann {

namespace {

void require_finite(const RootSystem& rs, const char* what) {
    if (!rs.finite_type) throw NotFiniteType(std::string(what) + " requires a finite-type root system");
}

void require_dominant(const ZWeight& w, const char* what) {
    if (!is_dominant(w)) throw NotDominant(std::string(what) + ": weight " + to_string(w) + " is not dominant");
}

// Exact inverse of the Cartan matrix (finite type), column-major use:
// root coordinates of chi are Ainv * chi.
std::vector<std::vector<Rat>> cartan_inverse(const RootSystem& rs) {
    const int n = rs.rank;
    std::vector<std::vector<Rat>> m(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(2 * n), Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = rs.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw Error("internal: singular Cartan matrix in finite type");
        std::swap(m[static_cast<std::size_t>(col)], m[static_cast<std::size_t>(pivot)]);
        const Rat p = m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        for (int j = 0; j < 2 * n; ++j) m[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] /= p;
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const Rat f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int j = 0; j < 2 * n; ++j)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -= f * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
        }
    }
    std::vector<std::vector<Rat>> inv(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)];
    return inv;
}

struct SymForm {
    const RootSystem& rs;
    std::vector<std::vector<Rat>> ainv;

    explicit SymForm(const RootSystem& r) : rs(r), ainv(cartan_inverse(r)) {}

    // (x, y) with both arguments in fundamental-weight coordinates,
    // normalized so that (alpha_i, alpha_i) = 2 d_i.
    Rat weights(const QWeight& x, const QWeight& y) const {
        Rat s(0);
        for (int k = 0; k < rs.rank; ++k) {
            Rat yk(0);
            for (int j = 0; j < rs.rank; ++j) yk += ainv[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] * y[static_cast<std::size_t>(j)];
            s += yk * x[static_cast<std::size_t>(k)] * rs.symmetrizer[static_cast<std::size_t>(k)];
        }
        return s;
    }

    // (x, beta) for a root beta given by its root coordinates.
    Rat weight_root(const ZWeight& x, const RealRoot& beta) const {
        Rat s(0);
        for (int k = 0; k < rs.rank; ++k)
            s += Rat(beta.root_coords[static_cast<std::size_t>(k)]) * x[static_cast<std::size_t>(k)] * rs.symmetrizer[static_cast<std::size_t>(k)];
        return s;
    }
};

// All dominant mu with lambda - mu in the nonnegative root lattice. The
// root coordinates of lambda - mu are bounded by Ainv * lambda because
// the inverse of a finite-type Cartan matrix is entrywise nonnegative.
std::vector<std::pair<ZWeight, long>> dominant_weights_below(const RootSystem& rs,
                                                             const SymForm& form,
                                                             const ZWeight& lambda) {
    const int n = rs.rank;
    std::vector<long> bound(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Rat b(0);
        for (int j = 0; j < n; ++j) b += form.ainv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * lambda[static_cast<std::size_t>(j)];
        bound[static_cast<std::size_t>(i)] = std::max(0L, rat_floor(b));
    }
    std::vector<std::pair<ZWeight, long>> out;  // (mu, height of lambda - mu)
    std::vector<long> c(static_cast<std::size_t>(n), 0);
    for (;;) {
        ZWeight mu(lambda);
        long height = 0;
        for (int i = 0; i < n; ++i) {
            height += c[static_cast<std::size_t>(i)];
            for (int k = 0; k < n; ++k)
                mu[static_cast<std::size_t>(k)] -= rs.cartan[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(i)];
        }
        if (is_dominant(mu)) out.emplace_back(std::move(mu), height);
        int pos = 0;
        while (pos < n && ++c[static_cast<std::size_t>(pos)] > bound[static_cast<std::size_t>(pos)]) {
            c[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.second < b.second || (a.second == b.second && a.first < b.first); });
    return out;
}

std::vector<ZWeight> weyl_orbit(const RootSystem& rs, const ZWeight& w) {
    std::set<ZWeight> seen{w};
    std::deque<ZWeight> queue{w};
    while (!queue.empty()) {
        ZWeight cur = std::move(queue.front());
        queue.pop_front();
        for (int i = 0; i < rs.rank; ++i) {
            ZWeight next = rs.simple_reflect(cur, i);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

long weyl_dim(const RootSystem& rs, const ZWeight& lambda) {
    require_finite(rs, "weyl_dim");
    require_dominant(lambda, "weyl_dim");
    check_rank(lambda.size(), static_cast<std::size_t>(rs.rank));
    const ZWeight rho = rs.rho();
    const ZWeight lr = add(lambda, rho);
    mpz_class num(1), den(1);
    for (const auto& beta : positive_real_roots(rs).roots) {
        num *= pairing(lr, beta);
        den *= pairing(rho, beta);
    }
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw Error("internal: Weyl dimension is not an integer");
    if (!q.fits_slong_p()) throw Error("weyl_dim overflows long for " + to_string(lambda));
    return q.get_si();
}

CharacterTable freudenthal_multiplicities(const RootSystem& rs, const ZWeight& lambda) {
    require_finite(rs, "freudenthal_multiplicities");
    require_dominant(lambda, "freudenthal_multiplicities");
    check_rank(lambda.size(), static_cast<std::size_t>(rs.rank));
    const SymForm form(rs);
    const auto roots = positive_real_roots(rs).roots;
    const ZWeight rho = rs.rho();
    const Rat top_norm = form.weights(qw_of(add(lambda, rho)), qw_of(add(lambda, rho)));

    const auto dominants = dominant_weights_below(rs, form, lambda);
    std::map<ZWeight, long> dom_mult;
    auto mult_at = [&](const ZWeight& chi) -> long {
        auto [dom, w] = dominant_representative(rs, chi);
        (void)w;
        auto it = dom_mult.find(dom);
        return it == dom_mult.end() ? 0 : it->second;
    };
    for (const auto& [mu, height] : dominants) {
        if (height == 0) {
            dom_mult[mu] = 1;  // mu == lambda
            continue;
        }
        Rat acc(0);
        for (const auto& beta : roots) {
            const ZWeight beta_w = root_to_weight(rs, beta);
            ZWeight chi(mu);
            for (;;) {
                chi = add(chi, beta_w);
                const long m = mult_at(chi);
                if (m == 0) break;  // weights form unbroken root strings
                acc += Rat(m) * form.weight_root(chi, beta);
            }
        }
        const Rat denom = top_norm - form.weights(qw_of(add(mu, rho)), qw_of(add(mu, rho)));
        if (denom <= 0) throw Error("internal: Freudenthal denominator not positive");
        const Rat mult = 2 * acc / denom;
        if (!is_integer(mult)) throw Error("internal: Freudenthal multiplicity not integral");
        const long m = rat_to_long(mult);
        if (m > 0) dom_mult[mu] = m;
    }

    CharacterTable table;
    table.highest = lambda;
    for (const auto& [mu, m] : dom_mult) {
        for (const auto& chi : weyl_orbit(rs, mu)) table.mults[chi] = m;
    }
    for (const auto& [chi, m] : table.mults) {
        (void)chi;
        table.dim += m;
    }
    return table;
}

WeightMultiset tensor_decompose_oracle(const RootSystem& rs, const ZWeight& mu, const ZWeight& nu) {
    return tensor_decompose_oracle(rs, mu, freudenthal_multiplicities(rs, nu));
}

WeightMultiset tensor_decompose_oracle(const RootSystem& rs, const ZWeight& mu,
                                       const CharacterTable& nu_table) {
    require_finite(rs, "tensor_decompose_oracle");
    require_dominant(mu, "tensor_decompose_oracle");
    const ZWeight rho = rs.rho();
    std::map<ZWeight, long> acc;
    for (const auto& [chi, mult] : nu_table.mults) {
        const ZWeight xi = add(add(mu, chi), rho);
        auto [dom, w] = dominant_representative(rs, xi);
        bool singular = false;
        for (long c : dom)
            if (c == 0) {
                singular = true;
                break;
            }
        if (singular) continue;
        const long sign = w.length() % 2 == 0 ? 1 : -1;
        acc[sub(dom, rho)] += sign * mult;
    }
    WeightMultiset out;
    for (const auto& [lam, m] : acc) {
        if (m < 0) throw Error("internal: negative multiplicity from Klimyk accumulation");
        if (m > 0) out[lam] = m;
    }
    return out;
}

}  // namespace littelmann

#include "littelmann/rational.hpp"

#include <stdexcept>

namespace littelmann {

long rat_floor(const Rat& q) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    if (!f.fits_slong_p()) throw std::overflow_error("rat_floor: result does not fit in long");
    return f.get_si();
}

long rat_to_long(const Rat& q) {
    if (!is_integer(q)) throw std::invalid_argument("rat_to_long: not an integer: " + rat_str(q));
    const mpz_class& n = q.get_num();
    if (!n.fits_slong_p()) throw std::overflow_error("rat_to_long: does not fit in long");
    return n.get_si();
}

std::string rat_str(const Rat& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_str();
}

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    const auto slash = s.find('/');
    try {
        mpz_class num(slash == std::string::npos ? s : s.substr(0, slash));
        mpz_class den(slash == std::string::npos ? std::string("1") : s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("parse_rational: zero denominator: " + s);
        Rat r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: malformed rational: " + s);
    }
}

std::size_t rat_hash(const Rat& q) noexcept {
    // mpq_class values are kept canonical, so (num, den) residues are a
    // sound hash.
    constexpr unsigned long kMod = (1UL << 61) - 1;
    std::size_t h = mpz_fdiv_ui(q.get_num_mpz_t(), kMod);
    hash_combine(h, mpz_fdiv_ui(q.get_den_mpz_t(), kMod));
    hash_combine(h, static_cast<std::size_t>(mpz_sgn(q.get_num_mpz_t()) + 1));
    return h;
}

}  // namespace littelmann

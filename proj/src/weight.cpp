#include "littelmann/weight.hpp"

#include <sstream>

namespace littelmann {

QWeight qw_of(const ZWeight& z) {
    QWeight q;
    q.reserve(z.size());
    for (long c : z) q.emplace_back(c);
    return q;
}

ZWeight zw_of(const QWeight& q) {
    ZWeight z;
    z.reserve(q.size());
    for (const Rat& c : q) {
        if (!is_integer(c)) throw NotIntegral("weight coordinate is not an integer: " + rat_str(c));
        z.push_back(rat_to_long(c));
    }
    return z;
}

QWeight add(const QWeight& a, const QWeight& b) {
    check_rank(a.size(), b.size());
    QWeight r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

QWeight sub(const QWeight& a, const QWeight& b) {
    check_rank(a.size(), b.size());
    QWeight r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

QWeight negate(const QWeight& a) {
    QWeight r(a);
    for (auto& c : r) c = -c;
    return r;
}

QWeight scale(const Rat& c, const QWeight& a) {
    QWeight r(a);
    for (auto& x : r) x *= c;
    return r;
}

ZWeight add(const ZWeight& a, const ZWeight& b) {
    check_rank(a.size(), b.size());
    ZWeight r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

ZWeight sub(const ZWeight& a, const ZWeight& b) {
    check_rank(a.size(), b.size());
    ZWeight r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

ZWeight negate(const ZWeight& a) {
    ZWeight r(a);
    for (auto& c : r) c = -c;
    return r;
}

bool is_zero(const QWeight& a) {
    for (const auto& c : a)
        if (c != 0) return false;
    return true;
}

bool all_integral(const QWeight& a) {
    for (const auto& c : a)
        if (!is_integer(c)) return false;
    return true;
}

bool is_dominant(const QWeight& a) {
    for (const auto& c : a)
        if (c < 0) return false;
    return true;
}

bool is_dominant(const ZWeight& a) {
    for (long c : a)
        if (c < 0) return false;
    return true;
}

std::size_t qw_hash(const QWeight& a) noexcept {
    std::size_t h = a.size();
    for (const auto& c : a) hash_combine(h, rat_hash(c));
    return h;
}

std::string to_string(const QWeight& a) {
    std::ostringstream os;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ',';
        os << rat_str(a[i]);
    }
    return os.str();
}

std::string to_string(const ZWeight& a) {
    std::ostringstream os;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ',';
        os << a[i];
    }
    return os.str();
}

ZWeight parse_zweight(const std::string& s) {
    ZWeight out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        long v = std::stol(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad weight coordinate: " + item);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty weight");
    return out;
}

}  // namespace littelmann

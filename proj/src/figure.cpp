#include "littelmann/figure.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "littelmann/errors.hpp"

namespace littelmann {

namespace {

struct Plane {
    // Drawing basis: alpha_1 -> unit*(1,0), alpha_2 -> unit*(bx,by), a
    // rational stand-in for the metric embedding; declared in the SVG.
    Rat bx, by;
    long unit;
    // inverse Cartan (rank 2)
    Rat inv[2][2];

    Plane(const RootSystem& rs, long u) : unit(u) {
        if (rs.rank != 2 || !rs.finite_type)
            throw Error("figures require a finite-type rank-2 root system");
        const long a = rs.cartan[0][0], b = rs.cartan[0][1], c = rs.cartan[1][0], d = rs.cartan[1][1];
        const long det = a * d - b * c;
        inv[0][0] = rat(d, det);
        inv[0][1] = rat(-b, det);
        inv[1][0] = rat(-c, det);
        inv[1][1] = rat(a, det);
        const long m = b * c;
        const bool second_longer = rs.symmetrizer[1] > rs.symmetrizer[0];
        if (m == 0) {
            bx = 0;
            by = 1;
        } else if (m == 1) {
            bx = rat(-1, 2);
            by = rat(13, 15);
        } else if (m == 2) {
            bx = second_longer ? rat(-1) : rat(-1, 2);
            by = second_longer ? rat(1) : rat(1, 2);
        } else {
            bx = second_longer ? rat(-3, 2) : rat(-1, 2);
            by = second_longer ? rat(13, 15) : rat(13, 45);
        }
    }

    // fundamental coords -> root coords
    std::pair<Rat, Rat> root_coords(const QWeight& w) const {
        return {inv[0][0] * w[0] + inv[0][1] * w[1], inv[1][0] * w[0] + inv[1][1] * w[1]};
    }

    // root coords -> pixel coords (y axis flipped for SVG)
    std::pair<Rat, Rat> pixel(const Rat& r0, const Rat& r1) const {
        return {(r0 + r1 * bx) * unit, -(r1 * by) * unit};
    }
};

// Fixed three decimals, rounded half away from zero; exact and
// deterministic.
std::string fmt3(const Rat& q) {
    mpz_class n = q.get_num() * 1000;
    const bool neg = n < 0;
    mpz_class an;
    mpz_abs(an.get_mpz_t(), n.get_mpz_t());
    const mpz_class rounded = (2 * an + q.get_den()) / (2 * q.get_den());
    const mpz_class whole = rounded / 1000;
    const long frac = mpz_class(rounded % 1000).get_si();
    char fbuf[8];
    std::snprintf(fbuf, sizeof fbuf, "%03ld", frac);
    return (neg && rounded != 0 ? "-" : "") + whole.get_str() + "." + fbuf;
}

struct Svg {
    std::ostringstream body;
    Rat min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    bool first = true;

    void bump(const std::pair<Rat, Rat>& p) {
        if (first) {
            min_x = max_x = p.first;
            min_y = max_y = p.second;
            first = false;
            return;
        }
        min_x = std::min(min_x, p.first);
        max_x = std::max(max_x, p.first);
        min_y = std::min(min_y, p.second);
        max_y = std::max(max_y, p.second);
    }

    std::string finish(const Plane& plane) {
        const Rat pad = rat(plane.unit * 3, 2);
        std::ostringstream os;
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt3(min_x - pad) << " "
           << fmt3(min_y - pad) << " " << fmt3(max_x - min_x + 2 * pad) << " "
           << fmt3(max_y - min_y + 2 * pad) << "\">\n";
        os << "<!-- unit=" << plane.unit << " alpha1=(1,0) alpha2=(" << rat_str(plane.bx) << ","
           << rat_str(plane.by) << ") -->\n";
        os << body.str();
        os << "</svg>\n";
        return os.str();
    }
};

void draw_grid(Svg& svg, const Plane& plane, const Rat& base0, const Rat& base1, long reach) {
    for (long i = -reach; i <= reach; ++i)
        for (long j = -reach; j <= reach; ++j) {
            const auto px = plane.pixel(base0 + i, base1 + j);
            svg.body << "<circle class=\"grid\" cx=\"" << fmt3(px.first) << "\" cy=\"" << fmt3(px.second)
                     << "\" r=\"1.5\" fill=\"#bbbbbb\"/>\n";
        }
}

}  // namespace

std::string svg_path_figure(const RootSystem& rs, const Path& p, long unit) {
    const Plane plane(rs, unit);
    Svg svg;
    const auto sums = partial_sums(p);
    std::ostringstream pts;
    long reach = 2;
    for (std::size_t i = 0; i < sums.size(); ++i) {
        const auto [r0, r1] = plane.root_coords(sums[i]);
        const auto px = plane.pixel(r0, r1);
        svg.bump(px);
        if (i) pts << ' ';
        pts << fmt3(px.first) << ',' << fmt3(px.second);
        reach = std::max({reach, std::abs(rat_floor(r0)) + 1, std::abs(rat_floor(r1)) + 1});
    }
    draw_grid(svg, plane, Rat(0), Rat(0), reach);
    svg.body << "<polyline class=\"path\" fill=\"none\" stroke=\"#202020\" stroke-width=\"2\" points=\""
             << pts.str() << "\"/>\n";
    for (const auto& s : sums) {
        const auto [r0, r1] = plane.root_coords(s);
        const auto px = plane.pixel(r0, r1);
        svg.body << "<circle class=\"vertex\" data-weight=\"" << to_string(s) << "\" cx=\"" << fmt3(px.first)
                 << "\" cy=\"" << fmt3(px.second) << "\" r=\"3\" fill=\"#202020\"/>\n";
    }
    return svg.finish(plane);
}

std::string svg_decomposition_figure(const RootSystem& rs, const ZWeight& mu, const ZWeight& nu,
                                     const WeightMultiset& support,
                                     const std::vector<ZWeight>& classic,
                                     const std::vector<ZWeight>& generalized, long unit) {
    const Plane plane(rs, unit);
    const std::set<ZWeight> classic_set(classic.begin(), classic.end());
    const std::set<ZWeight> generalized_set(generalized.begin(), generalized.end());

    // Every component lies in mu+nu+Q; the grid is that coset of the root
    // lattice.
    const ZWeight base = add(mu, nu);
    const auto [b0, b1] = plane.root_coords(qw_of(base));

    Svg svg;
    long reach = 2;
    std::ostringstream markers;
    for (const auto& [lam, mult] : support) {
        const auto [r0, r1] = plane.root_coords(qw_of(lam));
        const auto px = plane.pixel(r0, r1);
        svg.bump(px);
        reach = std::max({reach, std::abs(rat_floor(r0 - b0)) + 2, std::abs(rat_floor(r1 - b1)) + 2});
        std::string cls = "support";
        if (classic_set.count(lam)) cls += " classic";
        if (generalized_set.count(lam)) cls += " generalized";
        const char* fill = classic_set.count(lam) ? "#1f77b4" : generalized_set.count(lam) ? "#d62728" : "#999999";
        markers << "<circle class=\"" << cls << "\" data-weight=\"" << to_string(lam)
                << "\" data-multiplicity=\"" << mult << "\" cx=\"" << fmt3(px.first) << "\" cy=\""
                << fmt3(px.second) << "\" r=\"4\" fill=\"" << fill << "\"/>\n";
    }
    draw_grid(svg, plane, b0, b1, reach);
    svg.body << markers.str();
    return svg.finish(plane);
}

}  // namespace littelmann

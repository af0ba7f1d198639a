#ifndef ORE_NEWTON_HPP_
#define ORE_NEWTON_HPP_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ore/extpoly.hpp"
#include "ore/intpoly.hpp"
#include "ore/modpoly.hpp"

namespace ore {

/* f = a_0 + a_1 g + ... + a_r g^r over Z with deg a_j < deg g, and the
 * quotients q_j of the division of f by g^j (q_r = a_r). valuations[j]
 * holds v_N(a_j) once computed for a given modulus. */
struct GExpansion {
    IntPoly g;
    std::vector<IntPoly> coefficients;
    std::vector<IntPoly> quotients; /* quotients[j-1] = q_j */
    std::vector<Ordinate> valuations;

    std::size_t r() const { return coefficients.size() - 1; }
    IntPoly const & quotient(std::size_t j) const { return quotients.at(j - 1); }
};

inline GExpansion g_expansion(IntPoly const & f, IntPoly const & g)
{
    if (g.degree() < 1 || !g.is_monic())
        throw std::invalid_argument("g-expansion needs a monic g of positive degree");
    GExpansion e;
    e.g = g;
    IntPoly q = f;
    for (;;) {
        auto [next, a] = quotrem(q, g);
        e.coefficients.push_back(std::move(a));
        if (next.is_zero())
            break;
        e.quotients.push_back(next);
        q = std::move(next);
    }
    return e;
}

/* Minimum of v_N over the coefficients; infinity for the zero
 * polynomial. A hook from any coefficient ends the computation. */
inline Hook<Ordinate> val_N_poly(ModulusContext const & ctx, IntPoly const & a)
{
    Ordinate best = Ordinate::infinity();
    for (auto const & c : a.coeffs()) {
        if (c == 0)
            continue;
        auto v = val_N(ctx, c);
        if (!v)
            return v.forward<Ordinate>();
        best = std::min(best, Ordinate(*v));
    }
    return best;
}

struct LatticePoint {
    long x;
    Ordinate y;
};

/* A side of slope -h/e (h, e > 0 coprime) starting at abscissa `left`. */
struct Side {
    long left = 0;
    long left_ordinate = 0;
    long length = 0;
    long h = 0;
    long e = 1;

    long right() const { return left + length; }
    long right_ordinate() const { return left_ordinate - degree() * h; }
    long degree() const { return length / e; }
    Rational lambda() const { return Rational(Integer(h), Integer(e)); }
    bool integral_slope() const { return e == 1; }
};

struct PrincipalPolygon {
    std::vector<std::pair<long, long>> vertices;
    std::vector<Side> sides;
    std::vector<Rational> ordinates; /* ordinates[j-1] = y_j, 1 <= j <= length */
    long length = 0;

    Rational const & y(long j) const { return ordinates.at(j - 1); }
    bool all_slopes_integral() const
    {
        return std::all_of(sides.begin(), sides.end(), [](Side const & s) { return s.integral_slope(); });
    }
};

/* Lower convex hull of the finite points, restricted to its sides of
 * negative slope. The polygon must end at abscissa expected_length on
 * the horizontal axis; anything else means the expansion or the
 * valuations are wrong. */
inline PrincipalPolygon principal_polygon(std::vector<LatticePoint> const & points, long expected_length)
{
    std::vector<std::pair<long, long>> pts;
    for (auto const & p : points)
        if (p.y.is_finite())
            pts.emplace_back(p.x, p.y.value());
    if (pts.empty())
        throw std::invalid_argument("principal_polygon: no point with finite ordinate");
    std::sort(pts.begin(), pts.end());

    std::vector<std::pair<long, long>> hull;
    for (auto const & p : pts) {
        while (hull.size() >= 2) {
            auto const & o = hull[hull.size() - 2];
            auto const & a = hull.back();
            long const cross = (a.first - o.first) * (p.second - o.second) - (a.second - o.second) * (p.first - o.first);
            if (cross > 0)
                break;
            hull.pop_back();
        }
        hull.push_back(p);
    }

    PrincipalPolygon poly;
    poly.vertices.push_back(hull.front());
    for (std::size_t i = 1; i < hull.size(); ++i) {
        auto const & a = hull[i - 1];
        auto const & b = hull[i];
        if (b.second >= a.second)
            break;
        Side s;
        s.left = a.first;
        s.left_ordinate = a.second;
        s.length = b.first - a.first;
        long const drop = a.second - b.second;
        long const g = std::gcd(drop, s.length);
        s.h = drop / g;
        s.e = s.length / g;
        poly.sides.push_back(s);
        poly.vertices.push_back(b);
    }
    auto const & end = poly.vertices.back();
    poly.length = end.first;
    if (poly.length != expected_length || end.second != 0)
        throw InternalInconsistency("principal polygon has length " + std::to_string(poly.length) + " and final ordinate " + std::to_string(end.second) + ", expected length " + std::to_string(expected_length) + " on the axis");

    long const start = poly.vertices.front().first;
    if (start > 1)
        throw std::domain_error("g^" + std::to_string(start) + " divides f over Z; f is not irreducible");
    for (long j = 1; j <= poly.length; ++j) {
        if (j == start) {
            poly.ordinates.emplace_back(poly.vertices.front().second);
            continue;
        }
        auto it = std::find_if(poly.sides.begin(), poly.sides.end(), [j](Side const & s) { return s.left < j && j <= s.right(); });
        Rational y(it->left_ordinate);
        y -= Rational(Integer(it->h * (j - it->left)), Integer(it->e));
        y.canonicalize();
        poly.ordinates.push_back(y);
    }
    return poly;
}

/* R_{g,lambda}(f) = c_s + c_{s+e} y + ... + c_{s+de} y^d over A1. */
struct ResidualPolynomial {
    Side side;
    ExtPoly poly;
};

inline ResidualPolynomial residual_polynomial(ExtRingHandle const & ring, GExpansion const & exp, Side const & side)
{
    Integer const & n = ring->base()->modulus();
    std::vector<ModPoly> c;
    for (long j = 0; j <= side.degree(); ++j) {
        long const i = side.left + j * side.e;
        long const expected = side.left_ordinate - j * side.h;
        Ordinate const u = exp.valuations.at(i);
        if (u.is_infinite() || u.value() > expected) {
            c.push_back(ring->zero());
            continue;
        }
        if (u.value() < expected)
            throw InternalInconsistency("point lies below the Newton polygon");
        Integer const scale = pow(n, static_cast<unsigned long>(u.value()));
        std::vector<Integer> q;
        for (auto const & a : exp.coefficients[i].coeffs())
            q.push_back(divexact(a, scale));
        c.push_back(reduce_into(*ring, make_intpoly(std::move(q))));
    }
    ResidualPolynomial res{side, ExtPoly(ring, std::move(c))};
    if (res.poly.degree() != side.degree() || ring->is_zero(res.poly.coeff(0)))
        throw InternalInconsistency("residual polynomial has a vanishing end coefficient");
    return res;
}

struct Obstruction {
    std::size_t factor = 0;
    std::size_t side = 0;
    std::string description;
};

struct FactorRegularity {
    ModPoly g;
    unsigned multiplicity = 0;
    GExpansion expansion;
    PrincipalPolygon polygon;
    std::vector<ResidualPolynomial> residuals;
    std::vector<bool> residual_squarefree;
    bool all_slopes_integral = true;
    bool regular = false;
};

struct RegularityReport {
    Modulus modulus;
    std::vector<FactorRegularity> factors;
    bool regular = false;
    std::optional<Obstruction> obstruction;

    bool all_slopes_integral() const
    {
        return std::all_of(factors.begin(), factors.end(), [](FactorRegularity const & f) { return f.all_slopes_integral; });
    }
};

/* Polygon, vertex coprimality and residual squarefreeness for one
 * factor g of f mod N with multiplicity `multiplicity`. */
inline Hook<FactorRegularity> analyze_factor(IntPoly const & f, Modulus const & ctx, ModPoly const & g, unsigned multiplicity)
{
    FactorRegularity out;
    out.g = g;
    out.multiplicity = multiplicity;

    ModPoly const fbar = reduce(f, ctx);
    auto const ord = ord_mod(fbar, g);
    if (ord != multiplicity)
        throw InternalInconsistency("multiplicity of a squarefree factor differs from ord_g(f)");
    long const ell = static_cast<long>(ord);

    out.expansion = g_expansion(f, lift(g));
    GExpansion & exp = out.expansion;
    if (static_cast<long>(exp.r()) < ell)
        throw InternalInconsistency("g-expansion shorter than ord_g(f)");
    std::vector<LatticePoint> pts;
    for (long j = 0; j <= ell; ++j) {
        auto u = val_N_poly(*ctx, exp.coefficients[j]);
        if (!u)
            return u.forward<FactorRegularity>();
        exp.valuations.push_back(*u);
        pts.push_back({j, *u});
    }
    out.polygon = principal_polygon(pts, ell);

    Integer const & n = ctx->modulus();
    for (auto const & [s, us] : out.polygon.vertices) {
        Integer const scale = pow(n, static_cast<unsigned long>(us));
        std::vector<Integer> q;
        for (auto const & a : exp.coefficients[s].coeffs())
            q.push_back(divexact(a, scale));
        auto d = gcd0(reduce(make_intpoly(std::move(q)), ctx), g);
        if (!d)
            return d.forward<FactorRegularity>();
        if (!d->is_one())
            return FactorOfG{d->coeffs()};
    }

    out.all_slopes_integral = out.polygon.all_slopes_integral();
    out.regular = true;
    if (out.polygon.sides.empty())
        return out;
    auto ring = make_ext_ring(g);
    for (auto const & side : out.polygon.sides) {
        out.residuals.push_back(residual_polynomial(ring, exp, side));
        auto sq = certify_squarefree(out.residuals.back().poly);
        if (!sq)
            return sq.forward<FactorRegularity>();
        out.residual_squarefree.push_back(*sq);
        if (!*sq)
            out.regular = false;
    }
    return out;
}

/* N-regularity of f with respect to the squarefree factors in dec.
 * Hooks from any factor take precedence over a non-regular verdict. */
inline Hook<RegularityReport> regularity_report(IntPoly const & f, Modulus const & ctx, SquarefreeDecomposition const & dec)
{
    RegularityReport rep;
    rep.modulus = ctx;
    rep.regular = true;
    for (std::size_t i = 0; i < dec.factors.size(); ++i) {
        auto fr = analyze_factor(f, ctx, dec.factors[i].g, dec.factors[i].multiplicity);
        if (!fr)
            return fr.forward<RegularityReport>();
        if (!fr->regular && rep.regular) {
            rep.regular = false;
            std::size_t side = 0;
            while (fr->residual_squarefree[side])
                ++side;
            Side const & s = fr->polygon.sides[side];
            rep.obstruction = Obstruction{i, side,
                "residual polynomial of g = " + format_poly(dec.factors[i].g) + " on the side of slope -" + std::to_string(s.h) + "/" + std::to_string(s.e) + " is not squarefree"};
        }
        rep.factors.push_back(std::move(*fr));
    }
    return rep;
}

} // namespace ore

#endif /* ORE_NEWTON_HPP_ */

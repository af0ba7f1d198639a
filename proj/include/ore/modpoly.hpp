#ifndef ORE_MODPOLY_HPP_
#define ORE_MODPOLY_HPP_

#include <stdexcept>
#include <utility>
#include <vector>

#include "ore/intpoly.hpp"
#include "ore/modint.hpp"
#include "ore/poly.hpp"

namespace ore {

/* Polynomials over A = Z/NZ. */
using ModPoly = Poly<ModulusContext>;

inline ModPoly reduce(IntPoly const & f, Modulus const & ctx)
{
    std::vector<Integer> c;
    c.reserve(f.coeffs().size());
    for (auto const & a : f.coeffs())
        c.push_back(ctx->reduce(a));
    return ModPoly(ctx, std::move(c));
}

inline ModPoly make_modpoly(Modulus const & ctx, std::vector<Integer> const & c)
{
    return reduce(make_intpoly(c), ctx);
}

/* Integer representative with coefficients in [0, N). */
inline IntPoly lift(ModPoly const & f)
{
    return make_intpoly(f.coeffs());
}

/* List of (g, l), g monic squarefree and pairwise coprime, with
 * prod g^l equal to the decomposed polynomial. As produced by sfd0 the
 * multiplicities are strictly increasing; refinements that split a
 * factor may repeat a multiplicity. */
struct SquarefreeDecomposition {
    std::vector<SquarefreeFactor<ModulusContext>> factors;

    ModPoly product(Modulus const & ctx) const
    {
        ModPoly p = ModPoly::one(ctx);
        for (auto const & [g, l] : factors)
            p *= pow(g, l);
        return p;
    }
};

inline Hook<ModPoly> gcd0(ModPoly const & f, ModPoly const & g)
{
    return hooked_gcd(f, g);
}

using ModBezout = Bezout<ModulusContext>;

inline Hook<ModBezout> xgcd0(ModPoly const & f, ModPoly const & g)
{
    return hooked_xgcd(f, g);
}

inline Hook<SquarefreeDecomposition> sfd0(ModPoly const & f)
{
    auto r = hooked_sfd(f);
    if (!r)
        return r.forward<SquarefreeDecomposition>();
    return SquarefreeDecomposition{std::move(*r)};
}

inline unsigned long ord_mod(ModPoly const & h, ModPoly const & g)
{
    return order_at(h, g);
}

} // namespace ore

#endif /* ORE_MODPOLY_HPP_ */

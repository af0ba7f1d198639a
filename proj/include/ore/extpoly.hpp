#ifndef ORE_EXTPOLY_HPP_
#define ORE_EXTPOLY_HPP_

#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ore/modpoly.hpp"
#include "ore/poly.hpp"

namespace ore {

class ExtRing;
Hook<ModPoly> unit_or_factor(ExtRing const & ring, ModPoly const & alpha);

/* The finite A-algebra A1 = A[x]/(g) for a monic g of positive degree.
 * Elements are represented by their remainder modulo g. */
class ExtRing {
    ModPoly g_;

  public:
    using element = ModPoly;

    explicit ExtRing(ModPoly g) : g_(std::move(g))
    {
        if (g_.degree() < 1 || !g_.is_monic())
            throw std::invalid_argument("A[x]/(g) needs a monic g of positive degree");
    }

    ModPoly const & defining_poly() const { return g_; }
    Modulus const & base() const { return g_.ring_handle(); }

    element reduce(ModPoly const & a) const { return quotrem(a, g_).second; }
    element zero() const { return ModPoly(base()); }
    element one() const { return ModPoly::one(base()); }
    element from_int(long k) const { return ModPoly::constant(base(), base()->from_int(k)); }
    element add(element const & a, element const & b) const { return a + b; }
    element sub(element const & a, element const & b) const { return a - b; }
    element neg(element const & a) const { return -a; }
    element mul(element const & a, element const & b) const
    {
        if (a.is_zero() || b.is_zero())
            return zero();
        return reduce(a * b);
    }
    bool is_zero(element const & a) const { return a.is_zero(); }
    bool is_one(element const & a) const { return a.is_one(); }
    bool equal(element const & a, element const & b) const { return a == b; }

    std::optional<element> unit_inverse(element const & a) const
    {
        if (a.is_zero())
            return std::nullopt;
        auto r = unit_or_factor(*this, a);
        if (!r)
            return std::nullopt;
        return std::move(*r);
    }
    Hook<element> hooked_inverse(element const & a) const { return unit_or_factor(*this, a); }

    friend bool operator==(ExtRing const & a, ExtRing const & b) { return a.g_ == b.g_; }
};

using ExtRingHandle = std::shared_ptr<ExtRing const>;
using ExtPoly = Poly<ExtRing>;

inline ExtRingHandle make_ext_ring(ModPoly g)
{
    return std::make_shared<ExtRing const>(std::move(g));
}

/* Invert alpha != 0 in A1. gcd0(rep, g) = 1 yields the inverse from
 * the Bezout cofactor; a monic gcd of positive degree is a proper
 * factor of g; a non-unit leading coefficient surrenders a divisor of
 * N. */
inline Hook<ModPoly> unit_or_factor(ExtRing const & ring, ModPoly const & alpha)
{
    ModPoly const a = ring.reduce(alpha);
    if (a.is_zero())
        throw std::invalid_argument("unit_or_factor: zero is not invertible");
    if (a.degree() == 0) {
        auto inv = invert_or_divisor(*ring.base(), a.lc());
        if (!inv)
            return inv.forward<ModPoly>();
        return ModPoly::constant(ring.base(), *inv);
    }
    auto b = xgcd0(a, ring.defining_poly());
    if (!b)
        return b.forward<ModPoly>();
    if (!b->d.is_one())
        return FactorOfG{b->d.coeffs()};
    return ring.reduce(b->s);
}

inline Hook<ExtPoly> gcd1(ExtPoly const & f, ExtPoly const & g)
{
    return hooked_gcd(f, g);
}

inline Hook<std::vector<SquarefreeFactor<ExtRing>>> sfd1(ExtPoly const & f)
{
    return hooked_sfd(f);
}

/* Whether R is squarefree in A1[y], in the sense that it stays
 * squarefree modulo every maximal ideal of A1. R is first made monic
 * through the inverse of its leading coefficient. */
inline Hook<bool> certify_squarefree(ExtPoly const & r)
{
    if (r.is_zero() || r.ring().is_zero(r.coeff(0)))
        throw std::invalid_argument("certify_squarefree needs a nonzero constant term");
    auto m = make_monic(r);
    if (!m)
        return m.forward<bool>();
    auto dec = sfd1(*m);
    if (!dec)
        return dec.forward<bool>();
    for (auto const & part : *dec)
        if (part.multiplicity != 1)
            return false;
    return true;
}

/* Lift an integer polynomial into A1 = Z[x]/(N, g). */
inline ModPoly reduce_into(ExtRing const & ring, IntPoly const & a)
{
    return ring.reduce(reduce(a, ring.base()));
}

} // namespace ore

#endif /* ORE_EXTPOLY_HPP_ */

#ifndef ORE_MODINT_HPP_
#define ORE_MODINT_HPP_

#include <memory>
#include <optional>
#include <stdexcept>

#include "ore/bigint.hpp"
#include "ore/hook.hpp"

namespace ore {

/* The ring A = Z/NZ. Elements are canonical lifts in [0, N), reduced
 * eagerly by every operation.
 *
 * When small_primes_stripped() is set, the caller guarantees that every
 * prime divisor of N exceeds degree_bound(); the squarefree
 * decomposition routines rely on it. */
class ModulusContext {
    Integer n_;
    unsigned degree_bound_ = 0;
    bool stripped_ = false;

  public:
    using element = Integer;

    explicit ModulusContext(Integer n, unsigned degree_bound = 0, bool small_primes_stripped = false)
        : n_(std::move(n)), degree_bound_(degree_bound), stripped_(small_primes_stripped)
    {
        if (n_ < 2)
            throw std::invalid_argument("modulus must be >= 2");
    }

    Integer const & modulus() const { return n_; }
    unsigned degree_bound() const { return degree_bound_; }
    bool small_primes_stripped() const { return stripped_; }

    element reduce(Integer const & a) const { return mod(a, n_); }
    element zero() const { return 0; }
    element one() const { return 1; }
    element from_int(long k) const { return reduce(Integer(k)); }

    element add(element const & a, element const & b) const
    {
        element r = a + b;
        if (r >= n_)
            r -= n_;
        return r;
    }
    element sub(element const & a, element const & b) const
    {
        element r = a - b;
        if (r < 0)
            r += n_;
        return r;
    }
    element neg(element const & a) const { return a == 0 ? a : element(n_ - a); }
    element mul(element const & a, element const & b) const { return reduce(a * b); }
    bool is_zero(element const & a) const { return a == 0; }
    bool is_one(element const & a) const { return a == 1; }
    bool equal(element const & a, element const & b) const { return a == b; }

    std::optional<element> unit_inverse(element const & a) const
    {
        element inv;
        if (!mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), n_.get_mpz_t()))
            return std::nullopt;
        return inv;
    }

    Hook<element> hooked_inverse(element const & a) const;

    friend bool operator==(ModulusContext const & a, ModulusContext const & b) { return a.n_ == b.n_; }
};

using Modulus = std::shared_ptr<ModulusContext const>;

inline Modulus make_modulus(Integer n, unsigned degree_bound = 0, bool small_primes_stripped = false)
{
    return std::make_shared<ModulusContext const>(std::move(n), degree_bound, small_primes_stripped);
}

/* The positive divisor m of N such that a = m * unit in Z/NZ. Elements
 * generating the same ideal are associates, so this is gcd(lift(a), N);
 * it is N when a = 0. */
inline Integer gcd_with_modulus(ModulusContext const & ctx, Integer const & a)
{
    return gcd(ctx.reduce(a), ctx.modulus());
}

inline Hook<Integer> invert_or_divisor(ModulusContext const & ctx, Integer const & a)
{
    Integer const r = ctx.reduce(a);
    if (r == 0)
        throw std::invalid_argument("invert_or_divisor: zero has no inverse");
    Integer const m = gcd(r, ctx.modulus());
    if (m != 1)
        return DivisorOfN{m};
    return *ctx.unit_inverse(r);
}

inline Hook<Integer> ModulusContext::hooked_inverse(element const & a) const
{
    return invert_or_divisor(*this, a);
}

/* N-adic valuation with a hook. Writes |a| = N^k b and returns k when
 * gcd(b mod N, N) = 1; otherwise the first nonzero remainder shares a
 * proper factor with N, which is returned. */
inline Hook<long> val_N(ModulusContext const & ctx, Integer const & a)
{
    if (a == 0)
        throw std::invalid_argument("val_N: zero has infinite valuation");
    Integer const & n = ctx.modulus();
    Integer q = abs(a);
    Integer r = 0;
    long value = -1;
    while (r == 0) {
        ++value;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
    }
    Integer const d = gcd(r, n);
    if (d != 1)
        return DivisorOfN{d};
    return value;
}

} // namespace ore

#endif /* ORE_MODINT_HPP_ */

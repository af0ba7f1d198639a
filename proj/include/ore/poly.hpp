#ifndef ORE_POLY_HPP_
#define ORE_POLY_HPP_

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ore/hook.hpp"

namespace ore {

/* Dense univariate polynomials over a coefficient ring object.
 *
 * A Ring provides `element`, zero(), one(), from_int(), add/sub/neg/mul,
 * is_zero/is_one/equal and unit_inverse() returning an optional. Rings
 * that can surrender factorization information also provide
 * hooked_inverse() returning a Hook.
 *
 * Coefficients are degree-ascending and the leading stored coefficient
 * is nonzero; the zero polynomial has no coefficients. */
template <class Ring>
class Poly {
  public:
    using ring_type = Ring;
    using element = typename Ring::element;
    using ring_ptr = std::shared_ptr<Ring const>;

  private:
    ring_ptr ring_;
    std::vector<element> c_;

    void trim()
    {
        while (!c_.empty() && ring_->is_zero(c_.back()))
            c_.pop_back();
    }

  public:
    Poly() = default;
    explicit Poly(ring_ptr r) : ring_(std::move(r)) {}
    Poly(ring_ptr r, std::vector<element> c) : ring_(std::move(r)), c_(std::move(c)) { trim(); }

    static Poly constant(ring_ptr r, element a) { return Poly(std::move(r), std::vector<element>{std::move(a)}); }
    static Poly one(ring_ptr r)
    {
        auto e = r->one();
        return constant(std::move(r), std::move(e));
    }
    static Poly monomial(ring_ptr r, element a, std::size_t k)
    {
        std::vector<element> c(k + 1, r->zero());
        c[k] = std::move(a);
        return Poly(std::move(r), std::move(c));
    }
    static Poly variable(ring_ptr r)
    {
        auto e = r->one();
        return monomial(std::move(r), std::move(e), 1);
    }

    Ring const & ring() const { return *ring_; }
    ring_ptr const & ring_handle() const { return ring_; }
    std::vector<element> const & coeffs() const { return c_; }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && ring_->is_one(c_[0]); }
    bool is_monic() const { return !c_.empty() && ring_->is_one(c_.back()); }
    element const & lc() const
    {
        if (c_.empty())
            throw std::logic_error("leading coefficient of the zero polynomial");
        return c_.back();
    }
    element coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ring_->zero(); }

    Poly scaled(element const & a) const
    {
        std::vector<element> c;
        c.reserve(c_.size());
        for (auto const & x : c_)
            c.push_back(ring_->mul(a, x));
        return Poly(ring_, std::move(c));
    }

    Poly shifted(std::size_t k) const
    {
        if (is_zero())
            return *this;
        std::vector<element> c(k, ring_->zero());
        c.insert(c.end(), c_.begin(), c_.end());
        return Poly(ring_, std::move(c));
    }

    Poly derivative() const
    {
        std::vector<element> c;
        for (std::size_t i = 1; i < c_.size(); ++i)
            c.push_back(ring_->mul(ring_->from_int(static_cast<long>(i)), c_[i]));
        return Poly(ring_, std::move(c));
    }

    friend Poly operator+(Poly const & a, Poly const & b)
    {
        Ring const & R = a.common_ring(b);
        std::vector<element> c(std::max(a.c_.size(), b.c_.size()), R.zero());
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = R.add(a.coeff(i), b.coeff(i));
        return Poly(a.ring_ ? a.ring_ : b.ring_, std::move(c));
    }
    friend Poly operator-(Poly const & a, Poly const & b)
    {
        Ring const & R = a.common_ring(b);
        std::vector<element> c(std::max(a.c_.size(), b.c_.size()), R.zero());
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = R.sub(a.coeff(i), b.coeff(i));
        return Poly(a.ring_ ? a.ring_ : b.ring_, std::move(c));
    }
    friend Poly operator-(Poly const & a)
    {
        std::vector<element> c;
        for (auto const & x : a.c_)
            c.push_back(a.ring_->neg(x));
        return Poly(a.ring_, std::move(c));
    }
    friend Poly operator*(Poly const & a, Poly const & b)
    {
        Ring const & R = a.common_ring(b);
        if (a.is_zero() || b.is_zero())
            return Poly(a.ring_ ? a.ring_ : b.ring_);
        std::vector<element> c(a.c_.size() + b.c_.size() - 1, R.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (R.is_zero(a.c_[i]))
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] = R.add(c[i + j], R.mul(a.c_[i], b.c_[j]));
        }
        return Poly(a.ring_, std::move(c));
    }
    Poly & operator+=(Poly const & b) { return *this = *this + b; }
    Poly & operator-=(Poly const & b) { return *this = *this - b; }
    Poly & operator*=(Poly const & b) { return *this = *this * b; }

    friend bool operator==(Poly const & a, Poly const & b)
    {
        if (a.c_.size() != b.c_.size())
            return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!a.ring_->equal(a.c_[i], b.c_[i]))
                return false;
        return true;
    }

  private:
    Ring const & common_ring(Poly const & b) const
    {
        if (!ring_ && !b.ring_)
            throw std::logic_error("polynomial without a coefficient ring");
        if (!ring_)
            return *b.ring_;
        if (b.ring_ && ring_ != b.ring_ && !(*ring_ == *b.ring_))
            throw std::invalid_argument("polynomials over different rings");
        return *ring_;
    }
};

template <class Ring>
Poly<Ring> pow(Poly<Ring> const & a, unsigned long k)
{
    Poly<Ring> r = Poly<Ring>::one(a.ring_handle());
    Poly<Ring> b = a;
    for (; k; k >>= 1) {
        if (k & 1)
            r *= b;
        if (k > 1)
            b *= b;
    }
    return r;
}

/* Division with remainder by an almost-monic g: h = g q + r with
 * deg r < deg g. A non-unit leading coefficient is a contract
 * violation; callers normalize through a hooked inverse first. */
template <class Ring>
std::pair<Poly<Ring>, Poly<Ring>> quotrem(Poly<Ring> const & h, Poly<Ring> const & g)
{
    using element = typename Ring::element;
    if (g.is_zero())
        throw std::invalid_argument("quotrem: division by zero polynomial");
    Ring const & R = g.ring();
    element inv;
    if (R.is_one(g.lc())) {
        inv = R.one();
    } else {
        auto u = R.unit_inverse(g.lc());
        if (!u)
            throw std::invalid_argument("quotrem: divisor is not almost-monic");
        inv = std::move(*u);
    }
    long const dg = g.degree();
    std::vector<element> r = h.coeffs();
    if (h.degree() < dg)
        return {Poly<Ring>(g.ring_handle()), h};
    std::vector<element> q(h.degree() - dg + 1, R.zero());
    auto const & gc = g.coeffs();
    for (long i = h.degree(); i >= dg; --i) {
        if (R.is_zero(r[i]))
            continue;
        element c = R.mul(r[i], inv);
        for (long j = 0; j <= dg; ++j)
            r[i - dg + j] = R.sub(r[i - dg + j], R.mul(c, gc[j]));
        q[i - dg] = std::move(c);
    }
    r.resize(dg);
    return {Poly<Ring>(g.ring_handle(), std::move(q)), Poly<Ring>(g.ring_handle(), std::move(r))};
}

/* Quotient of a division that must be exact. */
template <class Ring>
Poly<Ring> exact_quotient(Poly<Ring> const & h, Poly<Ring> const & g)
{
    auto [q, r] = quotrem(h, g);
    if (!r.is_zero())
        throw InternalInconsistency("exact polynomial division left a remainder");
    return q;
}

/* Normalize to a monic associate through the ring's hooked inverse. */
template <class Ring>
Hook<Poly<Ring>> make_monic(Poly<Ring> const & f)
{
    if (f.is_zero())
        throw std::invalid_argument("make_monic: zero polynomial");
    if (f.is_monic())
        return f;
    auto inv = f.ring().hooked_inverse(f.lc());
    if (!inv)
        return inv.template forward<Poly<Ring>>();
    return f.scaled(*inv);
}

/* Euclid's algorithm with hooks: the leading coefficient of the divisor
 * is inverted at every step, and a non-unit surrenders the information
 * the ring's hooked_inverse() produces. On success d is monic with
 * fR[x] + gR[x] = dR[x]. */
template <class Ring>
Hook<Poly<Ring>> hooked_gcd(Poly<Ring> f, Poly<Ring> g)
{
    if (f.is_zero() && g.is_zero())
        throw std::invalid_argument("gcd of two zero polynomials is not defined");
    while (!g.is_zero()) {
        auto inv = g.ring().hooked_inverse(g.lc());
        if (!inv)
            return inv.template forward<Poly<Ring>>();
        g = g.scaled(*inv);
        auto qr = quotrem(f, g);
        f = std::move(g);
        g = std::move(qr.second);
    }
    return make_monic(f);
}

template <class Ring>
struct Bezout {
    Poly<Ring> d; /* monic */
    Poly<Ring> s; /* s f + t g = d */
    Poly<Ring> t;
};

template <class Ring>
Hook<Bezout<Ring>> hooked_xgcd(Poly<Ring> f, Poly<Ring> g)
{
    using P = Poly<Ring>;
    if (f.is_zero() && g.is_zero())
        throw std::invalid_argument("gcd of two zero polynomials is not defined");
    auto const & rp = f.is_zero() ? g.ring_handle() : f.ring_handle();
    P sf = P::one(rp), tf(rp), sg(rp), tg = P::one(rp);
    while (!g.is_zero()) {
        auto inv = g.ring().hooked_inverse(g.lc());
        if (!inv)
            return inv.template forward<Bezout<Ring>>();
        g = g.scaled(*inv);
        sg = sg.scaled(*inv);
        tg = tg.scaled(*inv);
        auto [q, r] = quotrem(f, g);
        P sr = sf - q * sg;
        P tr = tf - q * tg;
        f = std::move(g);
        sf = std::move(sg);
        tf = std::move(tg);
        g = std::move(r);
        sg = std::move(sr);
        tg = std::move(tr);
    }
    if (!f.is_monic()) {
        auto inv = f.ring().hooked_inverse(f.lc());
        if (!inv)
            return inv.template forward<Bezout<Ring>>();
        f = f.scaled(*inv);
        sf = sf.scaled(*inv);
        tf = tf.scaled(*inv);
    }
    return Bezout<Ring>{std::move(f), std::move(sf), std::move(tf)};
}

template <class Ring>
struct SquarefreeFactor {
    Poly<Ring> g;
    unsigned multiplicity;
};

/* Squarefree decomposition with hooks, following the classical
 * derivative-gcd scheme. Requires f monic with deg f smaller than the
 * characteristic of every residue field. Returns (t_j, j) with
 * strictly increasing j >= 1 and f = prod t_j^j. */
template <class Ring>
Hook<std::vector<SquarefreeFactor<Ring>>> hooked_sfd(Poly<Ring> f)
{
    using Result = std::vector<SquarefreeFactor<Ring>>;
    if (!f.is_monic())
        throw std::invalid_argument("squarefree decomposition needs a monic polynomial");
    Result out;
    long const bound = f.degree() + 1;
    auto d = hooked_gcd(f, f.derivative());
    if (!d)
        return d.template forward<Result>();
    Poly<Ring> g = exact_quotient(f, *d);
    unsigned j = 1;
    while (!f.is_one()) {
        if (static_cast<long>(j) > bound)
            throw InternalInconsistency("squarefree decomposition did not terminate");
        f = exact_quotient(f, g);
        auto h = hooked_gcd(f, g);
        if (!h)
            return h.template forward<Result>();
        Poly<Ring> t = exact_quotient(g, *h);
        if (!t.is_one())
            out.push_back({std::move(t), j});
        g = std::move(*h);
        ++j;
    }
    return out;
}

/* ord_g(h): the largest k with g^k dividing h. g must be monic of
 * positive degree and h nonzero. */
template <class Ring>
unsigned long order_at(Poly<Ring> h, Poly<Ring> const & g)
{
    if (h.is_zero())
        throw std::invalid_argument("order of the zero polynomial is infinite");
    if (g.degree() < 1 || !g.is_monic())
        throw std::invalid_argument("order_at needs a monic divisor of positive degree");
    unsigned long k = 0;
    for (;;) {
        auto [q, r] = quotrem(h, g);
        if (!r.is_zero())
            return k;
        h = std::move(q);
        ++k;
    }
}

} // namespace ore

#endif /* ORE_POLY_HPP_ */

// Independent reference arithmetic for the tests: machine-word fields
// and trial division. Shares no code with the library.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

inline i64 md(i64 a, i64 p)
{
    a %= p;
    return a < 0 ? a + p : a;
}

inline i64 inv_mod(i64 a, i64 p)
{
    i64 r0 = md(a, p), r1 = p, s0 = 1, s1 = 0;
    while (r1) {
        i64 q = r0 / r1;
        std::swap(r0, r1);
        r1 -= q * r0;
        std::swap(s0, s1);
        s1 -= q * s0;
    }
    if (r0 != 1)
        throw std::domain_error("not invertible");
    return md(s0, p);
}

inline std::map<i64, int> factorize(i64 n)
{
    std::map<i64, int> out;
    for (i64 d = 2; d * d <= n; ++d)
        while (n % d == 0) {
            out[d]++;
            n /= d;
        }
    if (n > 1)
        out[n]++;
    return out;
}

inline bool is_prime(i64 n)
{
    if (n < 2)
        return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

// prime field
struct Fp {
    i64 p;
    using E = i64;
    E zero() const { return 0; }
    E one() const { return 1; }
    E add(E a, E b) const { return md(a + b, p); }
    E sub(E a, E b) const { return md(a - b, p); }
    E mul(E a, E b) const { return md(a * b, p); }
    E inv(E a) const { return inv_mod(a, p); }
    E from(i64 k) const { return md(k, p); }
    bool is_zero(E a) const { return a == 0; }
};

template <class F>
using Pol = std::vector<typename F::E>;

template <class F>
void trim(F const & k, Pol<F> & a)
{
    while (!a.empty() && k.is_zero(a.back()))
        a.pop_back();
}

template <class F>
Pol<F> sub(F const & k, Pol<F> a, Pol<F> const & b)
{
    if (a.size() < b.size())
        a.resize(b.size(), k.zero());
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] = k.sub(a[i], b[i]);
    trim(k, a);
    return a;
}

template <class F>
Pol<F> mul(F const & k, Pol<F> const & a, Pol<F> const & b)
{
    if (a.empty() || b.empty())
        return {};
    Pol<F> c(a.size() + b.size() - 1, k.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = k.add(c[i + j], k.mul(a[i], b[j]));
    trim(k, c);
    return c;
}

template <class F>
std::pair<Pol<F>, Pol<F>> divmod(F const & k, Pol<F> a, Pol<F> const & b)
{
    if (b.empty())
        throw std::domain_error("division by zero");
    if (a.size() < b.size())
        return {{}, a};
    Pol<F> q(a.size() - b.size() + 1, k.zero());
    auto const il = k.inv(b.back());
    long const db = static_cast<long>(b.size()) - 1;
    for (long i = static_cast<long>(a.size()) - 1; i >= db; --i) {
        auto c = k.mul(a[i], il);
        q[i - db] = c;
        for (long j = 0; j <= db; ++j)
            a[i - db + j] = k.sub(a[i - db + j], k.mul(c, b[j]));
    }
    a.resize(b.size() - 1);
    trim(k, a);
    trim(k, q);
    return {q, a};
}

template <class F>
Pol<F> monic(F const & k, Pol<F> a)
{
    if (a.empty())
        return a;
    auto il = k.inv(a.back());
    for (auto & x : a)
        x = k.mul(x, il);
    return a;
}

template <class F>
Pol<F> gcd(F const & k, Pol<F> a, Pol<F> b)
{
    while (!b.empty()) {
        auto r = divmod(k, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(k, a);
}

template <class F>
Pol<F> deriv(F const & k, Pol<F> const & a)
{
    Pol<F> d;
    for (std::size_t i = 1; i < a.size(); ++i)
        d.push_back(k.mul(k.from(static_cast<i64>(i)), a[i]));
    trim(k, d);
    return d;
}

// Yun's algorithm; valid when deg a < char.
template <class F>
std::vector<std::pair<Pol<F>, int>> yun(F const & k, Pol<F> a)
{
    a = monic(k, a);
    std::vector<std::pair<Pol<F>, int>> out;
    auto b = deriv(k, a);
    auto c = gcd(k, a, b);
    auto w = divmod(k, a, c).first;
    auto y = divmod(k, b, c).first;
    auto z = sub(k, y, deriv(k, w));
    int i = 1;
    while (w.size() > 1) {
        auto g = gcd(k, w, z);
        if (g.size() > 1)
            out.emplace_back(g, i);
        w = divmod(k, w, g).first;
        y = divmod(k, z, g).first;
        z = sub(k, y, deriv(k, w));
        ++i;
    }
    return out;
}

// F_p[t]/(m) for an irreducible monic m over F_p
struct Fq {
    Fp base;
    Pol<Fp> m;
    using E = Pol<Fp>;
    E zero() const { return {}; }
    E one() const { return {1}; }
    E red(E a) const { return divmod(base, a, m).second; }
    E add(E const & a, E const & b) const
    {
        E c = a;
        if (c.size() < b.size())
            c.resize(b.size(), 0);
        for (std::size_t i = 0; i < b.size(); ++i)
            c[i] = base.add(c[i], b[i]);
        trim(base, c);
        return c;
    }
    E sub(E const & a, E const & b) const { return oracle::sub(base, a, b); }
    E mul(E const & a, E const & b) const { return red(oracle::mul(base, a, b)); }
    E from(i64 k) const
    {
        E e{base.from(k)};
        trim(base, e);
        return e;
    }
    bool is_zero(E const & a) const { return a.empty(); }
    E inv(E const & a) const
    {
        // extended Euclid over F_p
        E r0 = red(a), r1 = m, s0 = {1}, s1 = {};
        while (!r1.empty()) {
            auto [q, r] = divmod(base, r0, r1);
            r0 = std::move(r1);
            r1 = std::move(r);
            auto s = oracle::sub(base, s0, oracle::mul(base, q, s1));
            s0 = std::move(s1);
            s1 = std::move(s);
        }
        if (r0.size() != 1)
            throw std::domain_error("not invertible in F_q");
        auto c = base.inv(r0[0]);
        for (auto & x : s0)
            x = base.mul(x, c);
        return red(s0);
    }
};

// irreducibility over F_p by trial division with every monic of degree <= deg/2
inline bool irreducible(Fp const & k, Pol<Fp> const & g)
{
    int const d = static_cast<int>(g.size()) - 1;
    for (int e = 1; 2 * e <= d; ++e) {
        Pol<Fp> h(e + 1, 0);
        h[e] = 1;
        i64 total = 1;
        for (int i = 0; i < e; ++i)
            total *= k.p;
        for (i64 code = 0; code < total; ++code) {
            i64 c = code;
            for (int i = 0; i < e; ++i) {
                h[i] = c % k.p;
                c /= k.p;
            }
            if (divmod(k, g, h).second.empty())
                return false;
        }
    }
    return d >= 1;
}

} // namespace oracle

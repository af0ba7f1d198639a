#ifndef ORE_BASIS_HPP_
#define ORE_BASIS_HPP_

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ore/matrix.hpp"
#include "ore/newton.hpp"

namespace ore {

enum class Tristate { unknown, yes, no };

inline char const * to_string(Tristate t)
{
    switch (t) {
    case Tristate::yes:
        return "yes";
    case Tristate::no:
        return "no";
    default:
        return "unknown";
    }
}

/* What can be said about squarefreeness of m without factoring it. */
inline Tristate cheap_squarefree_status(Integer const & m)
{
    if (m <= 1)
        throw std::invalid_argument("squarefree status of an integer <= 1");
    if (is_probable_prime(m))
        return Tristate::yes;
    if (perfect_root(m).second > 1)
        return Tristate::no;
    return Tristate::unknown;
}

/* numerator(theta) / N^exponent. */
struct BasisElement {
    IntPoly numerator;
    unsigned long exponent = 0;
    std::size_t i = 0, j = 0, k = 0;
};

struct BasisCandidate {
    Integer modulus;
    std::vector<BasisElement> elements;
    Tristate modulus_squarefree = Tristate::unknown;
    bool all_slopes_integral = true;

    /* Either N is squarefree or every slope is an integer. */
    bool valid() const { return all_slopes_integral || modulus_squarefree == Tristate::yes; }
};

inline BasisCandidate basis_candidate(RegularityReport const & rep, Tristate modulus_squarefree = Tristate::unknown)
{
    if (!rep.regular)
        throw std::invalid_argument("basis_candidate: report is not regular");
    BasisCandidate cand;
    cand.modulus = rep.modulus->modulus();
    cand.modulus_squarefree = modulus_squarefree;
    cand.all_slopes_integral = rep.all_slopes_integral();
    for (std::size_t i = 0; i < rep.factors.size(); ++i) {
        auto const & fr = rep.factors[i];
        long const deg = fr.g.degree();
        for (long j = 1; j <= fr.polygon.length; ++j) {
            Integer const e = floor(fr.polygon.y(j));
            for (long k = 0; k < deg; ++k)
                cand.elements.push_back({fr.expansion.quotient(j).shifted(k), e.get_ui(), i + 1, static_cast<std::size_t>(j), static_cast<std::size_t>(k)});
        }
    }
    return cand;
}

/* sum_i (floor y_{i,1} + ... + floor y_{i,l_i}) deg g_i */
inline unsigned long index_exponent(RegularityReport const & rep)
{
    if (!rep.regular)
        throw std::invalid_argument("index_exponent: report is not regular");
    unsigned long total = 0;
    for (auto const & fr : rep.factors) {
        unsigned long s = 0;
        for (auto const & y : fr.polygon.ordinates)
            s += floor(y).get_ui();
        total += s * static_cast<unsigned long>(fr.g.degree());
    }
    return total;
}

/* Row k holds the coordinates of theta^k * a(theta) in the power
 * basis, f monic of degree n. */
inline IntMatrix multiplication_matrix(IntPoly const & a, IntPoly const & f)
{
    std::size_t const n = static_cast<std::size_t>(f.degree());
    IntMatrix m(n, n);
    IntPoly cur = quotrem(a, f).second;
    for (std::size_t k = 0; k < n; ++k) {
        auto v = coefficient_vector(cur, n);
        for (std::size_t c = 0; c < n; ++c)
            m(k, c) = v[c];
        cur = quotrem(cur.shifted(1), f).second;
    }
    return m;
}

/* beta = numerator(theta)/D is integral iff its characteristic
 * polynomial has integer coefficients. */
inline bool integrality_check(IntPoly const & numerator, Integer const & d, IntPoly const & f)
{
    if (d < 1)
        throw std::invalid_argument("integrality_check: denominator must be positive");
    IntMatrix const m = multiplication_matrix(numerator, f);
    RatMatrix q(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            q(i, j) = Rational(m(i, j), d);
            q(i, j).canonicalize();
        }
    for (auto const & c : characteristic_polynomial(q))
        if (c.get_den() != 1)
            return false;
    return true;
}

/* A free Z-module of rank n inside K given by D^{-1} times the row
 * span of an integer matrix, kept in Hermite normal form with the
 * common content of D and the matrix divided out. */
struct ModuleBasis {
    Integer denominator = 1;
    IntMatrix matrix;

    std::size_t degree() const { return matrix.rows(); }
    Integer determinant() const
    {
        Integer d = 1;
        for (std::size_t i = 0; i < matrix.rows(); ++i)
            d *= matrix(i, i);
        return d;
    }
    /* (M : Z[theta]) as a rational number D^n / det. */
    Rational index_over_power_basis() const
    {
        Rational r(pow(denominator, static_cast<unsigned long>(degree())), determinant());
        r.canonicalize();
        return r;
    }
    IntPoly row_poly(std::size_t i) const { return make_intpoly(matrix.row(i)); }

    friend bool operator==(ModuleBasis const &, ModuleBasis const &) = default;
};

inline ModuleBasis normalize_module(Integer d, IntMatrix rows)
{
    if (d < 1)
        throw std::invalid_argument("module denominator must be positive");
    IntMatrix h = hermite_normal_form(std::move(rows));
    Integer g = d;
    for (std::size_t i = 0; i < h.rows() && g != 1; ++i)
        for (std::size_t j = i; j < h.cols() && g != 1; ++j)
            g = gcd(g, h(i, j));
    if (g != 1) {
        d = divexact(d, g);
        for (std::size_t i = 0; i < h.rows(); ++i)
            for (std::size_t j = i; j < h.cols(); ++j)
                h(i, j) = divexact(h(i, j), g);
    }
    return ModuleBasis{std::move(d), std::move(h)};
}

inline ModuleBasis power_basis_module(std::size_t n)
{
    return ModuleBasis{1, IntMatrix::identity(n)};
}

inline ModuleBasis to_module_basis(BasisCandidate const & cand, IntPoly const & f)
{
    std::size_t const n = static_cast<std::size_t>(f.degree());
    if (cand.elements.size() != n)
        throw InternalInconsistency("candidate has " + std::to_string(cand.elements.size()) + " elements for a field of degree " + std::to_string(n));
    unsigned long emax = 0;
    for (auto const & el : cand.elements)
        emax = std::max(emax, el.exponent);
    IntMatrix rows(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        auto const & el = cand.elements[r];
        Integer const scale = pow(cand.modulus, emax - el.exponent);
        auto v = coefficient_vector(el.numerator, n);
        for (std::size_t c = 0; c < n; ++c)
            rows(r, c) = v[c] * scale;
    }
    return normalize_module(pow(cand.modulus, emax), std::move(rows));
}

/* Determinant of the numerators alpha_{i,j,k} in the power basis. */
inline Integer numerator_determinant(BasisCandidate const & cand, std::size_t n)
{
    IntMatrix m(n, n);
    if (cand.elements.size() != n)
        throw InternalInconsistency("candidate size differs from the degree");
    for (std::size_t r = 0; r < n; ++r) {
        auto v = coefficient_vector(cand.elements[r].numerator, n);
        for (std::size_t c = 0; c < n; ++c)
            m(r, c) = v[c];
    }
    return determinant(std::move(m));
}

inline bool numerators_unimodular(BasisCandidate const & cand, std::size_t n)
{
    return gcd(numerator_determinant(cand, n), cand.modulus) == 1;
}

/* Tr(theta^k) for 0 <= k < count, by Newton's identities. */
inline std::vector<Integer> power_sums(IntPoly const & f, std::size_t count)
{
    long const n = f.degree();
    if (n < 1 || !f.is_monic())
        throw std::invalid_argument("power_sums needs a monic polynomial");
    auto c = [&](long i) { return f.coeff(static_cast<std::size_t>(i)); };
    std::vector<Integer> s(count);
    for (std::size_t k = 0; k < count; ++k) {
        long const kk = static_cast<long>(k);
        if (k == 0) {
            s[0] = n;
            continue;
        }
        Integer acc = kk <= n ? Integer(kk * c(n - kk)) : Integer(0);
        for (long i = 1; i <= std::min(kk - 1, n); ++i)
            acc += c(n - i) * s[k - i];
        s[k] = -acc;
    }
    return s;
}

/* det(Tr(w_i w_j)) for the basis w_i = row_i(theta)/D. */
inline Rational module_discriminant(ModuleBasis const & mb, IntPoly const & f)
{
    std::size_t const n = mb.degree();
    auto const s = power_sums(f, 2 * n - 1);
    IntMatrix p(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            p(a, b) = s[a + b];
    IntMatrix rt(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rt(j, i) = mb.matrix(i, j);
    IntMatrix const t = mb.matrix * p * rt;
    Rational d(determinant(t), pow(mb.denominator, 2 * n));
    d.canonicalize();
    return d;
}

/* Every basis element is integral over Z. */
inline bool module_is_integral(ModuleBasis const & mb, IntPoly const & f)
{
    for (std::size_t i = 0; i < mb.degree(); ++i)
        if (!integrality_check(mb.row_poly(i), mb.denominator, f))
            return false;
    return true;
}

} // namespace ore

#endif /* ORE_BASIS_HPP_ */

#ifndef ORE_INTPOLY_HPP_
#define ORE_INTPOLY_HPP_

#include <cctype>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ore/bigint.hpp"
#include "ore/poly.hpp"

namespace ore {

struct IntegerRing {
    using element = Integer;
    element zero() const { return 0; }
    element one() const { return 1; }
    element from_int(long k) const { return k; }
    element add(element const & a, element const & b) const { return a + b; }
    element sub(element const & a, element const & b) const { return a - b; }
    element neg(element const & a) const { return -a; }
    element mul(element const & a, element const & b) const { return a * b; }
    bool is_zero(element const & a) const { return a == 0; }
    bool is_one(element const & a) const { return a == 1; }
    bool equal(element const & a, element const & b) const { return a == b; }
    std::optional<element> unit_inverse(element const & a) const
    {
        if (a == 1 || a == -1)
            return a;
        return std::nullopt;
    }
    friend bool operator==(IntegerRing const &, IntegerRing const &) { return true; }
};

using IntPoly = Poly<IntegerRing>;

inline std::shared_ptr<IntegerRing const> const & integers()
{
    static auto const zz = std::make_shared<IntegerRing const>();
    return zz;
}

inline IntPoly make_intpoly(std::vector<Integer> c)
{
    return IntPoly(integers(), std::move(c));
}

inline IntPoly int_monomial(Integer a, std::size_t k)
{
    return IntPoly::monomial(integers(), std::move(a), k);
}

/* Polynomial text format: degree-ascending list of decimal integers,
 * e.g. "[-49, 0, 0, 1]" for x^3 - 49. Entries may be quoted. */
inline std::vector<Integer> parse_coefficient_list(std::string_view s)
{
    auto skip = [&] {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
    };
    skip();
    if (s.empty() || s.front() != '[')
        throw std::invalid_argument("coefficient list must start with '['");
    s.remove_prefix(1);
    std::vector<Integer> out;
    skip();
    if (!s.empty() && s.front() == ']') {
        s.remove_prefix(1);
    } else {
        for (;;) {
            skip();
            bool quoted = !s.empty() && s.front() == '"';
            if (quoted)
                s.remove_prefix(1);
            std::size_t len = 0;
            while (len < s.size() && s[len] != ',' && s[len] != ']' && s[len] != '"')
                ++len;
            out.push_back(parse_integer(s.substr(0, len)));
            s.remove_prefix(len);
            if (quoted) {
                if (s.empty() || s.front() != '"')
                    throw std::invalid_argument("unterminated quoted coefficient");
                s.remove_prefix(1);
            }
            skip();
            if (s.empty())
                throw std::invalid_argument("coefficient list is missing ']'");
            if (s.front() == ']') {
                s.remove_prefix(1);
                break;
            }
            if (s.front() != ',')
                throw std::invalid_argument("expected ',' in coefficient list");
            s.remove_prefix(1);
        }
    }
    skip();
    if (!s.empty())
        throw std::invalid_argument("trailing characters after coefficient list");
    return out;
}

inline IntPoly parse_intpoly(std::string_view s)
{
    return make_intpoly(parse_coefficient_list(s));
}

inline std::string format_coefficients(std::vector<Integer> const & c)
{
    std::string out = "[";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i)
            out += ", ";
        out += to_decimal(c[i]);
    }
    return out + "]";
}

template <class Ring>
std::string format_poly(Poly<Ring> const & p)
{
    return format_coefficients(p.coeffs());
}

/* Coefficients padded with zeros to length n. */
inline std::vector<Integer> coefficient_vector(IntPoly const & p, std::size_t n)
{
    if (p.degree() >= static_cast<long>(n))
        throw std::invalid_argument("polynomial does not fit the requested length");
    std::vector<Integer> v(n, 0);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        v[i] = p.coeffs()[i];
    return v;
}

} // namespace ore

#endif /* ORE_INTPOLY_HPP_ */

#ifndef ORE_BIGINT_HPP_
#define ORE_BIGINT_HPP_

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace ore {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_decimal(Integer const & a)
{
    return a.get_str(10);
}

/* Parse an optionally signed decimal integer. Surrounding blanks are
 * allowed, nothing else is. */
inline Integer parse_integer(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    std::string digits(s);
    std::size_t start = 0;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+'))
        start = 1;
    if (start == digits.size())
        throw std::invalid_argument("not a decimal integer: '" + digits + "'");
    for (std::size_t i = start; i < digits.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(digits[i])))
            throw std::invalid_argument("not a decimal integer: '" + digits + "'");
    if (digits[0] == '+')
        digits.erase(0, 1);
    return Integer(digits, 10);
}

inline std::size_t bit_length(Integer const & a)
{
    if (a == 0)
        return 0;
    return mpz_sizeinbase(a.get_mpz_t(), 2);
}

inline Integer gcd(Integer const & a, Integer const & b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/* Euclidean remainder, 0 <= r < |m|. */
inline Integer mod(Integer const & a, Integer const & m)
{
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

/* Floor division: a = q*b + r with 0 <= r < b, for b > 0. */
inline std::pair<Integer, Integer> floor_divmod(Integer const & a, Integer const & b)
{
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return {q, r};
}

inline Integer divexact(Integer const & a, Integer const & b)
{
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline bool divides(Integer const & d, Integer const & a)
{
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Integer pow(Integer const & a, unsigned long k)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), k);
    return r;
}

inline Integer floor(Rational const & q)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

/* Write n = r^k with k maximal (n >= 2). Returns (r, k); k == 1 when n
 * is not a perfect power. */
inline std::pair<Integer, unsigned long> perfect_root(Integer const & n)
{
    if (n < 2)
        throw std::invalid_argument("perfect_root: argument must be >= 2");
    Integer r = n;
    unsigned long k = 1;
    for (;;) {
        if (!mpz_perfect_power_p(r.get_mpz_t()))
            break;
        bool found = false;
        std::size_t const bits = bit_length(r);
        /* smallest prime exponent first; primality of the exponent is
         * implied by trying increasing exponents */
        for (unsigned long e = 2; e <= bits; ++e) {
            Integer root;
            if (mpz_root(root.get_mpz_t(), r.get_mpz_t(), e)) {
                r = root;
                k *= e;
                found = true;
                break;
            }
        }
        if (!found)
            break;
    }
    return {r, k};
}

inline bool is_probable_prime(Integer const & n)
{
    if (n < 2)
        return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

} // namespace ore

#endif /* ORE_BIGINT_HPP_ */

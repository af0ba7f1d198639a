#pragma once

#include <random>
#include <vector>

#include "ore/ore.hpp"
#include "oracle.hpp"

namespace support {

using namespace ore;

inline oracle::Pol<oracle::Fp> to_fp(std::vector<Integer> const & c, long p)
{
    oracle::Fp k{p};
    oracle::Pol<oracle::Fp> out;
    for (auto const & a : c)
        out.push_back(mod(a, Integer(p)).get_si());
    oracle::trim(k, out);
    return out;
}

template <class Ring>
oracle::Pol<oracle::Fp> to_fp(Poly<Ring> const & f, long p)
{
    return to_fp(f.coeffs(), p);
}

inline IntPoly random_monic(std::mt19937_64 & rng, long degree, long bound)
{
    std::uniform_int_distribution<long> d(-bound, bound);
    std::vector<Integer> c;
    for (long i = 0; i < degree; ++i)
        c.push_back(d(rng));
    c.push_back(1);
    return make_intpoly(c);
}

inline IntPoly random_poly(std::mt19937_64 & rng, long max_degree, long bound)
{
    std::uniform_int_distribution<long> d(-bound, bound);
    std::vector<Integer> c;
    for (long i = 0; i <= max_degree; ++i)
        c.push_back(d(rng));
    return make_intpoly(c);
}

inline std::vector<long> primes_between(long lo, long hi)
{
    std::vector<long> ps;
    for (long p = lo; p < hi; ++p)
        if (oracle::is_prime(p))
            ps.push_back(p);
    return ps;
}

inline IntMatrix row_matrix(std::vector<std::vector<long>> const & rows)
{
    IntMatrix m;
    for (auto const & r : rows) {
        std::vector<Integer> v(r.begin(), r.end());
        m.append_row(v);
    }
    return m;
}

} // namespace support

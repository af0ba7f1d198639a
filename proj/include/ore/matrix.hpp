#ifndef ORE_MATRIX_HPP_
#define ORE_MATRIX_HPP_

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ore/bigint.hpp"

namespace ore {

template <class T>
class Matrix {
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> a_;

  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}
    explicit Matrix(std::vector<std::vector<T>> const & rows)
        : rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size())
    {
        a_.reserve(rows_ * cols_);
        for (auto const & r : rows) {
            if (r.size() != cols_)
                throw std::invalid_argument("ragged matrix rows");
            a_.insert(a_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T & operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    T const & operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const { return {a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_}; }
    void swap_rows(std::size_t i, std::size_t j)
    {
        for (std::size_t k = 0; k < cols_; ++k)
            std::swap((*this)(i, k), (*this)(j, k));
    }
    void append_row(std::vector<T> const & r)
    {
        if (rows_ == 0 && cols_ == 0)
            cols_ = r.size();
        if (r.size() != cols_)
            throw std::invalid_argument("row length mismatch");
        a_.insert(a_.end(), r.begin(), r.end());
        ++rows_;
    }

    friend Matrix operator*(Matrix const & x, Matrix const & y)
    {
        if (x.cols_ != y.rows_)
            throw std::invalid_argument("matrix dimension mismatch");
        Matrix z(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                if (x(i, k) == 0)
                    continue;
                for (std::size_t j = 0; j < y.cols_; ++j)
                    z(i, j) += x(i, k) * y(k, j);
            }
        return z;
    }
    friend bool operator==(Matrix const & x, Matrix const & y) = default;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

/* Fraction-free Gaussian elimination (Bareiss). */
inline Integer determinant(IntMatrix m)
{
    std::size_t const n = m.rows();
    if (n != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0)
        return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = divexact(t, prev);
            }
        }
        prev = m(k, k);
    }
    Integer d = m(n - 1, n - 1);
    return sign > 0 ? d : Integer(-d);
}

inline Rational determinant(RatMatrix m)
{
    std::size_t const n = m.rows();
    if (n != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != k) {
            m.swap_rows(k, p);
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k) == 0)
                continue;
            Rational const f = m(i, k) / m(k, k);
            for (std::size_t j = k; j < n; ++j)
                m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

/* Row Hermite normal form of an integer matrix of full column rank:
 * the result is square, upper triangular with positive pivots, and each
 * entry above a pivot lies in [0, pivot). Canonical for the row
 * lattice. */
inline IntMatrix hermite_normal_form(IntMatrix a)
{
    std::size_t const m = a.rows();
    std::size_t const n = a.cols();
    std::size_t i = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (i >= m)
            throw std::invalid_argument("hermite_normal_form: matrix is not of full column rank");
        std::size_t p = i;
        while (p < m && a(p, c) == 0)
            ++p;
        if (p == m)
            throw std::invalid_argument("hermite_normal_form: matrix is not of full column rank");
        if (p != i)
            a.swap_rows(i, p);
        for (std::size_t r = i + 1; r < m; ++r) {
            if (a(r, c) == 0)
                continue;
            Integer g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
            Integer const u = divexact(a(r, c), g);
            Integer const v = divexact(a(i, c), g);
            for (std::size_t k = c; k < n; ++k) {
                Integer const x = a(i, k);
                Integer const y = a(r, k);
                a(i, k) = s * x + t * y;
                a(r, k) = v * y - u * x;
            }
        }
        if (a(i, c) < 0)
            for (std::size_t k = c; k < n; ++k)
                a(i, k) = -a(i, k);
        for (std::size_t r = 0; r < i; ++r) {
            if (a(r, c) >= 0 && a(r, c) < a(i, c))
                continue;
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), a(r, c).get_mpz_t(), a(i, c).get_mpz_t());
            for (std::size_t k = c; k < n; ++k)
                a(r, k) -= q * a(i, k);
        }
        ++i;
    }
    IntMatrix h(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k)
            h(r, k) = a(r, k);
    return h;
}

/* Characteristic polynomial det(tI - A), degree-ascending, by the
 * Faddeev-LeVerrier recurrence over Q. */
inline std::vector<Rational> characteristic_polynomial(RatMatrix const & a)
{
    std::size_t const n = a.rows();
    if (n != a.cols())
        throw std::invalid_argument("characteristic polynomial of a non-square matrix");
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    RatMatrix m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        RatMatrix am = a * m;
        for (std::size_t i = 0; i < n; ++i)
            am(i, i) += c[n - k + 1];
        m = std::move(am);
        RatMatrix const t = a * m;
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            tr += t(i, i);
        c[n - k] = -tr / Rational(static_cast<long>(k));
        c[n - k].canonicalize();
    }
    return c;
}

} // namespace ore

#endif /* ORE_MATRIX_HPP_ */

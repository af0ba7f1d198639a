#ifndef ORE_HOOK_HPP_
#define ORE_HOOK_HPP_

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ore/bigint.hpp"

namespace ore {

/* A proper divisor 1 < d < N of the current modulus, surrendered by a
 * ring operation that met a zero divisor of Z/NZ. */
struct DivisorOfN {
    Integer d;
};

/* A monic proper factor h of the polynomial g defining A[x]/(g),
 * found while inverting an element of that ring. Coefficients are
 * degree-ascending canonical residues mod N. */
struct FactorOfG {
    std::vector<Integer> h;
};

/* Raised when an identity that must hold by construction fails. This
 * is an arithmetic bug, never an ordinary outcome. */
class InternalInconsistency : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/* Result of an operation with hooks: either a value, or one of the two
 * factorization discoveries. */
template <class V>
class Hook {
    std::variant<V, DivisorOfN, FactorOfG> v_;

  public:
    using value_type = V;

    Hook(V v) : v_(std::in_place_index<0>, std::move(v)) {}
    Hook(DivisorOfN d) : v_(std::in_place_index<1>, std::move(d)) {}
    Hook(FactorOfG h) : v_(std::in_place_index<2>, std::move(h)) {}

    bool has_value() const { return v_.index() == 0; }
    explicit operator bool() const { return has_value(); }
    bool is_divisor() const { return v_.index() == 1; }
    bool is_factor() const { return v_.index() == 2; }

    V const & value() const & { return checked<0>("value"); }
    V & value() & { return const_cast<V &>(checked<0>("value")); }
    V && value() && { return std::move(const_cast<V &>(checked<0>("value"))); }
    V const & operator*() const & { return value(); }
    V & operator*() & { return value(); }
    V const * operator->() const { return &value(); }
    V * operator->() { return &value(); }

    DivisorOfN const & divisor() const { return checked<1>("divisor"); }
    FactorOfG const & factor() const { return checked<2>("factor"); }

    /* Re-type a hook outcome that carries no value. */
    template <class U>
    Hook<U> forward() const
    {
        if (is_divisor())
            return Hook<U>(divisor());
        if (is_factor())
            return Hook<U>(factor());
        throw std::logic_error("Hook::forward called on a value");
    }

  private:
    template <std::size_t I>
    auto const & checked(char const * what) const
    {
        if (v_.index() != I)
            throw std::logic_error(std::string("Hook: no ") + what + " held");
        return std::get<I>(v_);
    }
};

/* An N-adic ordinate: a non-negative integer, or +infinity for the
 * valuation of zero. Infinity compares above every finite value. */
class Ordinate {
    long value_ = 0;
    bool infinite_ = false;

  public:
    constexpr Ordinate() = default;
    constexpr explicit Ordinate(long v) : value_(v) {}
    static constexpr Ordinate infinity()
    {
        Ordinate o;
        o.infinite_ = true;
        return o;
    }
    constexpr bool is_infinite() const { return infinite_; }
    constexpr bool is_finite() const { return !infinite_; }
    long value() const
    {
        if (infinite_)
            throw std::logic_error("Ordinate: infinite value has no integer");
        return value_;
    }
    friend constexpr bool operator==(Ordinate const & a, Ordinate const & b)
    {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(Ordinate const & a, Ordinate const & b)
    {
        if (a.infinite_ || b.infinite_)
            return a.infinite_ <=> b.infinite_;
        return a.value_ <=> b.value_;
    }
    std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }
};

} // namespace ore

#endif /* ORE_HOOK_HPP_ */

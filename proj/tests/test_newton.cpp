#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace ore;

namespace {

Integer const P5("281474976710677");
Integer const Q5("1099511627791");
Integer const A5 = P5 * Q5 * Q5;

IntPoly flagship()
{
    auto g = make_intpoly({2, 1, 1});
    return g * g * (g + make_intpoly({A5 * (A5 - 1)})) - make_intpoly({4 * A5 * A5 * A5});
}

std::vector<LatticePoint> pts(std::vector<long> ys)
{
    std::vector<LatticePoint> out;
    for (std::size_t j = 0; j < ys.size(); ++j)
        out.push_back({static_cast<long>(j), ys[j] < 0 ? Ordinate::infinity() : Ordinate(ys[j])});
    return out;
}

} // namespace

TEST(GExpansion, Reconstructs)
{
    std::mt19937_64 rng(1);
    for (int it = 0; it < 50; ++it) {
        auto f = support::random_monic(rng, 6, 100);
        auto g = support::random_monic(rng, 1 + it % 3, 10);
        auto e = g_expansion(f, g);
        IntPoly sum = make_intpoly({});
        IntPoly gp = make_intpoly({1});
        for (auto const & a : e.coefficients) {
            EXPECT_LT(a.degree(), g.degree());
            sum += a * gp;
            gp *= g;
        }
        EXPECT_EQ(sum, f);
        // q_j = sum_{i >= j} a_i g^{i-j}
        for (std::size_t j = 1; j <= e.r(); ++j) {
            IntPoly q = make_intpoly({});
            IntPoly gi = make_intpoly({1});
            for (std::size_t i = j; i <= e.r(); ++i) {
                q += e.coefficients[i] * gi;
                gi *= g;
            }
            EXPECT_EQ(q, e.quotient(j));
        }
    }
    EXPECT_THROW(g_expansion(make_intpoly({1, 1}), make_intpoly({1, 2})), std::invalid_argument);
}

TEST(Polygon, Examples)
{
    auto p = principal_polygon(pts({2, 1, 0}), 2);
    ASSERT_EQ(p.sides.size(), 1u); // collinear point dropped
    EXPECT_EQ(p.sides[0].h, 1);
    EXPECT_EQ(p.sides[0].e, 1);
    EXPECT_EQ(p.sides[0].length, 2);

    auto q = principal_polygon(pts({5, 1, 0, 0}), 2);
    ASSERT_EQ(q.sides.size(), 2u);
    EXPECT_EQ(q.sides[0].h, 4);
    EXPECT_EQ(q.sides[1].h, 1);
    EXPECT_EQ(q.y(1), Rational(1));
    EXPECT_EQ(q.y(2), Rational(0));

    auto r = principal_polygon(pts({3, -1, 1, 0}), 3);
    ASSERT_EQ(r.sides.size(), 1u);
    EXPECT_EQ(r.sides[0].h, 1);
    EXPECT_EQ(r.sides[0].degree(), 3);

    auto s = principal_polygon(pts({2, 2, 0}), 2);
    EXPECT_EQ(s.y(1), Rational(1));
    EXPECT_TRUE(s.all_slopes_integral());

    auto t = principal_polygon(pts({1, 0}), 1);
    EXPECT_EQ(t.y(1), Rational(0));

    EXPECT_THROW(principal_polygon(pts({2, 1, 1}), 2), InternalInconsistency);
    EXPECT_THROW(principal_polygon(pts({-1, -1, 1, 0}), 3), std::domain_error);
}

TEST(Newton, PureCubicAtSeven)
{
    auto f = parse_intpoly("[-49,0,0,1]");
    auto ctx = make_modulus(7, 3, true);
    auto dec = sfd0(reduce(f, ctx));
    auto rep = regularity_report(f, ctx, *dec);
    ASSERT_TRUE(rep);
    ASSERT_TRUE(rep->regular);
    auto const & fr = rep->factors[0];
    EXPECT_EQ(fr.polygon.length, 3);
    ASSERT_EQ(fr.polygon.sides.size(), 1u);
    EXPECT_EQ(fr.polygon.sides[0].h, 2);
    EXPECT_EQ(fr.polygon.sides[0].e, 3);
    EXPECT_EQ(fr.polygon.y(1), Rational(4, 3));
    EXPECT_EQ(fr.polygon.y(2), Rational(2, 3));
    EXPECT_FALSE(rep->all_slopes_integral());
    // R = -1 + y over F_7
    ASSERT_EQ(fr.residuals[0].poly.degree(), 1);
    EXPECT_EQ(fr.residuals[0].poly.coeff(0), make_modpoly(ctx, {6}));
}

TEST(Newton, PureCubicAt49)
{
    auto f = parse_intpoly("[-49,0,0,1]");
    auto ctx = make_modulus(49, 3, true);
    auto rep = regularity_report(f, ctx, *sfd0(reduce(f, ctx)));
    ASSERT_TRUE(rep && rep->regular);
    auto const & s = rep->factors[0].polygon.sides.at(0);
    EXPECT_EQ(s.h, 1);
    EXPECT_EQ(s.e, 3);
}

TEST(Newton, FlagshipAtA)
{
    auto f = flagship();
    auto ctx = make_modulus(A5, 6, true);
    auto dec = sfd0(reduce(f, ctx));
    ASSERT_TRUE(dec);
    ASSERT_EQ(dec->factors.size(), 1u);
    EXPECT_EQ(dec->factors[0].g, make_modpoly(ctx, {2, 1, 1}));
    EXPECT_EQ(dec->factors[0].multiplicity, 3u);
    auto rep = regularity_report(f, ctx, *dec);
    ASSERT_TRUE(rep);
    ASSERT_TRUE(rep->regular);
    auto const & fr = rep->factors[0];
    std::vector<Ordinate> want{Ordinate(3), Ordinate::infinity(), Ordinate(1), Ordinate(0)};
    EXPECT_EQ(fr.expansion.valuations, want);
    ASSERT_EQ(fr.polygon.sides.size(), 1u);
    EXPECT_EQ(fr.polygon.length, 3);
    EXPECT_EQ(fr.polygon.sides[0].h, 1);
    EXPECT_EQ(fr.polygon.sides[0].e, 1);
    // R = y^3 - y^2 - 4
    auto const & R = fr.residuals[0].poly;
    ASSERT_EQ(R.degree(), 3);
    EXPECT_EQ(R.coeff(0), make_modpoly(ctx, {-4}));
    EXPECT_TRUE(R.coeff(1).is_zero());
    EXPECT_EQ(R.coeff(2), make_modpoly(ctx, {-1}));
    EXPECT_TRUE(R.coeff(3).is_one());
}

// Polygon length equals ord_g(f mod N) and residual polynomials have the
// degree of their side with nonzero end coefficients, on random inputs
// built to have repeated factors mod N.
TEST(Newton, LengthAndResidualShape)
{
    std::mt19937_64 rng(21);
    auto primes = support::primes_between(7, 60);
    std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
    std::uniform_int_distribution<long> small(1, 3);
    int checked = 0;
    for (int it = 0; it < 300; ++it) {
        long const p = primes[pick(rng)];
        long const q = primes[pick(rng)];
        Integer const n = p == q ? Integer(p) : Integer(p * q);
        auto g = support::random_monic(rng, 1, 20);
        long const l = 2 + it % 2;
        auto h = support::random_monic(rng, 1, 20);
        IntPoly f = pow(g, l) * h;
        f += make_intpoly({pow(n, small(rng)) * (it % 5 + 1)});
        f += g * make_intpoly({n * small(rng)});
        auto ctx = make_modulus(n, 7, true);
        auto dec = sfd0(reduce(f, ctx));
        if (!dec)
            continue;
        auto rep = regularity_report(f, ctx, *dec);
        if (!rep)
            continue;
        for (auto const & fr : rep->factors) {
            EXPECT_EQ(fr.polygon.length, static_cast<long>(ord_mod(reduce(f, ctx), fr.g)));
            EXPECT_EQ(fr.polygon.length, static_cast<long>(fr.multiplicity));
            ASSERT_EQ(fr.residuals.size(), fr.polygon.sides.size());
            for (auto const & res : fr.residuals) {
                EXPECT_EQ(res.poly.degree(), res.side.degree());
                EXPECT_FALSE(res.poly.coeff(0).is_zero());
                EXPECT_FALSE(res.poly.lc().is_zero());
                EXPECT_EQ(res.side.length % res.side.e, 0);
            }
            for (long j = 1; j <= fr.polygon.length; ++j)
                EXPECT_GE(fr.polygon.y(j), 0);
        }
        ++checked;
    }
    EXPECT_GT(checked, 100);
}

TEST(Newton, NonRegularObstruction)
{
    // ((x-1)^2 + 7)^2 + 7^3: one side of slope -1/2 with R = (y+1)^2
    auto g = make_intpoly({-1, 1});
    IntPoly f = pow(g * g + make_intpoly({7}), 2) + make_intpoly({343});
    auto ctx = make_modulus(7, 4, true);
    auto rep = regularity_report(f, ctx, *sfd0(reduce(f, ctx)));
    ASSERT_TRUE(rep);
    EXPECT_FALSE(rep->regular);
    ASSERT_TRUE(rep->obstruction);
    EXPECT_EQ(rep->obstruction->factor, 0u);
    EXPECT_NE(rep->obstruction->description.find("-1/2"), std::string::npos);
}

// The suggested shape (x-1)^2 (x-2)^2 + p^2 c never fails condition 3
// for a constant c: each residual polynomial is y^2 + c.
TEST(Newton, SuggestedNonRegularShapeIsAlwaysRegular)
{
    long const p = 7;
    for (long c = 1; c < p * p; ++c) {
        if (c % p == 0)
            continue;
        IntPoly f = pow(make_intpoly({-1, 1}), 2) * pow(make_intpoly({-2, 1}), 2) + make_intpoly({p * p * c});
        // (x-1)(x-2) is reducible mod p, so the report itself may split g
        RunOptions o;
        o.mode = RunOptions::Mode::explicit_modulus;
        o.modulus = p;
        auto r = run(f, o);
        EXPECT_EQ(r.status, RunStatus::ok) << "c = " << c;
        EXPECT_FALSE(r.obstruction);
    }
}

TEST(Newton, VertexCoprimalityRaisesFactorHook)
{
    // mod 7*11 the factor x^2 + 3x + 2 of f splits; a vertex coefficient
    // sharing x + 1 with it exposes the split.
    auto ctx = make_modulus(77, 4, true);
    auto g = make_intpoly({2, 3, 1});
    IntPoly f = g * g + make_intpoly({77, 77});
    auto fr = analyze_factor(f, ctx, reduce(g, ctx), 2);
    ASSERT_TRUE(fr.is_factor());
    EXPECT_EQ(fr.factor().h, (std::vector<Integer>{1, 1}));
}

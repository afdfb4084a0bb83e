#include <doctest.h>

#include <random>

#include <qgenocchi/genocchi.hpp>
#include <qgenocchi/series_oracle.hpp>

using namespace qgenocchi;

namespace
{
const RatFuncQ q = RatFuncQ::indeterminate();
}

TEST_CASE("exp_xt")
{
    auto s0 = series::exp_xt(0);
    CHECK(s0.order() == 0);
    CHECK(s0[0] == PolyXY(RatFuncQ(1)));

    auto s2 = series::exp_xt(2);
    CHECK(s2[1] == PolyXY::x());
    CHECK(s2[2] == PolyXY::x() * PolyXY::x() * RatFuncQ(make_rational(1, 2)));

    auto s3 = series::exp_xt(3);
    for (int n = 0; n <= 3; ++n) {
        CHECK(specialize_q(s3[n], Rational(0)).eval(Rational(0), Rational(0)) == (n == 0 ? 1 : 0));
    }
}

TEST_CASE("generating function coefficients")
{
    auto g = series::genocchi_from_series(4);
    REQUIRE(g.size() == 5);
    CHECK(g[0].is_zero());
    CHECK(g[1] == PolyXY(RatFuncQ(2) / (1 + q)));
    CHECK(specialize_q(g[2], Rational(7)).eval(Rational(0), Rational(0)) == make_rational(-28, 64));
    CHECK(g[2].coeff(0, 0) == RatFuncQ(-4) * q / ((1 + q) * (1 + q)));
}

TEST_CASE("classical Genocchi numbers")
{
    auto g = series::classical_genocchi(21);
    const long expected[] = {0, 1, -1, 0, 1, 0, -3, 0, 17};
    for (int n = 0; n <= 8; ++n) {
        CHECK(g[static_cast<std::size_t>(n)] == expected[n]);
    }
    for (int k = 1; k <= 10; ++k) {
        CHECK(g[static_cast<std::size_t>(2 * k + 1)] == 0);
    }
}

TEST_CASE("series reciprocal")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> coef(-9, 9);
    for (int trial = 0; trial < 20; ++trial) {
        const int order = 12;
        TruncSeries<Rational> s(order);
        for (int k = 0; k <= order; ++k) {
            s[k] = coef(rng);
        }
        if (s[0] == 0) {
            s[0] = 3;
        }
        auto prod = s * s.reciprocal();
        CHECK(prod[0] == 1);
        for (int k = 1; k <= order; ++k) {
            CHECK(prod[k] == 0);
        }
    }
    TruncSeries<RatFuncQ> symbolic(5, {1 + q, q, q * q, RatFuncQ(0), RatFuncQ(1), q});
    auto prod = symbolic * symbolic.reciprocal();
    CHECK(prod[0].is_one());
    for (int k = 1; k <= 5; ++k) {
        CHECK(prod[k].is_zero());
    }
    CHECK_THROWS_AS(TruncSeries<Rational>(3).reciprocal(), division_by_zero);
    CHECK_THROWS_AS(TruncSeries<Rational>(3) * TruncSeries<Rational>(4), domain_error);
}

TEST_CASE("oracle agrees with the recurrence symbolically")
{
    auto oracle = series::genocchi_from_series(20);
    for (int n = 0; n <= 20; ++n) {
        CAPTURE(n);
        CHECK(oracle[static_cast<std::size_t>(n)] == genocchi_poly(n));
    }
}

TEST_CASE("specialised series matches the specialised symbolic table")
{
    for (const Rational &q0 : {make_rational(1, 2), Rational(2), Rational(1)}) {
        auto oracle = series::genocchi_polys_at(q0, 64);
        for (int n = 0; n <= 64; ++n) {
            CAPTURE(n);
            CHECK(oracle[static_cast<std::size_t>(n)] == specialize_q(genocchi_poly(n), q0));
        }
    }
    CHECK_THROWS_AS(series::genocchi_numbers_at(Rational(-1), 3), pole_error);
}

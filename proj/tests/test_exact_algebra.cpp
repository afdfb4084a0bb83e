#include <doctest.h>

#include <random>

#include <qgenocchi/errors.hpp>
#include <qgenocchi/poly_q.hpp>
#include <qgenocchi/poly_xy.hpp>
#include <qgenocchi/ratfunc.hpp>

using namespace qgenocchi;

namespace
{

const RatFuncQ q = RatFuncQ::indeterminate();

PolyQ poly(std::initializer_list<long> coeffs)
{
    std::vector<Rational> v;
    for (long c : coeffs) {
        v.emplace_back(c);
    }
    return PolyQ(std::move(v));
}

// Random polynomial of degree <= 6 with coefficients in [-9, 9].
PolyQ random_poly(std::mt19937 &rng)
{
    std::uniform_int_distribution<int> deg(0, 6);
    std::uniform_int_distribution<long> coef(-9, 9);
    std::vector<Rational> v(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto &c : v) {
        c = coef(rng);
    }
    return PolyQ(std::move(v));
}

RatFuncQ random_ratfunc(std::mt19937 &rng)
{
    PolyQ den;
    while (den.is_zero()) {
        den = random_poly(rng);
    }
    return RatFuncQ(random_poly(rng), den);
}

} // namespace

TEST_CASE("rational helpers")
{
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(3, 4) == 0); // C(2n+1, 2n+2) at n = 1
    CHECK(binomial(3, -1) == 0);
    CHECK(pow(Rational(0), 0) == 1);
    CHECK(pow(make_rational(2, 3), -2) == make_rational(9, 4));
    CHECK(parse_rational("-6/4") == make_rational(-3, 2));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
    CHECK(parse_rational_or_decimal("0.75") == make_rational(3, 4));
    CHECK(parse_rational_or_decimal("-1.5e-1") == make_rational(-3, 20));
    CHECK(to_string(make_rational(-4, 6)) == "-2/3");
}

TEST_CASE("qbracket")
{
    CHECK(qbracket(0).is_zero());
    CHECK(qbracket(1) == poly({1}));
    CHECK(qbracket(3) == poly({1, 1, 1}));
    // (1 - q^3) / (1 - q)
    CHECK(RatFuncQ(poly({1, 0, 0, -1}), poly({1, -1})) == RatFuncQ(qbracket(3)));
    CHECK_THROWS_AS(qbracket(-1), domain_error);
}

TEST_CASE("rational function arithmetic examples")
{
    RatFuncQ one_plus_q = 1 + q;
    CHECK(RatFuncQ(2) / one_plus_q + RatFuncQ(2) * q / one_plus_q == RatFuncQ(2));
    CHECK(RatFuncQ(poly({1, 0, -1})) / RatFuncQ(poly({1, -1})) == one_plus_q);
    CHECK(RatFuncQ(2) / one_plus_q * (one_plus_q * one_plus_q) == RatFuncQ(poly({2, 2})));
    CHECK_THROWS_AS(q / RatFuncQ(), division_by_zero);
    CHECK_THROWS_AS(RatFuncQ(poly({1}), PolyQ()), division_by_zero);
}

TEST_CASE("canonical form")
{
    // Scalar is folded into the numerator; denominator monic.
    RatFuncQ f(poly({0, 4}), poly({2, 2}));
    CHECK(f.den() == poly({1, 1}));
    CHECK(f.num() == poly({0, 2}));
    CHECK(RatFuncQ(f.num(), f.den()) == f);
    CHECK(RatFuncQ().den() == poly({1}));
    CHECK(RatFuncQ(poly({0, -4}), poly({1, 2, 1})).to_string() == "(-4*q)/(q^2 + 2*q + 1)");
    CHECK(RatFuncQ(poly({2, 2})).to_string() == "2*q + 2");
    CHECK(RatFuncQ(make_rational(1, 2)) * q * q - 3 == RatFuncQ(PolyQ({Rational(-3), Rational(0), make_rational(1, 2)})));
    CHECK(RatFuncQ(PolyQ({Rational(-3), Rational(0), make_rational(1, 2)})).to_string() == "1/2*q^2 - 3");
}

TEST_CASE("derivative")
{
    CHECK(RatFuncQ(5).derivative().is_zero());
    CHECK((q / (1 + q)).derivative() == RatFuncQ(1) / ((1 + q) * (1 + q)));
    CHECK((q * q).derivative() == 2 * q);
}

TEST_CASE("specialize_q")
{
    RatFuncQ g2 = RatFuncQ(-4) * q / ((1 + q) * (1 + q));
    CHECK(specialize_q(g2, Rational(1)) == -1);
    CHECK(specialize_q(RatFuncQ(2) / (1 + q), make_rational(1, 2)) == make_rational(4, 3));
    CHECK_THROWS_AS(specialize_q(RatFuncQ(1) / (1 - q), Rational(1)), pole_error);
}

TEST_CASE("field axioms on random rational functions")
{
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 60; ++trial) {
        RatFuncQ a = random_ratfunc(rng);
        RatFuncQ b = random_ratfunc(rng);
        RatFuncQ c = random_ratfunc(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + (-a)).is_zero());
        CHECK((a + b) - b == a);
        if (!a.is_zero()) {
            CHECK((a * a.inverse()).is_one());
        }
        // Equality agrees with cross multiplication.
        CHECK((a == b) == (a.num() * b.den() == b.num() * a.den()));
        // Product rule.
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
}

TEST_CASE("specialisation commutes with arithmetic")
{
    std::mt19937 rng(77);
    const Rational points[] = {make_rational(1, 2), Rational(2), make_rational(-3, 7), Rational(5)};
    for (int trial = 0; trial < 40; ++trial) {
        RatFuncQ a = random_ratfunc(rng);
        RatFuncQ b = random_ratfunc(rng);
        for (const auto &q0 : points) {
            try {
                Rational av = a.eval(q0);
                Rational bv = b.eval(q0);
                CHECK((a + b).eval(q0) == av + bv);
                CHECK((a - b).eval(q0) == av - bv);
                CHECK((a * b).eval(q0) == av * bv);
                if (!is_zero(bv) && !b.is_zero()) {
                    CHECK((a / b).eval(q0) == av / bv);
                }
            } catch (const pole_error &) {
                // q0 is a pole of an input; nothing to compare.
            }
        }
    }
}

TEST_CASE("bivariate polynomials")
{
    const PolyXY x = PolyXY::x();
    const PolyXY y = PolyXY::y();
    PolyXY p = (x + y) * (x - y);
    CHECK(p == x * x - y * y);
    CHECK(p.degree_x() == 2);
    CHECK(p.degree_y() == 2);
    CHECK((p - p).is_zero());
    CHECK((p - x * x + y * y).degree_x() == -1);

    // x -> x + 1 on x^2
    PolyXY shifted = (x * x).substitute_x(x + PolyXY(RatFuncQ(1)));
    CHECK(shifted == x * x + x * RatFuncQ(2) + PolyXY(RatFuncQ(1)));

    PolyXY g2 = x * (RatFuncQ(4) / (1 + q)) + PolyXY(RatFuncQ(-4) * q / ((1 + q) * (1 + q)));
    CHECK(g2.to_string() == "((4)/(q + 1))*x + (-4*q)/(q^2 + 2*q + 1)");
    CHECK((x * RatFuncQ(-3) * q + y).to_string() == "-3*q*x + y");

    RationalPolyXY at_half = specialize_q(g2, make_rational(1, 2));
    CHECK(at_half.eval(Rational(3), Rational(0)) == make_rational(8, 3) * 3 - make_rational(8, 9));
    CHECK_THROWS_AS(specialize_q(g2, Rational(-1)), pole_error);
}

TEST_CASE("polynomial evaluation agrees with rational arithmetic")
{
    std::mt19937 rng(5);
    const PolyXY x = PolyXY::x();
    const PolyXY y = PolyXY::y();
    for (int trial = 0; trial < 20; ++trial) {
        RatFuncQ a = random_ratfunc(rng);
        RatFuncQ b = random_ratfunc(rng);
        PolyXY p = (x * a + y) * (x - y * b) + PolyXY(a * b);
        const Rational q0 = make_rational(1, 2);
        const Rational x0 = 3;
        const Rational y0 = 2;
        try {
            Rational av = a.eval(q0);
            Rational bv = b.eval(q0);
            Rational direct = (x0 * av + y0) * (x0 - y0 * bv) + av * bv;
            CHECK(specialize_q(p, q0).eval(x0, y0) == direct);
        } catch (const pole_error &) {
        }
    }
}

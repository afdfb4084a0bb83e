#include <doctest.h>

#include <cmath>
#include <numbers>

#include <qgenocchi/analytic.hpp>
#include <qgenocchi/errors.hpp>
#include <qgenocchi/genocchi.hpp>

using namespace qgenocchi;
using namespace qgenocchi::analytic;

namespace
{

const RatFuncQ q = RatFuncQ::indeterminate();

double exact_value(int n, const Rational &x0, const Rational &q0)
{
    return genocchi_poly_value_at(n, x0, q0).get_d();
}

} // namespace

TEST_CASE("exact values at negative integers")
{
    CHECK(zeta_neg_exact(1) == RatFuncQ(-2) * q / pow(1 + q, 2));
    CHECK(zeta_neg_exact(1) == genocchi_number(2) / RatFuncQ(2));
    CHECK(zeta_neg_exact(0) == RatFuncQ(-2) * q / (1 + q));
    CHECK(zeta_neg_exact(0) != genocchi_number(1));
    CHECK(zeta_neg_exact_with_x(2) == genocchi_poly(3) / RatFuncQ(3));
    CHECK_THROWS_AS(zeta_neg_exact_with_x(-1), domain_error);
    CHECK_THROWS_AS(interpolation_residual(0), domain_error);
}

TEST_CASE("interpolation residual")
{
    for (int m = 1; m <= 12; ++m) {
        CAPTURE(m);
        CHECK(interpolation_residual(m).is_zero());
        CHECK_FALSE(interpolation_residual(m, Prefactor::qbracket2).is_zero());
    }
    // Off by the factor (1 + q)/2 exactly.
    CHECK(interpolation_residual(1, Prefactor::qbracket2)
          == genocchi_poly(2) / RatFuncQ(2) * ((1 + q) / RatFuncQ(2) - RatFuncQ(1)));
}

TEST_CASE("A_m is the Abel sum of (-q)^n n^m")
{
    // Partial sums at q = 1/5 converge geometrically.
    for (int m = 0; m <= 6; ++m) {
        double partial = 0.0;
        for (int n = 1; n < 200; ++n) {
            partial += std::pow(-0.2, n) * std::pow(double(n), m);
        }
        CHECK(partial == doctest::Approx(alternating_power_sum(m).eval(make_rational(1, 5)).get_d()).epsilon(1e-12));
    }
}

TEST_CASE("zeta series")
{
    ZetaParams p;
    ZetaResult r = zeta_series({1.0, 0.0}, p, ZetaVariant::printed);
    CHECK(std::abs(r.value.real() + 2.0 * std::log(1.5)) < 1e-13);
    CHECK(std::abs(r.value.imag()) < 1e-15);
    CHECK_FALSE(r.euler_transformed);
    CHECK(r.tail_bound < p.tolerance);

    p.q0 = 0.3;
    r = zeta_series({60.0, 0.0}, p, ZetaVariant::printed);
    CHECK(std::abs(r.value.real() + 2.0 * 0.3) < 1e-15);

    p.q0 = 0.5;
    p.x0 = 1.0;
    r = zeta_series({0.0, 0.0}, p, ZetaVariant::hurwitz);
    CHECK(std::abs(r.value.real() - 4.0 / 3.0) < 1e-14);

    // x0 = 0 starts at n = 1, so the two variants coincide.
    p.x0 = 0.0;
    ComplexF s(2.5, 1.0);
    CHECK(std::abs(zeta_series(s, p, ZetaVariant::hurwitz).value - zeta_series(s, p, ZetaVariant::printed).value) < 1e-15);
}

TEST_CASE("zeta series near q = 1 uses the Euler transformation")
{
    ZetaParams p;
    p.q0 = 1.0 - 1e-3;
    ZetaResult r = zeta_series({2.0, 0.0}, p, ZetaVariant::printed);
    CHECK(r.euler_transformed);
    CHECK(std::abs(r.value.real() + std::numbers::pi * std::numbers::pi / 6.0) < 3e-3);

    // 2 Li_2(-q) through the plain sum at q = 0.6 against Euler at 0.6 + 1e-9.
    ZetaParams lo;
    lo.q0 = 0.6;
    ZetaParams hi;
    hi.q0 = 0.6 + 1e-9;
    const ComplexF a = zeta_series({2.0, 0.0}, lo, ZetaVariant::printed).value;
    const ComplexF b = zeta_series({2.0, 0.0}, hi, ZetaVariant::printed).value;
    CHECK(std::abs(a - b) < 1e-8);
}

TEST_CASE("hurwitz series at negative integers matches the exact values")
{
    ZetaParams p;
    p.q0 = 0.5;
    p.x0 = 1.0;
    for (int m = 0; m <= 6; ++m) {
        CAPTURE(m);
        const double exact = specialize_q(zeta_neg_exact_with_x(m), make_rational(1, 2)).eval(Rational(1), Rational(0)).get_d();
        CHECK(std::abs(zeta_series({double(-m), 0.0}, p, ZetaVariant::hurwitz).value.real() - exact) < 1e-9);
    }
}

TEST_CASE("zeta series errors")
{
    ZetaParams p;
    p.q0 = 1.0;
    CHECK_THROWS_AS(zeta_series({2.0, 0.0}, p, ZetaVariant::printed), domain_error);
    p.q0 = 0.5;
    p.x0 = -1.0;
    CHECK_THROWS_AS(zeta_series({2.0, 0.0}, p, ZetaVariant::hurwitz), domain_error);
    p.x0 = 0.0;
    p.tail_terms = 3;
    CHECK_THROWS_AS(zeta_series({2.0, 0.0}, p, ZetaVariant::printed), non_convergence);
}

TEST_CASE("cauchy contour")
{
    CHECK(std::abs(cauchy_contour(4, 0.0, 0.5) - ComplexF(16.0 / 27.0, 0.0)) < 1e-10);
    CHECK(std::abs(cauchy_contour(1, 0.0, 0.5) - ComplexF(4.0 / 3.0, 0.0)) < 1e-10);
    CHECK(std::abs(cauchy_contour(0, 0.3, 0.7)) < 1e-12);
    for (const Rational &q0 : {make_rational(1, 2), make_rational(3, 4)}) {
        for (const Rational &x0 : {Rational(0), make_rational(1, 3)}) {
            for (int n = 0; n <= 10; ++n) {
                CAPTURE(n);
                const ComplexF z = cauchy_contour(n, x0.get_d(), q0.get_d(), 1.0, 64);
                CHECK(std::abs(z - ComplexF(exact_value(n, x0, q0), 0.0)) < 1e-10);
                CHECK(std::abs(z.imag()) < 1e-10);
            }
        }
    }
    CHECK(max_contour_radius(1.0) == doctest::Approx(0.9 * std::numbers::pi));
    CHECK_THROWS_AS(cauchy_contour(2, 0.0, 0.5, 3.0, 64), domain_error);
    CHECK_THROWS_AS(cauchy_contour(2, 0.0, 0.5, 1.0, 8), domain_error);
    CHECK_THROWS_AS(cauchy_contour(-1, 0.0, 0.5), domain_error);
    CHECK_THROWS_AS(cauchy_contour(2, 0.0, -0.5), domain_error);
}

TEST_CASE("cauchy contour converges geometrically in the node count")
{
    for (const Rational &q0 : {make_rational(1, 2), make_rational(3, 4)}) {
        for (int n : {2, 6, 10}) {
            double previous = cauchy_contour_error_hp(n, Rational(0), q0, 1.0, 16);
            for (int nodes : {32, 64, 128}) {
                INFO("n=" << n << " nodes=" << nodes);
                const double err = cauchy_contour_error_hp(n, Rational(0), q0, 1.0, nodes);
                CHECK(err <= 0.5 * previous);
                previous = err;
            }
        }
    }
    // The double routine agrees with the extended one until rounding dominates.
    const double hp16 = cauchy_contour_error_hp(6, Rational(0), make_rational(1, 2), 1.0, 16);
    const double d16 = std::abs(cauchy_contour(6, 0.0, 0.5, 1.0, 16).real() - exact_value(6, Rational(0), make_rational(1, 2)));
    CHECK(d16 == doctest::Approx(hp16).epsilon(1e-3));
}

TEST_CASE("derivative limit")
{
    const auto h = default_h_schedule();
    DerivativeEstimate d0 = derivative_limit(0, 0.0, 0.5, h);
    CHECK(d0.value == 0.0);
    CHECK(std::abs(derivative_limit(1, 0.0, 0.5, h).value - 4.0 / 3.0) < 1e-6);
    CHECK(std::abs(derivative_limit(2, 0.0, 0.5, h).value + 8.0 / 9.0) < 1e-5);
    CHECK(std::abs(derivative_limit(3, 0.25, 0.5, h).value - exact_value(3, make_rational(1, 4), make_rational(1, 2))) < 1e-6);
    CHECK(derivative_limit(2, 0.0, 0.5, h).extrapolants.size() == h.size());
    CHECK_FALSE(derivative_limit(2, 0.0, 0.5, h).diverging);

    // Steps far too small for a high derivative: cancellation is flagged.
    const std::vector<double> tiny{1e-2, 5e-3, 2.5e-3, 1.25e-3};
    CHECK(derivative_limit(8, 0.0, 0.5, tiny).diverging);

    const std::vector<double> bad{0.1, 0.2};
    CHECK_THROWS_AS(derivative_limit(2, 0.0, 0.5, bad), domain_error);
    CHECK_THROWS_AS(derivative_limit(2, 0.0, 0.5, std::vector<double>{}), domain_error);
}

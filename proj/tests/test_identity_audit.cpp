#include <doctest.h>

#include <fstream>
#include <sstream>

#include <qgenocchi/analytic.hpp>
#include <qgenocchi/audit.hpp>
#include <qgenocchi/errors.hpp>
#include <qgenocchi/genocchi.hpp>
#include <qgenocchi/identities.hpp>

using namespace qgenocchi;
using namespace qgenocchi::identities;

namespace
{

const SymbolicEnv sym(false);
const SymbolicEnv cls(true);
const RatFuncQ q = RatFuncQ::indeterminate();

bool zero_at_one(const PolyXY &r)
{
    return specialize_q(r, Rational(1)).is_zero();
}

std::string read_file(const std::string &path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("addition, shift and reflection identities hold")
{
    for (int n = 0; n <= 12; ++n) {
        CAPTURE(n);
        CHECK(residual_thm1(sym, n).is_zero());
        CHECK(residual_thm2(sym, n).is_zero());
        CHECK(residual_thm3(sym, n).is_zero());
        CHECK(residual_thm4(sym, n).is_zero());
        CHECK((residual_thm4(sym, n) - residual_thm3(sym, n)).is_zero());
        CHECK(residual_eq109(sym, n).is_zero());
        CHECK(residual_eq110(sym, n).is_zero());
        CHECK(residual_thm5(sym, n).is_zero());
    }
}

TEST_CASE("q = 1 corollaries")
{
    for (int n = 0; n <= 10; ++n) {
        CAPTURE(n);
        CHECK(residual_cor6(cls, n).is_zero());
        CHECK(residual_cor10(cls, n).is_zero());
        // thm5 specialised at q = 1 is cor6.
        CHECK(specialize_q(residual_thm5(sym, n), Rational(1)) == specialize_q(residual_cor6(cls, n), Rational(1)));
    }
}

TEST_CASE("thm7 printed and corrected")
{
    PolyXY printed0 = residual_thm7(sym, 0, Variant::printed);
    CHECK_FALSE(printed0.is_zero());
    CHECK(zero_at_one(printed0));
    // Every coefficient carries the factor (q - 1).
    for (int i = 0; i <= printed0.degree_x(); ++i) {
        CHECK(printed0.coeff(i, 0).num().eval(Rational(1)) == 0);
    }
    for (int n = 1; n <= 4; ++n) {
        CHECK_FALSE(residual_thm7(sym, n, Variant::printed).is_zero());
    }
    for (int n = 0; n <= 10; ++n) {
        CAPTURE(n);
        CHECK(residual_thm7(sym, n, Variant::corrected).is_zero());
    }
}

TEST_CASE("cor8 printed and corrected")
{
    CHECK(residual_cor8(cls, 0, Variant::printed).is_zero());
    PolyXY r1 = residual_cor8(cls, 1, Variant::printed);
    CHECK_FALSE(r1.is_zero());
    CHECK(r1.degree_x() == 3);
    for (int n = 0; n <= 10; ++n) {
        CAPTURE(n);
        CHECK(residual_cor8(cls, n, Variant::corrected).is_zero());
    }
    // cor8-corrected is the q = 1 limit of thm7-corrected.
    CHECK(specialize_q(residual_thm7(sym, 3, Variant::corrected), Rational(1)).is_zero());
}

TEST_CASE("thm9 readings")
{
    // The cubic used in the hand check.
    const PolyXY x = PolyXY::x();
    PolyXY g3 = PolyXY(RatFuncQ(-6) * q * (1 - q) / pow(1 + q, 3)) - x * (RatFuncQ(12) * q / pow(1 + q, 2))
                + x * x * (RatFuncQ(6) / (1 + q));
    CHECK(g3 == genocchi_poly(3));

    CHECK(residual_thm9(sym, 0, Variant::corrected).is_zero());
    CHECK_FALSE(residual_thm9(sym, 0, Variant::printed).is_zero());
    CHECK_FALSE(residual_thm9(sym, 0, Variant::printed_derivation).is_zero());
    for (int n = 0; n <= 10; ++n) {
        CAPTURE(n);
        CHECK(residual_thm9(sym, n, Variant::corrected).is_zero());
        CHECK(zero_at_one(residual_thm9(sym, n, Variant::printed)));
        CHECK(zero_at_one(residual_thm9(sym, n, Variant::printed_derivation)));
    }
}

TEST_CASE("distribution formula")
{
    for (int n = 0; n <= 10; ++n) {
        CAPTURE(n);
        CHECK(residual_distribution(sym, n, 1, Variant::printed).is_zero());
        CHECK(residual_distribution(sym, n, 1, Variant::corrected).is_zero());
        CHECK(residual_distribution(sym, n, 3, Variant::corrected).is_zero());
        CHECK(residual_distribution(sym, n, 5, Variant::corrected).is_zero());
    }
    // n = 1, d = 3: (1 - q + q^2) 2/(1 + q^3) = 2/(1 + q), but not with base q.
    PolyXY printed = residual_distribution(sym, 1, 3, Variant::printed);
    CHECK(printed == PolyXY(RatFuncQ(2) / (1 + q) - (1 - q + q * q) * RatFuncQ(2) / (1 + q)));
    CHECK(zero_at_one(printed));
    CHECK_THROWS_AS(residual_distribution(sym, 2, 2, Variant::corrected), domain_error);
    CHECK_THROWS_AS(residual_distribution(sym, 2, 0, Variant::printed), domain_error);
}

TEST_CASE("coefficient comparison and interpolation")
{
    for (int m = 1; m <= 10; ++m) {
        CAPTURE(m);
        CHECK(residual_eq118(sym, m, Variant::corrected).is_zero());
        CHECK_FALSE(residual_eq118(sym, m, Variant::printed).is_zero());
        CHECK(residual_eq121(sym, m, Variant::corrected) == analytic::interpolation_residual(m));
        CHECK_FALSE(residual_eq121(sym, m, Variant::printed).is_zero());
    }
}

TEST_CASE("eulerian numbers")
{
    CHECK(eulerian_row(0) == std::vector<Integer>{1});
    CHECK(eulerian_row(1) == std::vector<Integer>{1});
    CHECK(eulerian_row(3) == std::vector<Integer>{1, 4, 1});
    CHECK(eulerian_row(4) == std::vector<Integer>{1, 11, 11, 1});
    for (int m = 1; m <= 9; ++m) {
        Integer total = 0;
        for (const auto &a : eulerian_row(m)) {
            total += a;
        }
        CHECK(total == factorial(m));
    }
    // Eulerian route against the q d/dq route.
    const NumericEnv at(make_rational(2, 7), Rational(0), Rational(0));
    for (int m = 0; m <= 12; ++m) {
        CHECK(at.alt_power_sum(m) == analytic::alternating_power_sum(m).eval(make_rational(2, 7)));
    }
}

TEST_CASE("symbolic residuals agree with pure rational arithmetic")
{
    const Rational q0 = make_rational(1, 2);
    const Rational x0 = 3;
    const Rational y0 = 2;
    const NumericEnv num(q0, x0, y0);
    const NumericEnv num1(Rational(1), x0, y0);
    auto at = [&](const PolyXY &p) { return specialize_q(p, q0).eval(x0, y0); };
    auto at1 = [&](const PolyXY &p) { return specialize_q(p, Rational(1)).eval(x0, y0); };

    for (int n = 0; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(at(residual_thm1(sym, n)) == residual_thm1(num, n));
        CHECK(at(residual_thm2(sym, n)) == residual_thm2(num, n));
        CHECK(at(residual_thm3(sym, n)) == residual_thm3(num, n));
        CHECK(at(residual_thm4(sym, n)) == residual_thm4(num, n));
        CHECK(at(residual_eq109(sym, n)) == residual_eq109(num, n));
        CHECK(at(residual_eq110(sym, n)) == residual_eq110(num, n));
        CHECK(at(residual_thm5(sym, n)) == residual_thm5(num, n));
        CHECK(at1(residual_cor6(cls, n)) == residual_cor6(num1, n));
        CHECK(at1(residual_cor10(cls, n)) == residual_cor10(num1, n));
        for (Variant v : {Variant::printed, Variant::corrected}) {
            CHECK(at(residual_thm7(sym, n, v)) == residual_thm7(num, n, v));
            CHECK(at1(residual_cor8(cls, n, v)) == residual_cor8(num1, n, v));
            for (int d : {1, 3, 5}) {
                CHECK(at(residual_distribution(sym, n, d, v)) == residual_distribution(num, n, d, v));
            }
        }
        for (Variant v : {Variant::printed, Variant::printed_derivation, Variant::corrected}) {
            CHECK(at(residual_thm9(sym, n, v)) == residual_thm9(num, n, v));
        }
        if (n >= 1) {
            for (Variant v : {Variant::printed, Variant::corrected}) {
                CHECK(at(residual_eq118(sym, n, v)) == residual_eq118(num, n, v));
                CHECK(at(residual_eq121(sym, n, v)) == residual_eq121(num, n, v));
            }
        }
    }
}

TEST_CASE("audit_all")
{
    const auto records = audit::audit_all(10);
    auto find = [&](const std::string &id) -> const audit::AuditRecord & {
        for (const auto &r : records) {
            if (r.identity_id == id) {
                return r;
            }
        }
        FAIL("missing record " << id);
        return records.front();
    };
    CHECK(find("thm1").verdict == audit::Verdict::holds);
    CHECK(find("thm7-printed").verdict == audit::Verdict::fails);
    CHECK(find("thm7-corrected").verdict == audit::Verdict::holds);
    CHECK(find("distribution-corrected d=3").verdict == audit::Verdict::holds);
    CHECK(find("distribution-printed d=3").verdict == audit::Verdict::holds_at_q1_only);
    CHECK(find("cor8-printed").residual_text.rfind("n=1: ", 0) == 0);

    for (const auto &r : records) {
        CAPTURE(r.identity_id);
        if (r.verdict == audit::Verdict::holds) {
            CHECK(r.residual.is_zero());
        } else {
            CHECK_FALSE(r.residual.is_zero());
        }
    }

    CHECK(audit::expectation_table(records) == read_file(QGENOCCHI_DATA_DIR "/audit_expectations.tsv"));
    CHECK(audit::render_text(audit::audit_all(10)) == audit::render_text(records));
    CHECK_THROWS_AS(audit::audit_all(1), domain_error);
}

#ifndef QGENOCCHI_IDENTITIES_HPP
#define QGENOCCHI_IDENTITIES_HPP

// Residuals (LHS - RHS) of the identities under audit, written once against an
// evaluation environment:
//   SymbolicEnv - values in Q(q)[x, y], G from the recurrence table;
//   NumericEnv  - values in Q at a point (q0, x0, y0), G from the series
//                 oracle with q0 substituted, A_m from Eulerian polynomials.
// Comparing the two at the same point checks the symbolic engine against an
// independent exact-arithmetic route.

#include <map>
#include <utility>
#include <vector>

#include <qgenocchi/errors.hpp>
#include <qgenocchi/poly_xy.hpp>
#include <qgenocchi/ratfunc.hpp>
#include <qgenocchi/rational.hpp>

namespace qgenocchi::identities
{

// a*x + b*y + c
struct Affine {
    Rational x_coeff;
    Rational y_coeff;
    Rational constant;
};

inline Affine x_plus(const Rational &c)
{
    return {Rational(1), Rational(0), c};
}
inline Affine scaled_x(const Rational &a)
{
    return {a, Rational(0), Rational(0)};
}

class SymbolicEnv
{
public:
    using Value = PolyXY;
    using Scalar = RatFuncQ;

    // classical: q is fixed to 1 (Genocchi rather than q-Genocchi).
    explicit SymbolicEnv(bool classical = false) : classical_(classical) {}

    bool classical() const { return classical_; }
    Scalar num(const Rational &r) const { return RatFuncQ(r); }
    Scalar q() const { return classical_ ? RatFuncQ(1) : RatFuncQ::indeterminate(); }
    Scalar qbracket(int n) const;
    Value lift(const Scalar &s) const { return PolyXY(s); }
    Value var(const Affine &a) const;
    Value power(const Value &v, long k) const { return pow(v, k); }
    Scalar power(const Scalar &s, long k) const { return pow(s, k); }
    // G_{n, q^qpow}(a)
    Value G(int n, const Affine &a, int qpow = 1) const;
    Scalar alt_power_sum(int m) const;

private:
    bool classical_;
};

class NumericEnv
{
public:
    using Value = Rational;
    using Scalar = Rational;

    NumericEnv(Rational q0, Rational x0, Rational y0);

    bool classical() const { return q0_ == 1; }
    Scalar num(const Rational &r) const { return r; }
    Scalar q() const { return q0_; }
    Scalar qbracket(int n) const;
    Value lift(const Scalar &s) const { return s; }
    Value var(const Affine &a) const { return a.x_coeff * x0_ + a.y_coeff * y0_ + a.constant; }
    Value power(const Value &v, long k) const { return qgenocchi::pow(v, k); }
    Value G(int n, const Affine &a, int qpow = 1) const;
    // sum_{n>=1} n^m z^n = z E_m(z) / (1 - z)^{m+1} at z = -q0 (Abel value).
    Scalar alt_power_sum(int m) const;

private:
    const std::vector<Rational> &numbers(int qpow, int n) const;

    Rational q0_;
    Rational x0_;
    Rational y0_;
    mutable std::map<int, std::vector<Rational>> numbers_by_qpow_;
};

// Eulerian numbers A(m, k), 0 <= k < m (row m = 0 is {1}).
std::vector<Integer> eulerian_row(int m);

// ---------------------------------------------------------------------------

namespace detail
{

template <typename Env>
typename Env::Scalar frac(const Env &env, const Integer &a, const Integer &b)
{
    Rational r(a, b);
    r.canonicalize();
    return env.num(r);
}

template <typename Env>
typename Env::Scalar frac(const Env &env, long a, long b = 1)
{
    return env.num(make_rational(a, b));
}

inline const Affine X{Rational(1), Rational(0), Rational(0)};
inline const Affine Y{Rational(0), Rational(1), Rational(0)};
inline const Affine X_PLUS_Y{Rational(1), Rational(1), Rational(0)};
inline const Affine X_MINUS_Y{Rational(1), Rational(-1), Rational(0)};

} // namespace detail

// G_n(x + y) = sum_k C(n,k) G_k(x) y^{n-k}
template <typename Env>
typename Env::Value residual_thm1(const Env &env, int n)
{
    using namespace detail;
    typename Env::Value rhs = env.lift(env.num(Rational(0)));
    for (int k = 0; k <= n; ++k) {
        rhs += env.G(k, X) * env.power(env.var(Y), n - k) * frac(env, binomial(n, k), 1);
    }
    return env.G(n, X_PLUS_Y) - rhs;
}

// sum_k C(n,k)/((k+2)(k+1)) G_{k+2}(x) y^{n-k}
//   = [G_{n+2}(x+y) - (2/[2]_q)(n+2) y^{n+1}] / ((n+2)(n+1))
template <typename Env>
typename Env::Value residual_thm2(const Env &env, int n)
{
    using namespace detail;
    typename Env::Value lhs = env.lift(env.num(Rational(0)));
    for (int k = 0; k <= n; ++k) {
        lhs += env.G(k + 2, X) * env.power(env.var(Y), n - k) * frac(env, binomial(n, k), (k + 2) * (k + 1));
    }
    typename Env::Scalar coef = frac(env, 2 * (n + 2)) / env.qbracket(2);
    typename Env::Value rhs = (env.G(n + 2, X_PLUS_Y) - env.power(env.var(Y), n + 1) * coef) / frac(env, (n + 2) * (n + 1));
    return lhs - rhs;
}

// sum_{k<=floor(bound)} C(n,2k)/((k+1)(2k+1)) G_{2k+2}(x) y^{n-2k}
//   = [(-1)^n G_{n+2}(x-y) + G_{n+2}(x+y)] / ((n+1)(n+2))
template <typename Env>
typename Env::Value even_part_residual(const Env &env, int n, int k_max)
{
    using namespace detail;
    typename Env::Value lhs = env.lift(env.num(Rational(0)));
    for (int k = 0; k <= k_max; ++k) {
        Integer c = binomial(n, 2 * k);
        if (c == 0) {
            continue; // C(n, n+1) = 0; the y power would be negative
        }
        lhs += env.G(2 * k + 2, X) * env.power(env.var(Y), n - 2 * k) * frac(env, c, Integer((k + 1) * (2 * k + 1)));
    }
    typename Env::Value sign = env.lift(frac(env, n % 2 == 0 ? 1 : -1));
    typename Env::Value rhs = (sign * env.G(n + 2, X_MINUS_Y) + env.G(n + 2, X_PLUS_Y)) / frac(env, (n + 1) * (n + 2));
    return lhs - rhs;
}

template <typename Env>
typename Env::Value residual_thm3(const Env &env, int n)
{
    return even_part_residual(env, n, n / 2);
}

template <typename Env>
typename Env::Value residual_thm4(const Env &env, int n)
{
    return even_part_residual(env, n, (n + 1) / 2);
}

template <typename Env>
typename Env::Value sum_k_over_k2k1(const Env &env, int n)
{
    using namespace detail;
    typename Env::Value s = env.lift(env.num(Rational(0)));
    for (int k = 0; k <= n; ++k) {
        s += env.G(k + 2, X) * frac(env, binomial(n, k), (k + 2) * (k + 1));
    }
    return s;
}

// q sum_k C(n,k)/((k+2)(k+1)) G_{k+2}(x)
//   = q G_{n+2}(x+1)/((n+1)(n+2)) - 2q/([2]_q (n+1))
template <typename Env>
typename Env::Value residual_eq109(const Env &env, int n)
{
    using namespace detail;
    typename Env::Value lhs = sum_k_over_k2k1(env, n) * env.q();
    typename Env::Value rhs = env.G(n + 2, x_plus(Rational(1))) * (env.q() / frac(env, (n + 1) * (n + 2)))
                              - env.lift(frac(env, 2) * env.q() / (env.qbracket(2) * frac(env, n + 1)));
    return lhs - rhs;
}

// q G_{n+1}(x+1) + G_{n+1}(x) = 2(n+1) x^n
template <typename Env>
typename Env::Value residual_eq110(const Env &env, int n)
{
    using namespace detail;
    typename Env::Value lhs = env.G(n + 1, x_plus(Rational(1))) * env.q() + env.G(n + 1, X);
    return lhs - env.power(env.var(X), n) * frac(env, 2 * (n + 1));
}

// sum_k C(n,k)/((k+2)(k+1)) G_{k+2}(x)
//   = 2x^{n+1}/(qn+q) - G_{n+2}(x)/((qn+q)(n+2)) - 2/([2]_q (n+1))
template <typename Env>
typename Env::Value residual_thm5(const Env &env, int n)
{
    using namespace detail;
    typename Env::Scalar qn_q = env.q() * frac(env, n + 1);
    typename Env::Value rhs = env.power(env.var(X), n + 1) * (frac(env, 2) / qn_q)
                              - env.G(n + 2, X) / (qn_q * frac(env, n + 2))
                              - env.lift(frac(env, 2) / (env.qbracket(2) * frac(env, n + 1)));
    return sum_k_over_k2k1(env, n) - rhs;
}

// q = 1: sum = 2x^{n+1}/(n+1) - G_{n+2}(x)/((n+1)(n+2)) - 1/(n+1)
template <typename Env>
typename Env::Value residual_cor6(const Env &env, int n)
{
    using namespace detail;
    typename Env::Value rhs = env.power(env.var(X), n + 1) * frac(env, 2, n + 1)
                              - env.G(n + 2, X) / frac(env, (n + 1) * (n + 2)) - env.lift(frac(env, 1, n + 1));
    return sum_k_over_k2k1(env, n) - rhs;
}

// sum_{k<=n} C(2n,2k)/((k+1)(2k+1)) G_{2k+2}(x)
template <typename Env>
typename Env::Value even_sum_2n(const Env &env, int n)
{
    using namespace detail;
    typename Env::Value s = env.lift(env.num(Rational(0)));
    for (int k = 0; k <= n; ++k) {
        s += env.G(2 * k + 2, X) * frac(env, binomial(2 * n, 2 * k), Integer((k + 1) * (2 * k + 1)));
    }
    return s;
}

enum class Variant { printed, printed_derivation, corrected };

// Printed right-hand side:
//   (n+2)x^{n+1}/((2n+1)(n+1)) + (n+2)(x-1)^{n+1}/((2n+1)(n+1))
//   - G_{2n+2}(x)/(q(2n+1)(2n+2)) - q G_{2n+2}(x)/((2n+1)(2n+2))
// Corrected, from [G(x-1) + G(x+1)]/((2n+1)(2n+2)) and the reflection
// identity at x and x-1:
//   [2(2n+2)x^{2n+1}/q + 2(2n+2)(x-1)^{2n+1}]/((2n+1)(2n+2))
//   - (q + 1/q) G_{2n+2}(x)/((2n+1)(2n+2))
template <typename Env>
typename Env::Value residual_thm7(const Env &env, int n, Variant variant)
{
    using namespace detail;
    const long a = 2 * n + 1;
    const long b = 2 * n + 2;
    typename Env::Value g = env.G(2 * n + 2, X);
    typename Env::Value x = env.var(X);
    typename Env::Value xm1 = env.var(x_plus(Rational(-1)));
    typename Env::Value rhs = env.lift(env.num(Rational(0)));
    if (variant == Variant::corrected) {
        rhs = env.power(x, b - 1) * (frac(env, 2 * b) / env.q()) + env.power(xm1, b - 1) * frac(env, 2 * b);
        rhs = rhs / frac(env, a * b);
        rhs -= g * ((env.q() + frac(env, 1) / env.q()) / frac(env, a * b));
    } else {
        rhs = (env.power(x, n + 1) + env.power(xm1, n + 1)) * frac(env, n + 2, a * (n + 1));
        rhs -= g / (env.q() * frac(env, a * b));
        rhs -= g * (env.q() / frac(env, a * b));
    }
    return even_sum_2n(env, n) - rhs;
}

// q = 1. Printed:
//   2(n+2)x^{n+1}/((2n+1)(2n+2)) + 2(n+2)(x-1)^{n+1}/((2n+1)(2n+2))
//   - 2 G_{2n+2}(x)/((2n+1)(2n+2))
// Corrected: 2x^{2n+1}/(2n+1) + 2(x-1)^{2n+1}/(2n+1) - G_{2n+2}(x)/((2n+1)(n+1))
template <typename Env>
typename Env::Value residual_cor8(const Env &env, int n, Variant variant)
{
    using namespace detail;
    const long a = 2 * n + 1;
    const long b = 2 * n + 2;
    typename Env::Value g = env.G(2 * n + 2, X);
    typename Env::Value x = env.var(X);
    typename Env::Value xm1 = env.var(x_plus(Rational(-1)));
    typename Env::Value rhs = env.lift(env.num(Rational(0)));
    if (variant == Variant::corrected) {
        rhs = (env.power(x, a) + env.power(xm1, a)) * frac(env, 2, a) - g / frac(env, a * (n + 1));
    } else {
        rhs = (env.power(x, n + 1) + env.power(xm1, n + 1)) * frac(env, 2 * (n + 2), a * b)
              - g * frac(env, 2, a * b);
    }
    return even_sum_2n(env, n) - rhs;
}

// sum_{k<=n} C(2n+1,2k)/((k+1)(2k+1)) G_{2k+2}(x)
template <typename Env>
typename Env::Value odd_sum_2n1(const Env &env, int n)
{
    using namespace detail;
    typename Env::Value s = env.lift(env.num(Rational(0)));
    for (int k = 0; k <= n; ++k) {
        s += env.G(2 * k + 2, X) * frac(env, binomial(2 * n + 1, 2 * k), Integer((k + 1) * (2 * k + 1)));
    }
    return s;
}

// x^{2n+2}/(q(n+1)) - (x-1)^{2n+2}/(n+1) + c(q) G_{2n+3}(x)/D where
//   printed:            c = (q-1)/q,    D = (2n+3)(n+1)
//   printed_derivation: c = (q-1)/q,    D = (2n+3)(2n+2)
//   corrected:          c = (q^2-1)/q,  D = (2n+3)(2n+2)
template <typename Env>
typename Env::Value residual_thm9(const Env &env, int n, Variant variant)
{
    using namespace detail;
    typename Env::Scalar q = env.q();
    typename Env::Value x = env.var(X);
    typename Env::Value xm1 = env.var(x_plus(Rational(-1)));
    using S = typename Env::Scalar;
    S c = variant == Variant::corrected ? S((q * q - frac(env, 1)) / q) : S((q - frac(env, 1)) / q);
    const long d = variant == Variant::printed ? (2 * n + 3) * (n + 1) : (2 * n + 3) * (2 * n + 2);
    typename Env::Value rhs = env.power(x, 2 * n + 2) / (q * frac(env, n + 1))
                              - env.power(xm1, 2 * n + 2) / frac(env, n + 1)
                              + env.G(2 * n + 3, X) * (c / frac(env, d));
    return odd_sum_2n1(env, n) - rhs;
}

// q = 1: sum = 2x^{2n+2}/(2n+2) - 2(x-1)^{2n+2}/(2n+2)
template <typename Env>
typename Env::Value residual_cor10(const Env &env, int n)
{
    using namespace detail;
    typename Env::Value x = env.var(X);
    typename Env::Value xm1 = env.var(x_plus(Rational(-1)));
    typename Env::Value rhs = (env.power(x, 2 * n + 2) - env.power(xm1, 2 * n + 2)) * frac(env, 2, 2 * n + 2);
    return odd_sum_2n1(env, n) - rhs;
}

// G_{n,q}(dx) = d^{n-1} sum_{a<d} (-1)^a q^a G_{n,Q}(x + a/d), with Q = q
// (printed) or Q = q^d (corrected). d must be odd.
template <typename Env>
typename Env::Value residual_distribution(const Env &env, int n, int d, Variant variant)
{
    using namespace detail;
    if (d < 1 || d % 2 == 0) {
        throw domain_error("distribution formula needs an odd d >= 1");
    }
    const int qpow = variant == Variant::corrected ? d : 1;
    typename Env::Value rhs = env.lift(env.num(Rational(0)));
    for (int a = 0; a < d; ++a) {
        typename Env::Scalar w = env.power(env.q(), a) * frac(env, a % 2 == 0 ? 1 : -1);
        rhs += env.G(n, x_plus(make_rational(a, d)), qpow) * w;
    }
    rhs = rhs * env.num(qgenocchi::pow(Rational(d), n - 1));
    return env.G(n, scaled_x(Rational(d))) - rhs;
}

// G_{m+1}(x)/(m+1) = [2]_q sum_{n>=1} (-1)^n q^n n^m      (printed)
// G_{m+1}(x)/(m+1) = 2 sum_{n>=0} (-1)^n q^n (n + x)^m    (corrected)
template <typename Env>
typename Env::Value residual_eq118(const Env &env, int m, Variant variant)
{
    using namespace detail;
    typename Env::Value rhs = env.lift(env.num(Rational(0)));
    if (variant == Variant::corrected) {
        typename Env::Value x = env.var(X);
        for (int j = 0; j <= m; ++j) {
            typename Env::Scalar a = env.alt_power_sum(j);
            if (j == 0) {
                a = a + frac(env, 1);
            }
            rhs += env.power(x, m - j) * (a * frac(env, binomial(m, j), 1));
        }
        rhs = rhs * frac(env, 2);
    } else {
        rhs = env.lift(env.qbracket(2) * env.alt_power_sum(m));
    }
    return env.G(m + 1, X) / frac(env, m + 1) - rhs;
}

// zeta(-m, x : q) - G_{m+1}(x)/(m+1) with zeta taken from the x-free series
// 2 sum_{n>=1} (-1)^n q^n n^{-s} (printed) or its Hurwitz form (corrected).
template <typename Env>
typename Env::Value residual_eq121(const Env &env, int m, Variant variant)
{
    using namespace detail;
    if (variant == Variant::corrected) {
        return residual_eq118(env, m, Variant::corrected) * frac(env, -1);
    }
    return env.lift(frac(env, 2) * env.alt_power_sum(m)) - env.G(m + 1, X) / frac(env, m + 1);
}

} // namespace qgenocchi::identities

#endif

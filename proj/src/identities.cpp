#include <qgenocchi/identities.hpp>

#include <qgenocchi/analytic.hpp>
#include <qgenocchi/genocchi.hpp>
#include <qgenocchi/series_oracle.hpp>

namespace qgenocchi::identities
{

RatFuncQ SymbolicEnv::qbracket(int n) const
{
    if (classical_) {
        return RatFuncQ(n);
    }
    return qbracket_rf(n);
}

PolyXY SymbolicEnv::var(const Affine &a) const
{
    return affine<RatFuncQ>(a.x_coeff, a.y_coeff, a.constant);
}

PolyXY SymbolicEnv::G(int n, const Affine &a, int qpow) const
{
    PolyXY base = genocchi_poly(n);
    if (classical_) {
        base = qgenocchi::lift(specialize_q(base, Rational(1)));
    } else if (qpow != 1) {
        base = compose_q_power(base, qpow);
    }
    if (a.x_coeff == 1 && a.y_coeff == 0 && a.constant == 0) {
        return base;
    }
    return base.substitute_x(var(a));
}

RatFuncQ SymbolicEnv::alt_power_sum(int m) const
{
    RatFuncQ a = analytic::alternating_power_sum(m);
    return classical_ ? RatFuncQ(a.eval(Rational(1))) : a;
}

NumericEnv::NumericEnv(Rational q0, Rational x0, Rational y0)
    : q0_(std::move(q0)), x0_(std::move(x0)), y0_(std::move(y0))
{
}

Rational NumericEnv::qbracket(int n) const
{
    Rational acc(0);
    Rational p(1);
    for (int k = 0; k < n; ++k) {
        acc += p;
        p *= q0_;
    }
    return acc;
}

const std::vector<Rational> &NumericEnv::numbers(int qpow, int n) const
{
    auto &slot = numbers_by_qpow_[qpow];
    if (static_cast<int>(slot.size()) <= n) {
        slot = series::genocchi_numbers_at(qgenocchi::pow(q0_, qpow), std::max(n, 2 * static_cast<int>(slot.size()) + 8));
    }
    return slot;
}

Rational NumericEnv::G(int n, const Affine &a, int qpow) const
{
    const auto &g = numbers(qpow, n);
    const Rational arg = var(a);
    Rational acc(0);
    Rational xp(1);
    for (int l = 0; l <= n; ++l) {
        acc += binomial(n, l) * xp * g[static_cast<std::size_t>(n - l)];
        xp *= arg;
    }
    return acc;
}

std::vector<Integer> eulerian_row(int m)
{
    if (m < 0) {
        throw domain_error("eulerian_row: m must be nonnegative");
    }
    std::vector<Integer> row{1};
    for (int r = 2; r <= m; ++r) {
        std::vector<Integer> next(static_cast<std::size_t>(r), 0);
        for (int k = 0; k < r; ++k) {
            Integer v = 0;
            if (k < r - 1) {
                v += (k + 1) * row[static_cast<std::size_t>(k)];
            }
            if (k >= 1) {
                v += (r - k) * row[static_cast<std::size_t>(k - 1)];
            }
            next[static_cast<std::size_t>(k)] = v;
        }
        row = std::move(next);
    }
    return row;
}

Rational NumericEnv::alt_power_sum(int m) const
{
    const Rational z = -q0_;
    if (z == 1) {
        throw pole_error("alternating power sum has a pole at q = -1");
    }
    if (m == 0) {
        return z / (1 - z);
    }
    Rational e(0);
    Rational zp(1);
    for (const auto &a : eulerian_row(m)) {
        e += a * zp;
        zp *= z;
    }
    return z * e / qgenocchi::pow(Rational(1 - z), m + 1);
}

} // namespace qgenocchi::identities

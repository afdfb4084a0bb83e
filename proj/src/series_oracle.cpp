#include <qgenocchi/series_oracle.hpp>

#include <qgenocchi/errors.hpp>

namespace qgenocchi::series
{

namespace
{

void require_nonnegative(int n_max)
{
    if (n_max < 0) {
        throw domain_error("series oracle: n_max must be nonnegative");
    }
}

// 2t / (q e^t + 1) over any ring that can hold q.
template <typename R>
TruncSeries<R> kernel(const R &q, int order)
{
    TruncSeries<R> denom(order);
    for (int k = 0; k <= order; ++k) {
        denom[k] = q * R(Rational(Integer(1), factorial(k)));
    }
    denom[0] += R(1);
    TruncSeries<R> r = denom.reciprocal().shifted(1);
    for (int k = 0; k <= order; ++k) {
        r[k] *= R(2);
    }
    return r;
}

template <typename C>
TruncSeries<BivariatePoly<C>> exp_xt_over(int order)
{
    TruncSeries<BivariatePoly<C>> s(order);
    for (int n = 0; n <= order; ++n) {
        s[n] = BivariatePoly<C>::monomial(C(Rational(Integer(1), factorial(n))), n, 0);
    }
    return s;
}

template <typename C>
std::vector<BivariatePoly<C>> extract(const TruncSeries<BivariatePoly<C>> &s)
{
    std::vector<BivariatePoly<C>> out;
    out.reserve(static_cast<std::size_t>(s.order()) + 1);
    for (int n = 0; n <= s.order(); ++n) {
        out.push_back(s[n] * C(Rational(factorial(n))));
    }
    return out;
}

} // namespace

TruncSeries<PolyXY> exp_xt(int order)
{
    require_nonnegative(order);
    return exp_xt_over<RatFuncQ>(order);
}

std::vector<PolyXY> genocchi_from_series(int n_max)
{
    require_nonnegative(n_max);
    auto k = kernel(RatFuncQ::indeterminate(), n_max).map([](const RatFuncQ &c) { return PolyXY(c); });
    return extract(k * exp_xt_over<RatFuncQ>(n_max));
}

std::vector<RationalPolyXY> genocchi_polys_at(const Rational &q0, int n_max)
{
    require_nonnegative(n_max);
    if (q0 == -1) {
        throw pole_error("generating function has a pole at q = -1");
    }
    auto k = kernel(q0, n_max).map([](const Rational &c) { return RationalPolyXY(c); });
    return extract(k * exp_xt_over<Rational>(n_max));
}

std::vector<Rational> genocchi_numbers_at(const Rational &q0, int n_max)
{
    require_nonnegative(n_max);
    if (q0 == -1) {
        throw pole_error("generating function has a pole at q = -1");
    }
    auto k = kernel(q0, n_max);
    std::vector<Rational> out;
    for (int n = 0; n <= n_max; ++n) {
        out.push_back(k[n] * factorial(n));
    }
    return out;
}

std::vector<Rational> classical_genocchi(int n_max)
{
    return genocchi_numbers_at(Rational(1), n_max);
}

} // namespace qgenocchi::series

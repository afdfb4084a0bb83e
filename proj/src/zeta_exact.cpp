#include <qgenocchi/analytic.hpp>

#include <mutex>

#include <qgenocchi/errors.hpp>
#include <qgenocchi/genocchi.hpp>

namespace qgenocchi::analytic
{

RatFuncQ alternating_power_sum(int m)
{
    if (m < 0) {
        throw domain_error("alternating_power_sum: m must be nonnegative");
    }
    static std::mutex mutex;
    static std::vector<RatFuncQ> cache;
    std::lock_guard<std::mutex> lock(mutex);
    const RatFuncQ q = RatFuncQ::indeterminate();
    if (cache.empty()) {
        cache.push_back(-q / (1 + q));
    }
    while (static_cast<int>(cache.size()) <= m) {
        cache.push_back(q * cache.back().derivative());
    }
    return cache[static_cast<std::size_t>(m)];
}

RatFuncQ zeta_neg_exact(int m)
{
    return RatFuncQ(2) * alternating_power_sum(m);
}

PolyXY zeta_neg_exact_with_x(int m, Prefactor prefactor)
{
    if (m < 0) {
        throw domain_error("zeta_neg_exact_with_x: m must be nonnegative");
    }
    std::vector<RatFuncQ> coeffs(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) {
        RatFuncQ a = alternating_power_sum(j);
        if (j == 0) {
            a += RatFuncQ(1); // the n = 0 term, 0^0 = 1
        }
        coeffs[static_cast<std::size_t>(m - j)] = a * RatFuncQ(Rational(binomial(m, j)));
    }
    const RatFuncQ c = prefactor == Prefactor::two ? RatFuncQ(2) : qbracket_rf(2);
    return PolyXY::from_x_coefficients(coeffs) * c;
}

PolyXY interpolation_residual(int m, Prefactor prefactor)
{
    if (m < 1) {
        throw domain_error("interpolation_residual: m must be >= 1");
    }
    return zeta_neg_exact_with_x(m, prefactor) - genocchi_poly(m + 1) / RatFuncQ(m + 1);
}

} // namespace qgenocchi::analytic

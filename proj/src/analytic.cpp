#include <qgenocchi/analytic.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <qgenocchi/errors.hpp>

namespace qgenocchi::analytic
{

namespace
{

// Pairwise summation keeps the rounding order fixed and the error O(log n).
template <typename C>
C pairwise_sum(const C *v, std::size_t n)
{
    if (n <= 8) {
        C s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            s += v[i];
        }
        return s;
    }
    const std::size_t h = n / 2;
    return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

// e^{2 pi i j / n}, with the upper half-plane reflected so that nodes j and
// n - j are exact conjugates.
std::complex<long double> unit_root(int j, int n)
{
    if (2 * j > n) {
        return std::conj(unit_root(n - j, n));
    }
    return std::polar(1.0L, 2.0L * std::numbers::pi_v<long double> * j / n);
}

bool finite(ComplexF z)
{
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

struct ZetaTerms {
    ComplexF s;
    double q0;
    double x0;
    ZetaVariant variant;

    long first() const { return variant == ZetaVariant::printed || x0 == 0.0 ? 1 : 0; }

    double base(long n) const { return variant == ZetaVariant::printed ? double(n) : double(n) + x0; }

    // 2 (-1)^n q^n base(n)^{-s}
    ComplexF operator()(long n) const
    {
        const double sign = n % 2 == 0 ? 2.0 : -2.0;
        return sign * std::pow(q0, double(n)) * std::exp(-s * std::log(base(n)));
    }

    // |term(n+1)| / |term(n)| is at most this for every later pair.
    double ratio_bound(long n) const
    {
        const double sigma = s.real();
        if (sigma >= 0.0) {
            return q0;
        }
        return q0 * std::pow(base(n + 1) / base(n), -sigma);
    }
};

ZetaResult plain_sum(const ZetaTerms &terms, const ZetaParams &params)
{
    ZetaResult r;
    ComplexF acc = 0.0;
    long n = terms.first();
    for (; r.terms < params.tail_terms; ++n, ++r.terms) {
        acc += terms(n);
        const double ratio = terms.ratio_bound(n + 1);
        if (ratio < 1.0) {
            const double tail = std::abs(terms(n + 1)) / (1.0 - ratio);
            if (tail < params.tolerance) {
                r.value = acc;
                r.terms += 1;
                r.tail_bound = tail;
                return r;
            }
        }
    }
    throw non_convergence("zeta series: tail bound above tolerance after tail_terms terms");
}

// Euler transformation in partial-sum form: the last `window` partial sums are
// averaged pairwise until one value is left. The estimate is recomputed as the
// window slides forward until two consecutive estimates agree.
ZetaResult euler_sum(const ZetaTerms &terms, const ZetaParams &params)
{
    constexpr int window = 20;
    ZetaResult r;
    r.euler_transformed = true;
    std::vector<ComplexF> partial;
    ComplexF acc = 0.0;
    long n = terms.first();
    auto estimate = [&]() {
        std::vector<ComplexF> row(partial.end() - window, partial.end());
        for (int level = window - 1; level > 0; --level) {
            for (int i = 0; i < level; ++i) {
                row[static_cast<std::size_t>(i)] = 0.5 * (row[static_cast<std::size_t>(i)] + row[static_cast<std::size_t>(i) + 1]);
            }
        }
        return row.front();
    };
    ComplexF previous;
    bool have_previous = false;
    while (r.terms < params.tail_terms) {
        acc += terms(n++);
        ++r.terms;
        partial.push_back(acc);
        if (static_cast<int>(partial.size()) < window || partial.size() % window != 0) {
            continue;
        }
        const ComplexF e = estimate();
        if (have_previous) {
            const double change = std::abs(e - previous);
            const double floor = 16.0 * std::numeric_limits<double>::epsilon() * std::abs(e);
            if (change < std::max(params.tolerance, floor)) {
                r.value = e;
                r.tail_bound = change;
                return r;
            }
        }
        previous = e;
        have_previous = true;
    }
    throw non_convergence("zeta series: Euler-transformed estimates did not settle within tail_terms terms");
}

} // namespace

ZetaResult zeta_series(ComplexF s, const ZetaParams &params, ZetaVariant variant)
{
    if (!(params.q0 > 0.0 && params.q0 < 1.0)) {
        throw domain_error("zeta_series: q0 must lie in (0, 1)");
    }
    if (!(params.x0 >= 0.0) || !std::isfinite(params.x0)) {
        throw domain_error("zeta_series: x0 must be finite and >= 0");
    }
    if (!(params.tolerance > 0.0) || params.tail_terms < 1) {
        throw domain_error("zeta_series: tolerance and tail_terms must be positive");
    }
    if (!finite(s)) {
        throw domain_error("zeta_series: s must be finite");
    }
    const ZetaTerms terms{s, params.q0, params.x0, variant};
    ZetaResult r = params.q0 > 0.6 ? euler_sum(terms, params) : plain_sum(terms, params);
    if (!finite(r.value)) {
        throw non_convergence("zeta series: overflow");
    }
    return r;
}

ComplexF generating_function(double x0, double q0, ComplexF t)
{
    const ComplexF den = q0 * std::exp(t) + 1.0;
    const ComplexF v = 2.0 * t * std::exp(x0 * t) / den;
    if (!finite(v)) {
        throw pole_error("generating function evaluated at a singularity");
    }
    return v;
}

double max_contour_radius(double q0)
{
    if (!(q0 > 0.0) || !std::isfinite(q0)) {
        throw domain_error("contour: q0 must be a positive real");
    }
    const double l = std::log(q0);
    return 0.9 * std::sqrt(l * l + std::numbers::pi * std::numbers::pi);
}

ComplexF cauchy_contour(int n, double x0, double q0, double radius, int nodes)
{
    if (n < 0) {
        throw domain_error("cauchy_contour: n must be >= 0");
    }
    if (nodes < 16) {
        throw domain_error("cauchy_contour: at least 16 nodes are required");
    }
    if (!(radius > 0.0) || radius > max_contour_radius(q0)) {
        throw domain_error("cauchy_contour: radius must lie in (0, 0.9 * distance to the nearest pole]");
    }
    // The samples are O(1) while their sum is O(n! / nodes) smaller, so the
    // nodes are evaluated and summed in extended precision.
    using Wide = std::complex<long double>;
    std::vector<Wide> samples(static_cast<std::size_t>(nodes));
    const long double r = radius;
    const long double r_neg_n = std::pow(r, -n);
    for (int k = 0; k < nodes; ++k) {
        const Wide t = r * unit_root(k, nodes);
        // t^{-n} = radius^{-n} e^{-2 pi i nk / nodes}
        const Wide t_neg_n = r_neg_n * std::conj(unit_root(static_cast<int>((static_cast<long long>(n) * k) % nodes), nodes));
        const Wide f = 2.0L * t * std::exp(static_cast<long double>(x0) * t) / (static_cast<long double>(q0) * std::exp(t) + 1.0L);
        if (!std::isfinite(f.real()) || !std::isfinite(f.imag())) {
            throw pole_error("generating function evaluated at a singularity");
        }
        samples[static_cast<std::size_t>(k)] = f * t_neg_n;
    }
    long double n_factorial = 1.0L;
    for (int i = 2; i <= n; ++i) {
        n_factorial *= i;
    }
    const Wide sum = pairwise_sum(samples.data(), samples.size()) * (n_factorial / nodes);
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

DerivativeEstimate derivative_limit(int n, double x0, double q0, std::span<const double> h_schedule)
{
    if (n < 0) {
        throw domain_error("derivative_limit: n must be >= 0");
    }
    if (h_schedule.empty()) {
        throw domain_error("derivative_limit: empty step schedule");
    }
    for (std::size_t i = 0; i < h_schedule.size(); ++i) {
        if (!(h_schedule[i] > 0.0) || (i > 0 && !(h_schedule[i] < h_schedule[i - 1]))) {
            throw domain_error("derivative_limit: steps must be positive and strictly decreasing");
        }
    }
    const double reach = max_contour_radius(q0) / 0.9;
    if (0.5 * n * h_schedule.front() >= reach) {
        throw domain_error("derivative_limit: stencil reaches a pole of the generating function");
    }

    // k-th central difference sum_j (-1)^j C(k,j) F((k/2 - j) h) / h^k
    auto central = [&](double h) {
        double acc = 0.0;
        double c = 1.0;
        for (int j = 0; j <= n; ++j) {
            const double t = (0.5 * n - j) * h;
            acc += (j % 2 == 0 ? c : -c) * generating_function(x0, q0, ComplexF(t, 0.0)).real();
            c = c * (n - j) / (j + 1);
        }
        return acc / std::pow(h, n);
    };

    // Neville tableau in h^2; the diagonal holds the extrapolants.
    const std::size_t m = h_schedule.size();
    std::vector<double> row(m);
    DerivativeEstimate est;
    for (std::size_t i = 0; i < m; ++i) {
        row[i] = central(h_schedule[i]);
        for (std::size_t j = i; j-- > 0;) {
            const double ratio = (h_schedule[j] * h_schedule[j]) / (h_schedule[i] * h_schedule[i]);
            row[j] = row[j + 1] + (row[j + 1] - row[j]) / (ratio - 1.0);
        }
        est.extrapolants.push_back(row[0]);
    }

    // Take the extrapolant where successive values agree best; growth of the
    // differences after that point means rounding has taken over.
    est.value = est.extrapolants.front();
    if (m >= 2) {
        std::size_t best = 1;
        double best_diff = std::abs(est.extrapolants[1] - est.extrapolants[0]);
        for (std::size_t i = 2; i < m; ++i) {
            const double d = std::abs(est.extrapolants[i] - est.extrapolants[i - 1]);
            if (d < best_diff) {
                best = i;
                best_diff = d;
            }
        }
        est.value = est.extrapolants[best];
        const double last_diff = std::abs(est.extrapolants[m - 1] - est.extrapolants[m - 2]);
        est.diverging = last_diff > 10.0 * best_diff && last_diff > 1e-12 * std::max(1.0, std::abs(est.value));
    }
    return est;
}

std::vector<double> default_h_schedule()
{
    return {0.4, 0.2, 0.1, 0.05, 0.025, 0.0125};
}

} // namespace qgenocchi::analytic

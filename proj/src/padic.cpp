#include <qgenocchi/padic.hpp>

#include <limits>

#include <qgenocchi/errors.hpp>
#include <qgenocchi/genocchi.hpp>

namespace qgenocchi::padic
{

namespace
{

bool is_prime(long p)
{
    return p >= 2 && mpz_probab_prime_p(Integer(p).get_mpz_t(), 30) > 0;
}

long remove_factor(const Integer &n, const Integer &p)
{
    Integer rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

} // namespace

Valuation vp(const Rational &x, long p)
{
    if (!is_prime(p)) {
        throw domain_error("vp: p must be prime");
    }
    if (x == 0) {
        return std::nullopt;
    }
    const Integer pp(p);
    return remove_factor(x.get_num(), pp) - remove_factor(x.get_den(), pp);
}

std::string to_string(const Valuation &v)
{
    return v ? std::to_string(*v) : "inf";
}

PadicContext::PadicContext(long p, Rational q0, int n_max) : p_(p), q0_(std::move(q0)), n_max_(n_max)
{
    if (p == 2 || !is_prime(p)) {
        throw domain_error("p must be an odd prime");
    }
    const Valuation v = vp(Rational(1 - q0_), p);
    if (v && *v < 1) {
        throw domain_error("q0 must satisfy |1 - q0|_p < 1");
    }
    if (n_max < 0 || n_max > 12) {
        throw domain_error("truncation exponent must lie in 0..12");
    }
    // p^n_max must fit the index type.
    long bound = 1;
    for (int i = 0; i < n_max; ++i) {
        if (bound > std::numeric_limits<long>::max() / p) {
            throw domain_error("p^n_max is too large");
        }
        bound *= p;
    }
}

long PadicContext::power(int N) const
{
    if (N < 0 || N > n_max_) {
        throw domain_error("truncation level outside 0..n_max");
    }
    long r = 1;
    for (int i = 0; i < N; ++i) {
        r *= p_;
    }
    return r;
}

Rational fermionic_partial_sum(const Integrand &f, int N, const PadicContext &ctx)
{
    const long bound = ctx.power(N);
    Rational acc(0);
    for (long xi = 0; xi < bound; ++xi) {
        if (xi % 2 == 0) {
            acc += f(xi);
        } else {
            acc -= f(xi);
        }
    }
    return acc;
}

Rational functional_equation_check(const Integrand &f, int N, const PadicContext &ctx)
{
    const Integrand shifted = [&f](long xi) { return f(xi + 1); };
    return fermionic_partial_sum(shifted, N, ctx) + fermionic_partial_sum(f, N, ctx) - f(0) - f(ctx.power(N));
}

std::vector<LevelRow> convergence_table(int n, const Rational &x0, int levels, const PadicContext &ctx)
{
    if (n < 1) {
        throw domain_error("integral_vs_recurrence: n must be >= 1");
    }
    if (levels < 0 || levels > ctx.n_max()) {
        throw domain_error("levels must lie in 0..n_max");
    }
    const Rational target = genocchi_poly_value_at(n, x0, ctx.q0());

    std::vector<LevelRow> rows;
    Rational acc(0);
    Rational q_pow(1);
    long xi = 0;
    for (int N = 1; N <= levels; ++N) {
        const long bound = ctx.power(N);
        for (; xi < bound; ++xi) {
            Rational term = q_pow * qgenocchi::pow(Rational(x0 + xi), n - 1);
            if (xi % 2 == 0) {
                acc += term;
            } else {
                acc -= term;
            }
            q_pow *= ctx.q0();
        }
        LevelRow row;
        row.level = N;
        row.partial_sum = acc * n;
        row.error_valuation = vp(Rational(row.partial_sum - target), ctx.p());
        rows.push_back(std::move(row));
    }
    return rows;
}

Valuation integral_vs_recurrence(int n, const Rational &x0, int N, const PadicContext &ctx)
{
    if (N < 1) {
        throw domain_error("integral_vs_recurrence: N must be >= 1");
    }
    return convergence_table(n, x0, N, ctx).back().error_valuation;
}

} // namespace qgenocchi::padic

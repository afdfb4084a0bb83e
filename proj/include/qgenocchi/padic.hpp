#ifndef QGENOCCHI_PADIC_HPP
#define QGENOCCHI_PADIC_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <qgenocchi/rational.hpp>

namespace qgenocchi::padic
{

// p-adic valuation; std::nullopt stands for +infinity (x = 0).
using Valuation = std::optional<long>;

// v_p(numerator) - v_p(denominator). Throws domain_error unless p is prime.
Valuation vp(const Rational &x, long p);

std::string to_string(const Valuation &v);

class PadicContext
{
public:
    // Throws domain_error unless p is an odd prime, v_p(1 - q0) >= 1 and
    // 0 <= n_max <= 12.
    PadicContext(long p, Rational q0, int n_max);

    long p() const { return p_; }
    const Rational &q0() const { return q0_; }
    int n_max() const { return n_max_; }
    // p^N as an index bound.
    long power(int N) const;

private:
    long p_;
    Rational q0_;
    int n_max_;
};

using Integrand = std::function<Rational(long)>;

// sum_{xi < p^N} (-1)^xi f(xi), exactly.
Rational fermionic_partial_sum(const Integrand &f, int N, const PadicContext &ctx);

// S_N(f(. + 1)) + S_N(f) - f(0) - f(p^N). Zero for every f and N because p^N
// is odd.
Rational functional_equation_check(const Integrand &f, int N, const PadicContext &ctx);

// v_p(S - G_{n,q0}(x0)) with S = n sum_{xi < p^N} (-1)^xi q0^xi (x0 + xi)^{n-1}.
Valuation integral_vs_recurrence(int n, const Rational &x0, int N, const PadicContext &ctx);

struct LevelRow {
    int level = 0;
    Rational partial_sum;
    Valuation error_valuation;
};

// integral_vs_recurrence for N = 1..levels from a single pass over xi.
std::vector<LevelRow> convergence_table(int n, const Rational &x0, int levels, const PadicContext &ctx);

} // namespace qgenocchi::padic

#endif

#ifndef QGENOCCHI_GENOCCHI_HPP
#define QGENOCCHI_GENOCCHI_HPP

#include <span>
#include <vector>

#include <qgenocchi/poly_xy.hpp>
#include <qgenocchi/ratfunc.hpp>

namespace qgenocchi
{

/// q-Genocchi numbers G_{n,q} and polynomials G_{n,q}(x) for n <= max_n.
///
/// Numbers come from the umbral recurrence
///     G_0 = 0,  q (G + 1)^n + G_n = 2 [n = 1],
/// where (G + 1)^n expands to sum_k C(n,k) G_k (the k = 0 term is G_0, not 1).
/// Solving for G_n gives G_1 = 2/(1+q) and, for n >= 2,
///     G_n = -q/(1+q) * sum_{k<n} C(n,k) G_k.
/// Polynomials are G_n(x) = sum_l C(n,l) x^l G_{n-l}.
///
/// A built table is immutable and safe to share between threads.
class GenocchiTable
{
public:
    explicit GenocchiTable(int max_n);

    int max_n() const { return static_cast<int>(numbers_.size()) - 1; }
    const RatFuncQ &number(int n) const;
    const PolyXY &poly(int n) const;
    std::span<const RatFuncQ> numbers() const { return numbers_; }
    std::span<const PolyXY> polys() const { return polys_; }

private:
    std::vector<RatFuncQ> numbers_;
    std::vector<PolyXY> polys_;
};

// Backed by a process-wide table that grows on demand. Negative n throws
// domain_error.
RatFuncQ genocchi_number(int n);
PolyXY genocchi_poly(int n);

// The recurrence with q = q0 substituted up front (pure Rational arithmetic).
// Throws pole_error at q0 = -1.
std::vector<Rational> genocchi_numbers_at(const Rational &q0, int n_max);
Rational genocchi_poly_value_at(int n, const Rational &x0, const Rational &q0);

struct IdentityPair {
    PolyXY lhs;
    PolyXY rhs;
};

// G_n(x + y) against sum_k C(n,k) G_k(x) y^(n-k).
IdentityPair addition_expand(int n);

// q G_{n+1}(x + 1) + G_{n+1}(x) against 2 (n+1) x^n.
IdentityPair reflection_pair(int n);

} // namespace qgenocchi

#endif

#ifndef QGENOCCHI_ANALYTIC_HPP
#define QGENOCCHI_ANALYTIC_HPP

#include <complex>
#include <span>
#include <vector>

#include <qgenocchi/poly_xy.hpp>
#include <qgenocchi/ratfunc.hpp>

namespace qgenocchi::analytic
{

using ComplexF = std::complex<double>;

// ---------------------------------------------------------------------------
// Exact values at negative integers.

// A_m(q) = sum_{n>=1} (-q)^n n^m as an element of Q(q):
// A_0 = -q/(1+q), A_m = q d/dq A_{m-1}.
RatFuncQ alternating_power_sum(int m);

enum class Prefactor { two, qbracket2 };

// 2 A_m: the x-free series 2 sum_{n>=1} (-1)^n q^n n^{-s} at s = -m.
RatFuncQ zeta_neg_exact(int m);

// c * sum_{n>=0} (-q)^n (n + x)^m = c * sum_j C(m,j) x^{m-j} (A_j + [j = 0]),
// with c = 2 or c = [2]_q.
PolyXY zeta_neg_exact_with_x(int m, Prefactor prefactor = Prefactor::two);

// zeta_neg_exact_with_x(m) - G_{m+1,q}(x)/(m+1). Requires m >= 1.
PolyXY interpolation_residual(int m, Prefactor prefactor = Prefactor::two);

// ---------------------------------------------------------------------------
// Numeric q-zeta series.

struct ZetaParams {
    double q0 = 0.5;
    double x0 = 0.0;
    long tail_terms = 2'000'000;
    double tolerance = 1e-15;
};

enum class ZetaVariant {
    printed, // 2 sum_{n>=1} (-1)^n q^n / n^s
    hurwitz, // 2 sum_{n>=0} (-1)^n q^n / (n + x)^s, starting at n = 1 when x = 0
};

struct ZetaResult {
    ComplexF value;
    long terms = 0;
    // Bound (plain summation) or last-correction size (Euler transform) for the
    // part of the series that was not summed.
    double tail_bound = 0.0;
    bool euler_transformed = false;
};

// q0 in (0, 1). Throws non_convergence when tail_terms is exhausted first.
ZetaResult zeta_series(ComplexF s, const ZetaParams &params, ZetaVariant variant);

// ---------------------------------------------------------------------------
// Contour integral and derivative limit.

// 2t e^{xt} / (q e^t + 1)
ComplexF generating_function(double x0, double q0, ComplexF t);

// 0.9 * distance from the origin to the nearest zero of q0 e^t + 1.
double max_contour_radius(double q0);

// (n!/nodes) sum_k F(x0, t_k) t_k^{-n}, t_k = radius e^{2 pi i k / nodes}.
// Throws domain_error for radius > max_contour_radius(q0) or nodes < 16.
ComplexF cauchy_contour(int n, double x0, double q0, double radius = 1.0, int nodes = 64);

// Same trapezoid sum carried out with 50 significant decimal digits, returning
// |result - exact| for exact rational x0, q0. Used to follow the spectral
// convergence below double precision.
double cauchy_contour_error_hp(int n, const Rational &x0, const Rational &q0, double radius, int nodes);

struct DerivativeEstimate {
    double value = 0.0;
    // Richardson tableau diagonal, one entry per step in the schedule.
    std::vector<double> extrapolants;
    // Successive extrapolants stopped agreeing (cancellation took over).
    bool diverging = false;
};

// n-th derivative of the generating function at t = 0 from central differences
// on each step of h_schedule (strictly decreasing), extrapolated in h^2.
DerivativeEstimate derivative_limit(int n, double x0, double q0, std::span<const double> h_schedule);

std::vector<double> default_h_schedule();

} // namespace qgenocchi::analytic

#endif

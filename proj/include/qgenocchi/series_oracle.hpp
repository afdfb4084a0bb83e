#ifndef QGENOCCHI_SERIES_ORACLE_HPP
#define QGENOCCHI_SERIES_ORACLE_HPP

#include <vector>

#include <qgenocchi/poly_xy.hpp>
#include <qgenocchi/rational.hpp>
#include <qgenocchi/trunc_series.hpp>

// Ground truth for G_{n,q}(x) read off the generating function
//   2t e^{xt} / (q e^t + 1) = sum_n G_{n,q}(x) t^n / n!
// by truncated series arithmetic. Nothing here uses the umbral recurrence.
namespace qgenocchi::series
{

// sum_{n<=order} x^n/n! t^n.
TruncSeries<PolyXY> exp_xt(int order);

// Entry n is n! [t^n] 2t e^{xt} (q e^t + 1)^{-1}, symbolic in q and x.
std::vector<PolyXY> genocchi_from_series(int n_max);

// Same expansion with q = q0 substituted before any arithmetic.
// Throws pole_error for q0 = -1.
std::vector<RationalPolyXY> genocchi_polys_at(const Rational &q0, int n_max);
std::vector<Rational> genocchi_numbers_at(const Rational &q0, int n_max);

// Classical Genocchi numbers: n! [t^n] 2t/(e^t + 1).
std::vector<Rational> classical_genocchi(int n_max);

} // namespace qgenocchi::series

#endif

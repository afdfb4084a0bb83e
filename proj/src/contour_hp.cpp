#include <qgenocchi/analytic.hpp>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <qgenocchi/errors.hpp>
#include <qgenocchi/genocchi.hpp>

namespace qgenocchi::analytic
{

namespace mp = boost::multiprecision;

namespace
{

using Real = mp::cpp_bin_float_50;
using Complex = mp::cpp_complex_50;

Real to_real(const Rational &r)
{
    return Real(r.get_num().get_str()) / Real(r.get_den().get_str());
}

} // namespace

double cauchy_contour_error_hp(int n, const Rational &x0, const Rational &q0, double radius, int nodes)
{
    if (q0 <= 0) {
        throw domain_error("cauchy_contour_error_hp: q0 must be positive");
    }
    if (n < 0 || nodes < 16 || !(radius > 0.0) || radius > max_contour_radius(q0.get_d())) {
        throw domain_error("cauchy_contour_error_hp: parameters outside the contour preconditions");
    }
    const Real x = to_real(x0);
    const Real q = to_real(q0);
    const Real r(radius);
    const Real two_pi = 2 * boost::math::constants::pi<Real>();

    Real re_acc = 0;
    Real im_acc = 0;
    for (int k = 0; k < nodes; ++k) {
        const Real theta = two_pi * k / nodes;
        const Complex t(r * mp::cos(theta), r * mp::sin(theta));
        const Complex f = Complex(2) * t * mp::exp(Complex(x) * t) / (Complex(q) * mp::exp(t) + Complex(1));
        const Real phase = two_pi * ((static_cast<long long>(n) * k) % nodes) / nodes;
        const Complex t_neg_n = Complex(mp::cos(phase), -mp::sin(phase)) / Complex(mp::pow(r, n));
        const Complex term = f * t_neg_n;
        re_acc += term.real();
        im_acc += term.imag();
    }
    Real n_factorial = 1;
    for (int i = 2; i <= n; ++i) {
        n_factorial *= i;
    }
    re_acc *= n_factorial / nodes;
    im_acc *= n_factorial / nodes;
    const Real exact = to_real(genocchi_poly_value_at(n, x0, q0));
    const Real err = mp::sqrt((re_acc - exact) * (re_acc - exact) + im_acc * im_acc);
    return static_cast<double>(err);
}

} // namespace qgenocchi::analytic

#include <qgenocchi/poly_xy.hpp>

namespace qgenocchi
{

namespace detail
{

coeff_text render_coeff(const Rational &c)
{
    Rational mag = abs(c);
    std::string body = qgenocchi::to_string(mag);
    return {sgn(c) < 0, body, body, mag == 1};
}

coeff_text render_coeff(const RatFuncQ &c)
{
    if (c.is_polynomial() && c.num().term_count() == 1) {
        const PolyQ &p = c.num();
        const bool negative = sgn(p.leading()) < 0;
        std::string body = (negative ? -p : p).to_string();
        return {negative, body, body, body == "1"};
    }
    std::string text = c.to_string();
    return {false, "(" + text + ")", text, false};
}

} // namespace detail

RationalPolyXY specialize_q(const PolyXY &p, const Rational &q0)
{
    return p.map_coefficients([&q0](const RatFuncQ &c) { return c.eval(q0); });
}

PolyXY lift(const RationalPolyXY &p)
{
    return p.map_coefficients([](const Rational &c) { return RatFuncQ(c); });
}

PolyXY compose_q_power(const PolyXY &p, int d)
{
    return p.map_coefficients([d](const RatFuncQ &c) { return c.compose_power(d); });
}

} // namespace qgenocchi

#include <qgenocchi/ratfunc.hpp>

#include <stdexcept>

#include <qgenocchi/errors.hpp>

namespace qgenocchi
{

RatFuncQ::RatFuncQ(const Rational &c) : num_(c), den_(Rational(1)) {}

RatFuncQ::RatFuncQ(PolyQ p) : num_(std::move(p)), den_(Rational(1)) {}

RatFuncQ::RatFuncQ(const PolyQ &num, const PolyQ &den) : num_(num), den_(den)
{
    if (den_.is_zero()) {
        throw division_by_zero("rational function with zero denominator");
    }
    normalize();
}

RatFuncQ RatFuncQ::indeterminate()
{
    return RatFuncQ(PolyQ::indeterminate());
}

RatFuncQ RatFuncQ::from_canonical(PolyQ num, PolyQ den)
{
    if (den.is_zero() || den.leading() != 1) {
        throw std::logic_error("from_canonical: denominator must be monic");
    }
    if (num.is_zero()) {
        return RatFuncQ();
    }
    return RatFuncQ(std::move(num), std::move(den), raw_tag{});
}

void RatFuncQ::normalize()
{
    if (num_.is_zero()) {
        den_ = PolyQ(Rational(1));
        return;
    }
    if (!den_.is_constant()) {
        PolyQ g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    const Rational lead = den_.leading();
    if (lead != 1) {
        Rational inv = 1 / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

RatFuncQ RatFuncQ::operator-() const
{
    return RatFuncQ(-num_, den_, raw_tag{});
}

RatFuncQ RatFuncQ::inverse() const
{
    if (is_zero()) {
        throw division_by_zero("inverse of zero rational function");
    }
    RatFuncQ r(den_, num_, raw_tag{});
    const Rational lead = r.den_.leading();
    if (lead != 1) {
        Rational inv = 1 / lead;
        r.num_ *= inv;
        r.den_ *= inv;
    }
    return r;
}

RatFuncQ &RatFuncQ::operator+=(const RatFuncQ &b)
{
    if (b.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = b;
    }
    if (den_ == b.den_) {
        num_ += b.num_;
        normalize();
        return *this;
    }
    if (den_.is_one()) {
        num_ = num_ * b.den_ + b.num_;
        den_ = b.den_;
        return *this; // gcd(p*d + n, d) = gcd(n, d) = 1
    }
    if (b.den_.is_one()) {
        num_ += b.num_ * den_;
        return *this;
    }
    PolyQ g = gcd(den_, b.den_);
    PolyQ bden_g = exact_div(b.den_, g);
    num_ = num_ * bden_g + b.num_ * exact_div(den_, g);
    den_ = den_ * bden_g;
    normalize();
    return *this;
}

RatFuncQ &RatFuncQ::operator-=(const RatFuncQ &b)
{
    return *this += -b;
}

RatFuncQ &RatFuncQ::operator*=(const RatFuncQ &b)
{
    if (is_zero() || b.is_zero()) {
        *this = RatFuncQ();
        return *this;
    }
    if (b.is_constant()) {
        num_ *= b.constant_value();
        return *this;
    }
    if (is_constant()) {
        Rational c = constant_value();
        *this = b;
        num_ *= c;
        return *this;
    }
    // Cross-cancel so the product of canonical inputs stays reduced.
    PolyQ g1 = gcd(num_, b.den_);
    PolyQ g2 = gcd(b.num_, den_);
    PolyQ n = exact_div(num_, g1) * exact_div(b.num_, g2);
    PolyQ d = exact_div(den_, g2) * exact_div(b.den_, g1);
    num_ = std::move(n);
    den_ = std::move(d);
    const Rational lead = den_.leading();
    if (lead != 1) {
        Rational inv = 1 / lead;
        num_ *= inv;
        den_ *= inv;
    }
    return *this;
}

RatFuncQ &RatFuncQ::operator/=(const RatFuncQ &b)
{
    if (b.is_zero()) {
        throw division_by_zero("rational function division by zero");
    }
    return *this *= b.inverse();
}

RatFuncQ RatFuncQ::derivative() const
{
    // (n/d)' = (n'd - nd') / d^2
    PolyQ top = num_.derivative() * den_ - num_ * den_.derivative();
    return RatFuncQ(top, den_ * den_);
}

RatFuncQ RatFuncQ::compose_power(int d) const
{
    return RatFuncQ(num_.compose_power(d), den_.compose_power(d), raw_tag{});
}

Rational RatFuncQ::eval(const Rational &q0) const
{
    Rational d = den_.eval(q0);
    if (qgenocchi::is_zero(d)) {
        throw pole_error("denominator " + den_.to_string() + " vanishes at q = " + qgenocchi::to_string(q0));
    }
    return num_.eval(q0) / d;
}

std::string RatFuncQ::to_string() const
{
    if (den_.is_one()) {
        return num_.to_string();
    }
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFuncQ pow(const RatFuncQ &f, long exponent)
{
    if (exponent < 0) {
        return pow(f.inverse(), -exponent);
    }
    RatFuncQ result(1);
    RatFuncQ base = f;
    while (exponent > 0) {
        if (exponent & 1) {
            result *= base;
        }
        exponent >>= 1;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

} // namespace qgenocchi

#ifndef QGENOCCHI_RATFUNC_HPP
#define QGENOCCHI_RATFUNC_HPP

#include <string>

#include <qgenocchi/poly_q.hpp>
#include <qgenocchi/rational.hpp>

namespace qgenocchi
{

// Element of Q(q) in canonical form: gcd(num, den) = 1 and den monic, so
// structural equality is mathematical equality. Zero is 0/1.
class RatFuncQ
{
public:
    RatFuncQ() : den_(Rational(1)) {}
    RatFuncQ(const Rational &c); // NOLINT: implicit lift of scalars
    RatFuncQ(long c) : RatFuncQ(Rational(c)) {} // NOLINT
    explicit RatFuncQ(PolyQ p);
    // Throws division_by_zero when den is zero.
    RatFuncQ(const PolyQ &num, const PolyQ &den);

    static RatFuncQ indeterminate();

    // Caller guarantees gcd(num, den) = 1 and den monic; skips the gcd.
    static RatFuncQ from_canonical(PolyQ num, PolyQ den);

    const PolyQ &num() const { return num_; }
    const PolyQ &den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    // Requires is_constant().
    Rational constant_value() const { return num_.coeff(0); }

    RatFuncQ operator-() const;
    RatFuncQ inverse() const;

    RatFuncQ &operator+=(const RatFuncQ &b);
    RatFuncQ &operator-=(const RatFuncQ &b);
    RatFuncQ &operator*=(const RatFuncQ &b);
    RatFuncQ &operator/=(const RatFuncQ &b);

    friend RatFuncQ operator+(RatFuncQ a, const RatFuncQ &b) { return a += b; }
    friend RatFuncQ operator-(RatFuncQ a, const RatFuncQ &b) { return a -= b; }
    friend RatFuncQ operator*(RatFuncQ a, const RatFuncQ &b) { return a *= b; }
    friend RatFuncQ operator/(RatFuncQ a, const RatFuncQ &b) { return a /= b; }
    friend bool operator==(const RatFuncQ &a, const RatFuncQ &b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RatFuncQ derivative() const;
    // q -> q^d; canonical form is preserved.
    RatFuncQ compose_power(int d) const;

    // Throws pole_error when den(q0) = 0.
    Rational eval(const Rational &q0) const;

    // "(num)/(den)", or just the numerator when den = 1.
    std::string to_string() const;

private:
    struct raw_tag {};
    RatFuncQ(PolyQ num, PolyQ den, raw_tag) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    PolyQ num_;
    PolyQ den_;
};

inline bool is_zero(const RatFuncQ &f)
{
    return f.is_zero();
}

inline std::string to_string(const RatFuncQ &f)
{
    return f.to_string();
}

RatFuncQ pow(const RatFuncQ &f, long exponent);

// Exact substitution q -> q0.
inline Rational specialize_q(const RatFuncQ &f, const Rational &q0)
{
    return f.eval(q0);
}

// [n]_q as an element of Q(q).
inline RatFuncQ qbracket_rf(int n)
{
    return RatFuncQ(qbracket(n));
}

} // namespace qgenocchi

#endif

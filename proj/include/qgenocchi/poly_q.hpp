#ifndef QGENOCCHI_POLY_Q_HPP
#define QGENOCCHI_POLY_Q_HPP

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <qgenocchi/rational.hpp>

namespace qgenocchi
{

// Dense univariate polynomial over Q in the indeterminate q. Index = degree;
// the coefficient vector never ends in a zero, so the zero polynomial is the
// empty vector with degree() == -1.
class PolyQ
{
public:
    PolyQ() = default;
    explicit PolyQ(const Rational &constant);
    explicit PolyQ(std::vector<Rational> coefficients);

    static PolyQ monomial(const Rational &c, int degree);
    static PolyQ indeterminate();

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const;
    int term_count() const;

    // Zero beyond the stored range.
    const Rational &coeff(int k) const;
    const Rational &leading() const;
    std::span<const Rational> coefficients() const { return coeffs_; }

    PolyQ operator-() const;
    PolyQ &operator+=(const PolyQ &other);
    PolyQ &operator-=(const PolyQ &other);
    PolyQ &operator*=(const Rational &c);

    friend PolyQ operator+(PolyQ a, const PolyQ &b) { return a += b; }
    friend PolyQ operator-(PolyQ a, const PolyQ &b) { return a -= b; }
    friend PolyQ operator*(const PolyQ &a, const PolyQ &b);
    friend PolyQ operator*(PolyQ a, const Rational &c) { return a *= c; }
    friend bool operator==(const PolyQ &a, const PolyQ &b) { return a.coeffs_ == b.coeffs_; }

    // Quotient and remainder; divisor must be nonzero.
    friend std::pair<PolyQ, PolyQ> divmod(const PolyQ &a, const PolyQ &b);
    // Exact division; throws std::logic_error if b does not divide a.
    friend PolyQ exact_div(const PolyQ &a, const PolyQ &b);

    PolyQ monic() const;
    PolyQ derivative() const;
    // q -> q^d.
    PolyQ compose_power(int d) const;
    Rational eval(const Rational &q0) const;

    // Descending degree, explicit signs: "q^2 + 2*q + 1", "-4*q", "1/2*q - 3".
    std::string to_string(std::string_view var = "q") const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

// Monic gcd (zero iff both arguments are zero).
PolyQ gcd(const PolyQ &a, const PolyQ &b);

PolyQ qbracket(int n);

} // namespace qgenocchi

#endif

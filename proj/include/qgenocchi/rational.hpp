#ifndef QGENOCCHI_RATIONAL_HPP
#define QGENOCCHI_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qgenocchi
{

// Exact rational scalar. mpq_class keeps gcd(num, den) = 1 and den > 0 after
// every arithmetic operation; values built from a raw fraction go through
// make_rational so they are canonical too.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

bool is_zero(const Rational &r);

// Exponent may be negative for nonzero base; pow(0, 0) = 1.
Rational pow(const Rational &base, long exponent);

// C(n, k); zero outside 0 <= k <= n.
Integer binomial(long n, long k);

Integer factorial(long n);

// Accepts "a", "-a", "a/b". Throws std::invalid_argument otherwise or when b = 0.
Rational parse_rational(std::string_view text);

// Like parse_rational, but also accepts a finite decimal ("0.75", "-1.5e-3"),
// converted exactly. Only used on numeric-path flags.
Rational parse_rational_or_decimal(std::string_view text);

// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational &r);

} // namespace qgenocchi

#endif

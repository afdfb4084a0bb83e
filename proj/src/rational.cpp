#include <qgenocchi/rational.hpp>

#include <cctype>
#include <stdexcept>
#include <string>

#include <qgenocchi/errors.hpp>

namespace qgenocchi
{

Rational make_rational(long num, long den)
{
    if (den == 0) {
        throw division_by_zero("make_rational: zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

bool is_zero(const Rational &r)
{
    return sgn(r) == 0;
}

Rational pow(const Rational &base, long exponent)
{
    if (exponent < 0) {
        if (is_zero(base)) {
            throw division_by_zero("pow: zero to a negative power");
        }
        Rational inv = 1 / base;
        return pow(inv, -exponent);
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

Integer binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(long n)
{
    if (n < 0) {
        throw domain_error("factorial: negative argument");
    }
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

namespace
{

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

Integer parse_integer(std::string_view s)
{
    if (!is_integer_literal(s)) {
        throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    }
    if (s.front() == '+') {
        s.remove_prefix(1);
    }
    return Integer(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    Integer num = parse_integer(text.substr(0, slash));
    auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    Integer den = parse_integer(den_text);
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational_or_decimal(std::string_view text)
{
    if (text.find('/') != std::string_view::npos || is_integer_literal(text)) {
        return parse_rational(text);
    }
    std::string_view mantissa = text;
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = text.substr(0, e);
        exponent = std::stol(std::string(parse_integer(text.substr(e + 1)).get_str()));
    }
    auto dot = mantissa.find('.');
    std::string digits(mantissa);
    if (dot != std::string_view::npos) {
        digits.erase(dot, 1);
        exponent -= static_cast<long>(mantissa.size() - dot - 1);
    }
    if (digits.empty() || digits == "-" || digits == "+") {
        throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    }
    Rational r(parse_integer(digits));
    return r * pow(Rational(10), exponent);
}

std::string to_string(const Rational &r)
{
    return r.get_str();
}

} // namespace qgenocchi

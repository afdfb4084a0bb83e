#include <qgenocchi/poly_q.hpp>

#include <algorithm>
#include <stdexcept>

#include <qgenocchi/errors.hpp>

namespace qgenocchi
{

namespace
{

const Rational &zero_rational()
{
    static const Rational z(0);
    return z;
}

} // namespace

PolyQ::PolyQ(const Rational &constant)
{
    if (!qgenocchi::is_zero(constant)) {
        coeffs_.push_back(constant);
    }
}

PolyQ::PolyQ(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients))
{
    trim();
}

PolyQ PolyQ::monomial(const Rational &c, int degree)
{
    PolyQ p;
    if (!qgenocchi::is_zero(c)) {
        p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
        p.coeffs_.back() = c;
    }
    return p;
}

PolyQ PolyQ::indeterminate()
{
    return monomial(Rational(1), 1);
}

bool PolyQ::is_one() const
{
    return coeffs_.size() == 1 && coeffs_[0] == 1;
}

int PolyQ::term_count() const
{
    return static_cast<int>(std::count_if(coeffs_.begin(), coeffs_.end(),
                                          [](const Rational &c) { return !qgenocchi::is_zero(c); }));
}

const Rational &PolyQ::coeff(int k) const
{
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) {
        return zero_rational();
    }
    return coeffs_[static_cast<std::size_t>(k)];
}

const Rational &PolyQ::leading() const
{
    return is_zero() ? zero_rational() : coeffs_.back();
}

void PolyQ::trim()
{
    while (!coeffs_.empty() && qgenocchi::is_zero(coeffs_.back())) {
        coeffs_.pop_back();
    }
}

PolyQ PolyQ::operator-() const
{
    PolyQ r = *this;
    for (auto &c : r.coeffs_) {
        c = -c;
    }
    return r;
}

PolyQ &PolyQ::operator+=(const PolyQ &other)
{
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    trim();
    return *this;
}

PolyQ &PolyQ::operator-=(const PolyQ &other)
{
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    trim();
    return *this;
}

PolyQ &PolyQ::operator*=(const Rational &c)
{
    if (qgenocchi::is_zero(c)) {
        coeffs_.clear();
        return *this;
    }
    for (auto &a : coeffs_) {
        a *= c;
    }
    return *this;
}

PolyQ operator*(const PolyQ &a, const PolyQ &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (qgenocchi::is_zero(a.coeffs_[i])) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return PolyQ(std::move(out));
}

std::pair<PolyQ, PolyQ> divmod(const PolyQ &a, const PolyQ &b)
{
    if (b.is_zero()) {
        throw division_by_zero("polynomial division by zero");
    }
    if (a.degree() < b.degree()) {
        return {PolyQ(), a};
    }
    std::vector<Rational> rem = a.coeffs_;
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
    const Rational inv_lead = 1 / b.leading();
    const int db = b.degree();
    for (int k = a.degree(); k >= db; --k) {
        const Rational &top = rem[static_cast<std::size_t>(k)];
        if (qgenocchi::is_zero(top)) {
            continue;
        }
        Rational f = top * inv_lead;
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs_[static_cast<std::size_t>(j)];
        }
        quot[static_cast<std::size_t>(k - db)] = std::move(f);
    }
    rem.resize(static_cast<std::size_t>(db));
    return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

PolyQ exact_div(const PolyQ &a, const PolyQ &b)
{
    auto [quot, rem] = divmod(a, b);
    if (!rem.is_zero()) {
        throw std::logic_error("exact_div: nonzero remainder");
    }
    return quot;
}

PolyQ PolyQ::monic() const
{
    if (is_zero() || leading() == 1) {
        return *this;
    }
    return *this * Rational(1 / leading());
}

PolyQ PolyQ::derivative() const
{
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        out[k - 1] = coeffs_[k] * static_cast<long>(k);
    }
    return PolyQ(std::move(out));
}

PolyQ PolyQ::compose_power(int d) const
{
    if (d < 1) {
        throw domain_error("compose_power: exponent must be >= 1");
    }
    if (d == 1 || coeffs_.size() <= 1) {
        return *this;
    }
    std::vector<Rational> out((coeffs_.size() - 1) * static_cast<std::size_t>(d) + 1, Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        out[k * static_cast<std::size_t>(d)] = coeffs_[k];
    }
    return PolyQ(std::move(out));
}

Rational PolyQ::eval(const Rational &q0) const
{
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * q0 + *it;
    }
    return acc;
}

std::string PolyQ::to_string(std::string_view var) const
{
    if (is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational &c = coeffs_[static_cast<std::size_t>(k)];
        if (qgenocchi::is_zero(c)) {
            continue;
        }
        const bool negative = sgn(c) < 0;
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        Rational mag = abs(c);
        std::string mono;
        if (k == 1) {
            mono = std::string(var);
        } else if (k > 1) {
            mono = std::string(var) + "^" + std::to_string(k);
        }
        if (k == 0) {
            out += qgenocchi::to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += qgenocchi::to_string(mag) + "*" + mono;
        }
    }
    return out;
}

PolyQ gcd(const PolyQ &a, const PolyQ &b)
{
    PolyQ x = a.monic();
    PolyQ y = b.monic();
    while (!y.is_zero()) {
        PolyQ r = divmod(x, y).second.monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

PolyQ qbracket(int n)
{
    if (n < 0) {
        throw domain_error("qbracket: n must be nonnegative");
    }
    return PolyQ(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
}

} // namespace qgenocchi

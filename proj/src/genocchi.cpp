#include <qgenocchi/genocchi.hpp>

#include <memory>
#include <mutex>
#include <string>

#include <qgenocchi/errors.hpp>

namespace qgenocchi
{

namespace
{

void require_index(int n)
{
    if (n < 0) {
        throw domain_error("Genocchi index must be nonnegative, got " + std::to_string(n));
    }
}

// p * (1 + q)
PolyQ times_one_plus_q(const PolyQ &p)
{
    return p + p * PolyQ::indeterminate();
}

// Synthetic division by (1 + q); requires p(-1) = 0.
PolyQ divide_one_plus_q(const PolyQ &p)
{
    std::vector<Rational> out(static_cast<std::size_t>(p.degree()), Rational(0));
    Rational carry(0);
    for (int k = p.degree(); k >= 1; --k) {
        carry = p.coeff(k) - carry;
        out[static_cast<std::size_t>(k - 1)] = carry;
    }
    return PolyQ(std::move(out));
}

} // namespace

GenocchiTable::GenocchiTable(int max_n)
{
    require_index(max_n);
    // Work with H_n = (1+q)^n G_n, which is a polynomial:
    //   H_1 = 2,  H_n = -q * sum_{k<n} C(n,k) H_k (1+q)^(n-1-k)  (n >= 2).
    // The inner sum is evaluated Horner-style in (1+q).
    std::vector<PolyQ> h(static_cast<std::size_t>(max_n) + 1);
    if (max_n >= 1) {
        h[1] = PolyQ(Rational(2));
    }
    for (int n = 2; n <= max_n; ++n) {
        PolyQ acc;
        for (int k = 0; k < n; ++k) {
            acc = times_one_plus_q(acc);
            acc += h[static_cast<std::size_t>(k)] * Rational(binomial(n, k));
        }
        h[static_cast<std::size_t>(n)] = -(acc * PolyQ::indeterminate());
    }

    numbers_.reserve(h.size());
    for (int n = 0; n <= max_n; ++n) {
        PolyQ num = h[static_cast<std::size_t>(n)];
        int den_power = n;
        while (den_power > 0 && !num.is_zero() && is_zero(num.eval(Rational(-1)))) {
            num = divide_one_plus_q(num);
            --den_power;
        }
        PolyQ den(Rational(1));
        for (int k = 0; k < den_power; ++k) {
            den = times_one_plus_q(den);
        }
        numbers_.push_back(RatFuncQ::from_canonical(std::move(num), std::move(den)));
    }

    polys_.reserve(numbers_.size());
    for (int n = 0; n <= max_n; ++n) {
        std::vector<RatFuncQ> coeffs;
        for (int l = 0; l <= n; ++l) {
            coeffs.push_back(numbers_[static_cast<std::size_t>(n - l)] * RatFuncQ(Rational(binomial(n, l))));
        }
        polys_.push_back(PolyXY::from_x_coefficients(coeffs));
    }
}

const RatFuncQ &GenocchiTable::number(int n) const
{
    require_index(n);
    if (n > max_n()) {
        throw domain_error("Genocchi table built only up to " + std::to_string(max_n()));
    }
    return numbers_[static_cast<std::size_t>(n)];
}

const PolyXY &GenocchiTable::poly(int n) const
{
    require_index(n);
    if (n > max_n()) {
        throw domain_error("Genocchi table built only up to " + std::to_string(max_n()));
    }
    return polys_[static_cast<std::size_t>(n)];
}

namespace
{

std::shared_ptr<const GenocchiTable> shared_table(int at_least)
{
    static std::mutex mutex;
    static std::shared_ptr<const GenocchiTable> table;
    std::lock_guard<std::mutex> lock(mutex);
    if (!table || table->max_n() < at_least) {
        // Grow geometrically so repeated small requests do not rebuild.
        int target = std::max(at_least, table ? 2 * table->max_n() : 24);
        table = std::make_shared<const GenocchiTable>(target);
    }
    return table;
}

} // namespace

RatFuncQ genocchi_number(int n)
{
    require_index(n);
    return shared_table(n)->number(n);
}

PolyXY genocchi_poly(int n)
{
    require_index(n);
    return shared_table(n)->poly(n);
}

std::vector<Rational> genocchi_numbers_at(const Rational &q0, int n_max)
{
    require_index(n_max);
    if (q0 == -1) {
        throw pole_error("q-Genocchi numbers have a pole at q = -1");
    }
    std::vector<Rational> g(static_cast<std::size_t>(n_max) + 1, Rational(0));
    const Rational factor = -q0 / (1 + q0);
    if (n_max >= 1) {
        g[1] = 2 / (1 + q0);
    }
    for (int n = 2; n <= n_max; ++n) {
        Rational acc(0);
        for (int k = 1; k < n; ++k) {
            acc += binomial(n, k) * g[static_cast<std::size_t>(k)];
        }
        g[static_cast<std::size_t>(n)] = factor * acc;
    }
    return g;
}

Rational genocchi_poly_value_at(int n, const Rational &x0, const Rational &q0)
{
    auto g = genocchi_numbers_at(q0, n);
    Rational acc(0);
    Rational xp(1); // 0^0 = 1
    for (int l = 0; l <= n; ++l) {
        acc += binomial(n, l) * xp * g[static_cast<std::size_t>(n - l)];
        xp *= x0;
    }
    return acc;
}

IdentityPair addition_expand(int n)
{
    require_index(n);
    const PolyXY x_plus_y = PolyXY::x() + PolyXY::y();
    PolyXY lhs = genocchi_poly(n).substitute_x(x_plus_y);
    PolyXY rhs;
    for (int k = 0; k <= n; ++k) {
        rhs += genocchi_poly(k) * PolyXY::monomial(RatFuncQ(Rational(binomial(n, k))), 0, n - k);
    }
    return {std::move(lhs), std::move(rhs)};
}

IdentityPair reflection_pair(int n)
{
    require_index(n);
    const PolyXY g = genocchi_poly(n + 1);
    PolyXY lhs = g.substitute_x(PolyXY::x() + PolyXY(RatFuncQ(1))) * RatFuncQ::indeterminate() + g;
    PolyXY rhs = PolyXY::monomial(RatFuncQ(Rational(2 * (n + 1))), n, 0);
    return {std::move(lhs), std::move(rhs)};
}

} // namespace qgenocchi

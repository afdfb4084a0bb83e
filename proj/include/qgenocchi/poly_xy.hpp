#ifndef QGENOCCHI_POLY_XY_HPP
#define QGENOCCHI_POLY_XY_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <qgenocchi/errors.hpp>
#include <qgenocchi/ratfunc.hpp>
#include <qgenocchi/rational.hpp>

namespace qgenocchi
{

namespace detail
{

// How a coefficient prints in front of a monomial.
struct coeff_text {
    bool negative;
    std::string body; // magnitude, parenthesised when it is not a single product
    std::string bare; // rendering used when there is no monomial to multiply
    bool is_unit;     // body is "1"
};

coeff_text render_coeff(const Rational &c);
coeff_text render_coeff(const RatFuncQ &c);

} // namespace detail

// Dense polynomial in x and y over a coefficient ring C (Rational or RatFuncQ).
// Row i holds the x^i slice; column j the y^j slice. Canonical: no trailing
// all-zero row or column, and the zero polynomial has no storage.
template <typename C>
class BivariatePoly
{
public:
    using coefficient_type = C;

    BivariatePoly() = default;
    BivariatePoly(const C &constant) // NOLINT: implicit lift of scalars
    {
        if (!qgenocchi::is_zero(constant)) {
            nx_ = ny_ = 1;
            data_.push_back(constant);
        }
    }

    static BivariatePoly monomial(const C &c, int dx, int dy)
    {
        BivariatePoly p;
        if (qgenocchi::is_zero(c)) {
            return p;
        }
        p.nx_ = dx + 1;
        p.ny_ = dy + 1;
        p.data_.assign(static_cast<std::size_t>(p.nx_ * p.ny_), C(0));
        p.at(dx, dy) = c;
        return p;
    }
    static BivariatePoly x() { return monomial(C(1), 1, 0); }
    static BivariatePoly y() { return monomial(C(1), 0, 1); }

    // Univariate polynomial in x from coefficients by ascending degree.
    static BivariatePoly from_x_coefficients(const std::vector<C> &coeffs)
    {
        BivariatePoly p;
        p.nx_ = static_cast<int>(coeffs.size());
        p.ny_ = coeffs.empty() ? 0 : 1;
        p.data_ = coeffs;
        p.trim();
        return p;
    }

    bool is_zero() const { return data_.empty(); }
    // -1 for the zero polynomial.
    int degree_x() const { return nx_ - 1; }
    int degree_y() const { return ny_ - 1; }

    C coeff(int i, int j) const
    {
        if (i < 0 || j < 0 || i >= nx_ || j >= ny_) {
            return C(0);
        }
        return data_[index(i, j)];
    }

    BivariatePoly operator-() const
    {
        BivariatePoly r = *this;
        for (auto &c : r.data_) {
            c = -c;
        }
        return r;
    }

    BivariatePoly &operator+=(const BivariatePoly &b) { return accumulate(b, false); }
    BivariatePoly &operator-=(const BivariatePoly &b) { return accumulate(b, true); }

    BivariatePoly &operator*=(const C &c)
    {
        if (qgenocchi::is_zero(c)) {
            *this = BivariatePoly();
            return *this;
        }
        for (auto &a : data_) {
            if (!qgenocchi::is_zero(a)) {
                a *= c;
            }
        }
        return *this;
    }

    // Division by a nonzero scalar of the coefficient ring.
    BivariatePoly &operator/=(const C &c)
    {
        if (qgenocchi::is_zero(c)) {
            throw division_by_zero("polynomial divided by zero scalar");
        }
        const C inv = C(1) / c;
        return *this *= inv;
    }

    friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly &b) { return a += b; }
    friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly &b) { return a -= b; }
    friend BivariatePoly operator*(BivariatePoly a, const C &c) { return a *= c; }
    friend BivariatePoly operator*(const C &c, BivariatePoly a) { return a *= c; }
    friend BivariatePoly operator/(BivariatePoly a, const C &c) { return a /= c; }

    friend BivariatePoly operator*(const BivariatePoly &a, const BivariatePoly &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        BivariatePoly r;
        r.nx_ = a.nx_ + b.nx_ - 1;
        r.ny_ = a.ny_ + b.ny_ - 1;
        r.data_.assign(static_cast<std::size_t>(r.nx_ * r.ny_), C(0));
        for (int i = 0; i < a.nx_; ++i) {
            for (int j = 0; j < a.ny_; ++j) {
                const C &ca = a.data_[a.index(i, j)];
                if (qgenocchi::is_zero(ca)) {
                    continue;
                }
                for (int k = 0; k < b.nx_; ++k) {
                    for (int l = 0; l < b.ny_; ++l) {
                        const C &cb = b.data_[b.index(k, l)];
                        if (!qgenocchi::is_zero(cb)) {
                            r.at(i + k, j + l) += ca * cb;
                        }
                    }
                }
            }
        }
        r.trim();
        return r;
    }

    friend bool operator==(const BivariatePoly &a, const BivariatePoly &b)
    {
        return a.nx_ == b.nx_ && a.ny_ == b.ny_ && a.data_ == b.data_;
    }

    // x -> s, where s is any bivariate polynomial (Horner in x).
    BivariatePoly substitute_x(const BivariatePoly &s) const
    {
        BivariatePoly acc;
        for (int i = nx_ - 1; i >= 0; --i) {
            acc = acc * s;
            acc += row(i);
        }
        return acc;
    }

    // Applies f to every coefficient, producing a polynomial over another ring.
    template <typename F>
    auto map_coefficients(F &&f) const -> BivariatePoly<decltype(f(std::declval<const C &>()))>
    {
        using D = decltype(f(std::declval<const C &>()));
        BivariatePoly<D> r;
        for (int i = 0; i < nx_; ++i) {
            for (int j = 0; j < ny_; ++j) {
                const C &c = data_[index(i, j)];
                if (!qgenocchi::is_zero(c)) {
                    r += BivariatePoly<D>::monomial(f(c), i, j);
                }
            }
        }
        return r;
    }

    // Exact evaluation with every coefficient already a scalar of type C.
    C eval(const C &x0, const C &y0) const
    {
        C acc(0);
        for (int i = nx_ - 1; i >= 0; --i) {
            C inner(0);
            for (int j = ny_ - 1; j >= 0; --j) {
                inner = inner * y0 + data_[index(i, j)];
            }
            acc = acc * x0 + inner;
        }
        return acc;
    }

    // Terms by descending total degree, then descending x-degree.
    std::string to_string() const
    {
        if (is_zero()) {
            return "0";
        }
        std::vector<std::pair<int, int>> order;
        for (int i = 0; i < nx_; ++i) {
            for (int j = 0; j < ny_; ++j) {
                if (!qgenocchi::is_zero(data_[index(i, j)])) {
                    order.emplace_back(i, j);
                }
            }
        }
        std::sort(order.begin(), order.end(), [](auto a, auto b) {
            if (a.first + a.second != b.first + b.second) {
                return a.first + a.second > b.first + b.second;
            }
            return a.first > b.first;
        });
        std::string out;
        bool first = true;
        for (auto [i, j] : order) {
            auto ct = detail::render_coeff(data_[index(i, j)]);
            std::string mono;
            auto append = [&mono](const char *var, int e) {
                if (e == 0) {
                    return;
                }
                if (!mono.empty()) {
                    mono += "*";
                }
                mono += var;
                if (e > 1) {
                    mono += "^" + std::to_string(e);
                }
            };
            append("x", i);
            append("y", j);
            if (first) {
                out += ct.negative ? "-" : "";
            } else {
                out += ct.negative ? " - " : " + ";
            }
            first = false;
            if (mono.empty()) {
                out += ct.bare;
            } else if (ct.is_unit) {
                out += mono;
            } else {
                out += ct.body + "*" + mono;
            }
        }
        return out;
    }

private:
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i * ny_ + j); }
    C &at(int i, int j) { return data_[index(i, j)]; }

    BivariatePoly row(int i) const
    {
        BivariatePoly r;
        r.nx_ = 1;
        r.ny_ = ny_;
        r.data_.assign(data_.begin() + static_cast<std::ptrdiff_t>(index(i, 0)),
                       data_.begin() + static_cast<std::ptrdiff_t>(index(i, 0) + static_cast<std::size_t>(ny_)));
        r.trim();
        return r;
    }

    void reshape(int nx, int ny)
    {
        if (nx == nx_ && ny == ny_) {
            return;
        }
        std::vector<C> fresh(static_cast<std::size_t>(nx * ny), C(0));
        for (int i = 0; i < std::min(nx, nx_); ++i) {
            for (int j = 0; j < std::min(ny, ny_); ++j) {
                fresh[static_cast<std::size_t>(i * ny + j)] = std::move(data_[index(i, j)]);
            }
        }
        data_ = std::move(fresh);
        nx_ = nx;
        ny_ = ny;
    }

    BivariatePoly &accumulate(const BivariatePoly &b, bool subtract)
    {
        if (b.is_zero()) {
            return *this;
        }
        reshape(std::max(nx_, b.nx_), std::max(ny_, b.ny_));
        for (int i = 0; i < b.nx_; ++i) {
            for (int j = 0; j < b.ny_; ++j) {
                const C &cb = b.data_[b.index(i, j)];
                if (qgenocchi::is_zero(cb)) {
                    continue;
                }
                if (subtract) {
                    at(i, j) -= cb;
                } else {
                    at(i, j) += cb;
                }
            }
        }
        trim();
        return *this;
    }

    void trim()
    {
        int nx = nx_;
        int ny = ny_;
        auto row_zero = [&](int i) {
            for (int j = 0; j < ny; ++j) {
                if (!qgenocchi::is_zero(data_[index(i, j)])) {
                    return false;
                }
            }
            return true;
        };
        auto col_zero = [&](int j) {
            for (int i = 0; i < nx; ++i) {
                if (!qgenocchi::is_zero(data_[index(i, j)])) {
                    return false;
                }
            }
            return true;
        };
        while (nx > 0 && row_zero(nx - 1)) {
            --nx;
        }
        while (ny > 0 && nx > 0 && col_zero(ny - 1)) {
            --ny;
        }
        if (nx == 0 || ny == 0) {
            data_.clear();
            nx_ = ny_ = 0;
            return;
        }
        reshape(nx, ny);
    }

    int nx_ = 0;
    int ny_ = 0;
    std::vector<C> data_;
};

// Q(q)[x, y]: home of G_{n,q}(x) and all identity residuals.
using PolyXY = BivariatePoly<RatFuncQ>;
// Q[x, y]: the result of specialising q.
using RationalPolyXY = BivariatePoly<Rational>;

template <typename C>
bool is_zero(const BivariatePoly<C> &p)
{
    return p.is_zero();
}

template <typename C>
BivariatePoly<C> pow(const BivariatePoly<C> &p, long exponent)
{
    if (exponent < 0) {
        throw domain_error("negative power of a polynomial");
    }
    BivariatePoly<C> result(C(1));
    for (long k = 0; k < exponent; ++k) {
        result = result * p;
    }
    return result;
}

// Throws pole_error if any coefficient has a pole at q0.
RationalPolyXY specialize_q(const PolyXY &p, const Rational &q0);

// Coefficients are exact scalars; lifts Q[x,y] into Q(q)[x,y].
PolyXY lift(const RationalPolyXY &p);

// q -> q^d on every coefficient.
PolyXY compose_q_power(const PolyXY &p, int d);

// a*x + b*y + c as a polynomial over the ring C.
template <typename C>
BivariatePoly<C> affine(const Rational &a, const Rational &b, const Rational &c)
{
    return BivariatePoly<C>::monomial(C(a), 1, 0) + BivariatePoly<C>::monomial(C(b), 0, 1) + BivariatePoly<C>(C(c));
}

} // namespace qgenocchi

#endif

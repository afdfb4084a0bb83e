#ifndef QGENOCCHI_TRUNC_SERIES_HPP
#define QGENOCCHI_TRUNC_SERIES_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include <qgenocchi/errors.hpp>
#include <qgenocchi/rational.hpp>

namespace qgenocchi
{

// Power series in t known modulo t^(order+1), over a coefficient ring R.
// Binary operations require equal orders and never look past `order`.
template <typename R>
class TruncSeries
{
public:
    explicit TruncSeries(int order) : coeffs_(checked_size(order), R(0)) {}
    TruncSeries(int order, std::vector<R> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.size() != checked_size(order)) {
            throw domain_error("TruncSeries: coefficient count must be order + 1");
        }
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const R &operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
    R &operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }
    const std::vector<R> &coefficients() const { return coeffs_; }

    friend TruncSeries operator+(const TruncSeries &a, const TruncSeries &b)
    {
        require_same_order(a, b);
        TruncSeries r = a;
        for (int k = 0; k <= a.order(); ++k) {
            r[k] += b[k];
        }
        return r;
    }

    friend TruncSeries operator-(const TruncSeries &a, const TruncSeries &b)
    {
        require_same_order(a, b);
        TruncSeries r = a;
        for (int k = 0; k <= a.order(); ++k) {
            r[k] -= b[k];
        }
        return r;
    }

    // Cauchy product, truncated.
    friend TruncSeries operator*(const TruncSeries &a, const TruncSeries &b)
    {
        require_same_order(a, b);
        const int n = a.order();
        TruncSeries r(n);
        for (int i = 0; i <= n; ++i) {
            if (is_zero(a[i])) {
                continue;
            }
            for (int j = 0; i + j <= n; ++j) {
                if (!is_zero(b[j])) {
                    r[i + j] += a[i] * b[j];
                }
            }
        }
        return r;
    }

    // b0 = 1/a0, bn = -(1/a0) * sum_{k=1..n} a_k b_{n-k}.
    TruncSeries reciprocal() const
    {
        if (is_zero(coeffs_.front())) {
            throw division_by_zero("series reciprocal: constant term is not invertible");
        }
        const int n = order();
        const R inv0 = R(1) / coeffs_.front();
        TruncSeries b(n);
        b[0] = inv0;
        for (int m = 1; m <= n; ++m) {
            R acc(0);
            for (int k = 1; k <= m; ++k) {
                if (!is_zero((*this)[k])) {
                    acc += (*this)[k] * b[m - k];
                }
            }
            b[m] = -(acc * inv0);
        }
        return b;
    }

    // Multiplication by t^shift, dropping what falls past the order.
    TruncSeries shifted(int shift) const
    {
        TruncSeries r(order());
        for (int k = 0; k + shift <= order(); ++k) {
            r[k + shift] = (*this)[k];
        }
        return r;
    }

    template <typename F>
    auto map(F &&f) const -> TruncSeries<decltype(f(std::declval<const R &>()))>
    {
        using D = decltype(f(std::declval<const R &>()));
        std::vector<D> out;
        out.reserve(coeffs_.size());
        for (const auto &c : coeffs_) {
            out.push_back(f(c));
        }
        return TruncSeries<D>(order(), std::move(out));
    }

private:
    static std::size_t checked_size(int order)
    {
        if (order < 0) {
            throw domain_error("TruncSeries: negative order");
        }
        return static_cast<std::size_t>(order) + 1;
    }

    static void require_same_order(const TruncSeries &a, const TruncSeries &b)
    {
        if (a.order() != b.order()) {
            throw domain_error("TruncSeries: order mismatch");
        }
    }

    std::vector<R> coeffs_;
};

} // namespace qgenocchi

#endif

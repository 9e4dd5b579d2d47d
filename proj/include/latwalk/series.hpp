#ifndef LATWALK_SERIES_HPP
#define LATWALK_SERIES_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "latwalk/rational.hpp"

namespace latwalk {

/// Truncated power series with exact coefficients, in a variable t with
/// t^ram = z (ram = 1 means the plain variable z).
///
/// All arithmetic truncates to the minimum order of the operands and
/// never silently extends a result beyond its known order.
template <class C>
struct Series {
    int ram = 1;
    int order = 0;              // coefficients 0..order are known
    std::vector<C> c;           // size order + 1

    Series() : c(1, C(0)) {}
    Series(int ram_, int order_) : ram(ram_), order(order_), c(order_ + 1, C(0)) {
        if (ram_ < 1 || order_ < 0) throw std::invalid_argument("bad series shape");
    }

    static Series constant(const C& v, int ram, int order) {
        Series s(ram, order);
        s.c[0] = v;
        return s;
    }
    /// The variable t itself.
    static Series variable(int ram, int order) {
        Series s(ram, order);
        if (order >= 1) s.c[1] = C(1);
        return s;
    }

    const C& coeff(int i) const {
        if (i < 0 || i > order) throw std::out_of_range("series coefficient beyond order");
        return c[i];
    }

    /// Least index with nonzero coefficient; order + 1 if all known
    /// coefficients vanish.
    int valuation() const {
        for (int i = 0; i <= order; ++i)
            if (!(c[i] == C(0))) return i;
        return order + 1;
    }

    Series truncated(int new_order) const {
        Series r(ram, std::min(new_order, order));
        for (int i = 0; i <= r.order; ++i) r.c[i] = c[i];
        return r;
    }

    bool is_zero() const { return valuation() > order; }
};

namespace detail {
template <class C>
void check_compat(const Series<C>& a, const Series<C>& b) {
    if (a.ram != b.ram) throw std::invalid_argument("series ramification mismatch");
}
}  // namespace detail

template <class C>
Series<C> operator+(const Series<C>& a, const Series<C>& b) {
    detail::check_compat(a, b);
    Series<C> r(a.ram, std::min(a.order, b.order));
    for (int i = 0; i <= r.order; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

template <class C>
Series<C> operator-(const Series<C>& a, const Series<C>& b) {
    detail::check_compat(a, b);
    Series<C> r(a.ram, std::min(a.order, b.order));
    for (int i = 0; i <= r.order; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

template <class C>
Series<C> operator-(const Series<C>& a) {
    Series<C> r(a.ram, a.order);
    for (int i = 0; i <= r.order; ++i) r.c[i] = -a.c[i];
    return r;
}

template <class C>
Series<C> operator*(const Series<C>& a, const Series<C>& b) {
    detail::check_compat(a, b);
    Series<C> r(a.ram, std::min(a.order, b.order));
    for (int i = 0; i <= r.order; ++i) {
        if (a.c[i] == C(0)) continue;
        for (int j = 0; i + j <= r.order; ++j) {
            if (b.c[j] == C(0)) continue;
            r.c[i + j] += a.c[i] * b.c[j];
        }
    }
    return r;
}

template <class C>
Series<C> operator*(const C& s, const Series<C>& a) {
    Series<C> r(a.ram, a.order);
    for (int i = 0; i <= r.order; ++i) r.c[i] = s * a.c[i];
    return r;
}

/// Multiply by t^k (k >= 0): coefficients shift up, order is preserved,
/// the top k coefficients fall off the truncation.
template <class C>
Series<C> shift_up(const Series<C>& a, int k) {
    Series<C> r(a.ram, a.order);
    for (int i = a.order; i >= k; --i) r.c[i] = a.c[i - k];
    return r;
}

/// Divide by t^k; requires valuation >= k. The order drops by k.
template <class C>
Series<C> shift_down(const Series<C>& a, int k) {
    if (a.order < k) throw std::invalid_argument("shift_down past order");
    for (int i = 0; i < k; ++i)
        if (!(a.c[i] == C(0))) throw std::domain_error("shift_down of nonzero low coefficient");
    Series<C> r(a.ram, a.order - k);
    for (int i = 0; i <= r.order; ++i) r.c[i] = a.c[i + k];
    return r;
}

/// d/dt.
template <class C>
Series<C> derivative(const Series<C>& a) {
    Series<C> r(a.ram, std::max(a.order - 1, 0));
    for (int i = 1; i <= a.order; ++i) r.c[i - 1] = C(i) * a.c[i];
    return r;
}

/// Multiplicative inverse; requires an invertible constant coefficient.
/// For general coefficient rings the constant coefficient must be 1 or -1;
/// the Rational specialization below handles any nonzero constant.
template <class C>
Series<C> inverse(const Series<C>& a) {
    if (!(a.c[0] == C(1) || a.c[0] == C(-1)))
        throw std::domain_error("series inverse needs unit constant coefficient");
    Series<C> r(a.ram, a.order);
    const bool neg = a.c[0] == C(-1);
    r.c[0] = a.c[0];
    for (int n = 1; n <= a.order; ++n) {
        C acc(0);
        for (int i = 1; i <= n; ++i) acc += a.c[i] * r.c[n - i];
        r.c[n] = neg ? acc : -acc;
    }
    return r;
}

inline Series<Rational> inverse(const Series<Rational>& a) {
    if (a.c[0] == 0) throw std::domain_error("series inverse of zero constant coefficient");
    Series<Rational> r(a.ram, a.order);
    r.c[0] = 1 / a.c[0];
    for (int n = 1; n <= a.order; ++n) {
        Rational acc(0);
        for (int i = 1; i <= n; ++i) acc += a.c[i] * r.c[n - i];
        r.c[n] = -acc / a.c[0];
    }
    return r;
}

/// Exact division a / b. The divisor's valuation must not exceed the
/// dividend's, and the low coefficients of a must be divisible exactly;
/// the result's order is min(order) - val(b).
inline Series<Rational> divide(const Series<Rational>& a, const Series<Rational>& b) {
    detail::check_compat(a, b);
    const int v = b.valuation();
    if (v > b.order) throw std::domain_error("division by zero series");
    for (int i = 0; i < std::min(v, a.order + 1); ++i)
        if (a.c[i] != 0) throw std::domain_error("division would produce negative valuation");
    Series<Rational> bs = shift_down(b, v);
    Series<Rational> as(a.ram, std::min(a.order, b.order) - v);
    if (as.order < 0) throw std::invalid_argument("division loses all precision");
    for (int i = 0; i <= as.order; ++i) as.c[i] = a.c[i + v];
    return as * inverse(bs.truncated(as.order));
}

/// Composition a(g) for g with valuation >= 1, by Horner evaluation.
template <class C>
Series<C> compose(const Series<C>& a, const Series<C>& g) {
    if (g.order >= 0 && !(g.c[0] == C(0)))
        throw std::domain_error("composition needs inner valuation >= 1");
    Series<C> r = Series<C>::constant(a.c[a.order], g.ram, g.order);
    for (int i = a.order - 1; i >= 0; --i) {
        r = r * g;
        r.c[0] += a.c[i];
    }
    return r;
}

template <class C>
Series<C> pow_int(const Series<C>& a, int e) {
    Series<C> r = Series<C>::constant(C(1), a.ram, a.order);
    for (int i = 0; i < e; ++i) r = r * a;
    return r;
}

/// Coefficients of Q(u)^alpha to order K, where Q is a polynomial (or
/// series) with Q(0) = 1 and alpha is any rational exponent. Uses the
/// first-order recurrence from f'Q = alpha f Q'.
std::vector<Rational> power_series_pow(const std::vector<Rational>& q,
                                       const Rational& alpha, int K);

using RationalSeries = Series<Rational>;

}  // namespace latwalk

#endif

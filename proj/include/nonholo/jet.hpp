/**
 * @file jet.hpp
 * @brief Forward-mode automatic differentiation scalars, nestable to second order.
 */
#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace nonholo {

// Widest partial vector carried by any chart in this library (phase dim <= 10).
inline constexpr int kMaxPartials = 16;

// Truncated Taylor scalar: value plus first partials in up to kMaxPartials
// directions.  n == 0 marks a broadcast constant; mixed-width arithmetic takes
// the wider operand's width, reading absent slots as zero.
template <typename S>
struct jet {
    S a{};
    std::array<S, kMaxPartials> d{};
    int n = 0;

    jet() = default;
    jet(double v) : a(v) {}
    template <typename T = S, typename = std::enable_if_t<!std::is_same_v<T, double>>>
    jet(const S& v) : a(v) {}
};

using dual = jet<double>;
using dual2 = jet<dual>;

inline double value(double x) { return x; }
template <typename S>
double value(const jet<S>& x) { return value(x.a); }

template <typename S>
S partial_or_zero(const jet<S>& x, int i) {
    return i < x.n ? x.d[i] : S(0.0);
}

template <typename S>
jet<S> operator+(const jet<S>& x, const jet<S>& y) {
    jet<S> r;
    r.a = x.a + y.a;
    r.n = x.n > y.n ? x.n : y.n;
    for (int i = 0; i < r.n; ++i) r.d[i] = partial_or_zero(x, i) + partial_or_zero(y, i);
    return r;
}

template <typename S>
jet<S> operator-(const jet<S>& x, const jet<S>& y) {
    jet<S> r;
    r.a = x.a - y.a;
    r.n = x.n > y.n ? x.n : y.n;
    for (int i = 0; i < r.n; ++i) r.d[i] = partial_or_zero(x, i) - partial_or_zero(y, i);
    return r;
}

template <typename S>
jet<S> operator-(const jet<S>& x) {
    jet<S> r;
    r.a = -x.a;
    r.n = x.n;
    for (int i = 0; i < r.n; ++i) r.d[i] = -x.d[i];
    return r;
}

template <typename S>
jet<S> operator*(const jet<S>& x, const jet<S>& y) {
    jet<S> r;
    r.a = x.a * y.a;
    r.n = x.n > y.n ? x.n : y.n;
    for (int i = 0; i < r.n; ++i)
        r.d[i] = partial_or_zero(x, i) * y.a + x.a * partial_or_zero(y, i);
    return r;
}

template <typename S>
jet<S> operator/(const jet<S>& x, const jet<S>& y) {
    jet<S> r;
    r.a = x.a / y.a;
    S inv2 = S(1.0) / (y.a * y.a);
    r.n = x.n > y.n ? x.n : y.n;
    for (int i = 0; i < r.n; ++i)
        r.d[i] = (partial_or_zero(x, i) * y.a - x.a * partial_or_zero(y, i)) * inv2;
    return r;
}

template <typename S> jet<S> operator+(const jet<S>& x, double c) { return x + jet<S>(c); }
template <typename S> jet<S> operator+(double c, const jet<S>& x) { return jet<S>(c) + x; }
template <typename S> jet<S> operator-(const jet<S>& x, double c) { return x - jet<S>(c); }
template <typename S> jet<S> operator-(double c, const jet<S>& x) { return jet<S>(c) - x; }
template <typename S> jet<S> operator*(const jet<S>& x, double c) { return x * jet<S>(c); }
template <typename S> jet<S> operator*(double c, const jet<S>& x) { return jet<S>(c) * x; }
template <typename S> jet<S> operator/(const jet<S>& x, double c) { return x / jet<S>(c); }
template <typename S> jet<S> operator/(double c, const jet<S>& x) { return jet<S>(c) / x; }

template <typename S> jet<S>& operator+=(jet<S>& x, const jet<S>& y) { x = x + y; return x; }
template <typename S> jet<S>& operator-=(jet<S>& x, const jet<S>& y) { x = x - y; return x; }
template <typename S> jet<S>& operator*=(jet<S>& x, const jet<S>& y) { x = x * y; return x; }
template <typename S> jet<S>& operator/=(jet<S>& x, const jet<S>& y) { x = x / y; return x; }

// double overloads so unqualified math calls resolve uniformly inside the library
inline double sin(double x) { return std::sin(x); }
inline double cos(double x) { return std::cos(x); }
inline double tan(double x) { return std::tan(x); }
inline double sqrt(double x) { return std::sqrt(x); }
inline double exp(double x) { return std::exp(x); }
inline double log(double x) { return std::log(x); }
inline double pow(double x, double e) { return std::pow(x, e); }

template <typename S>
jet<S> apply_rule(const jet<S>& x, const S& fa, const S& dfa) {
    jet<S> r;
    r.a = fa;
    r.n = x.n;
    for (int i = 0; i < r.n; ++i) r.d[i] = dfa * x.d[i];
    return r;
}

template <typename S> jet<S> sin(const jet<S>& x) { return apply_rule(x, sin(x.a), cos(x.a)); }
template <typename S> jet<S> cos(const jet<S>& x) { return apply_rule(x, cos(x.a), -sin(x.a)); }
template <typename S> jet<S> tan(const jet<S>& x) {
    S t = tan(x.a);
    return apply_rule(x, t, S(1.0) + t * t);
}
template <typename S> jet<S> sqrt(const jet<S>& x) {
    S s = sqrt(x.a);
    return apply_rule(x, s, S(0.5) / s);
}
template <typename S> jet<S> exp(const jet<S>& x) {
    S e = exp(x.a);
    return apply_rule(x, e, e);
}
template <typename S> jet<S> log(const jet<S>& x) { return apply_rule(x, log(x.a), S(1.0) / x.a); }
template <typename S> jet<S> pow(const jet<S>& x, double e) {
    return apply_rule(x, pow(x.a, e), S(e) * pow(x.a, e - 1.0));
}

// Seeds a coordinate point for evaluation at plain, first-, or second-order level.
template <typename S>
std::vector<S> seed_point(const std::vector<double>& q) {
    int n = static_cast<int>(q.size());
    if (n > kMaxPartials) throw std::length_error("seed_point: chart wider than kMaxPartials");
    std::vector<S> out(q.size());
    if constexpr (std::is_same_v<S, double>) {
        for (int i = 0; i < n; ++i) out[i] = q[i];
    } else if constexpr (std::is_same_v<S, dual>) {
        for (int i = 0; i < n; ++i) {
            out[i].a = q[i];
            out[i].n = n;
            out[i].d[i] = 1.0;
        }
    } else {
        for (int i = 0; i < n; ++i) {
            out[i].a.a = q[i];
            out[i].a.n = n;
            out[i].a.d[i] = 1.0;
            out[i].n = n;
            out[i].d[i] = dual(1.0);
        }
    }
    return out;
}

}  // namespace nonholo

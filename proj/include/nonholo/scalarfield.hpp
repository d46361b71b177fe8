/**
 * @file scalarfield.hpp
 * @brief Type-erased smooth functions on a chart, evaluable at plain or jet level.
 */
#pragma once

#include <functional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "nonholo/jet.hpp"

namespace nonholo {

// A smooth function of chart coordinates.  One generic callable is erased into
// three evaluation slots so derived fields can drop the top differentiation
// level: a first partial of a field built from a generic lambda is still
// evaluable on dual inputs, which is what nested exterior derivatives need.
class scalar_field {
public:
    using plain_fn = std::function<double(const std::vector<double>&)>;
    using dual_fn = std::function<dual(const std::vector<dual>&)>;
    using dual2_fn = std::function<dual2(const std::vector<dual2>&)>;

    scalar_field() : scalar_field(0.0) {}

    /*implicit*/ scalar_field(double c)
        : f0_([c](const std::vector<double>&) { return c; }),
          f1_([c](const std::vector<dual>&) { return dual(c); }),
          f2_([c](const std::vector<dual2>&) { return dual2(c); }) {}

    template <typename F,
              typename = decltype(std::declval<F>()(std::declval<const std::vector<dual2>&>()))>
    /*implicit*/ scalar_field(F f)
        : f0_([f](const std::vector<double>& q) { return f(q); }),
          f1_([f](const std::vector<dual>& q) { return f(q); }),
          f2_([f](const std::vector<dual2>& q) { return f(q); }) {}

    scalar_field(plain_fn f0, dual_fn f1, dual2_fn f2)
        : f0_(std::move(f0)), f1_(std::move(f1)), f2_(std::move(f2)) {}

    double operator()(const std::vector<double>& q) const { return f0_(q); }
    dual operator()(const std::vector<dual>& q) const { return f1_(q); }
    dual2 operator()(const std::vector<dual2>& q) const { return f2_(q); }

private:
    plain_fn f0_;
    dual_fn f1_;
    dual2_fn f2_;
};

inline dual2 lift_to_dual2(const dual& x) {
    dual2 r;
    r.a = x;
    return r;
}

// i-th coordinate partial.  Plain and dual evaluations run the parent one
// level up with coordinate seeding; second-order evaluation of the result
// would need third-order jets and is rejected.
inline scalar_field partial(const scalar_field& f, int i) {
    auto at_plain = [f, i](const std::vector<double>& q) {
        std::vector<dual> x = seed_point<dual>(q);
        dual r = f(x);
        return i < r.n ? r.d[i] : 0.0;
    };
    auto at_dual = [f, i](const std::vector<dual>& q) {
        int n = static_cast<int>(q.size());
        if (n > kMaxPartials) throw std::length_error("partial: chart wider than kMaxPartials");
        std::vector<dual2> x(q.size());
        for (int j = 0; j < n; ++j) {
            x[j].a = q[j];
            x[j].n = n;
            x[j].d[j] = dual(1.0);
        }
        dual2 r = f(x);
        return i < r.n ? r.d[i] : dual(0.0);
    };
    auto at_dual2 = [](const std::vector<dual2>&) -> dual2 {
        throw std::logic_error("partial: second-order evaluation of a derived field");
    };
    return scalar_field(at_plain, at_dual, at_dual2);
}

inline scalar_field coordinate_field(int i) {
    return scalar_field([i](const auto& q) { return q[i]; });
}

// All first partials of f at q from one jet evaluation.  Supported one level
// below the top: plain input evaluates f on duals, dual input on dual2.
template <typename S>
std::vector<S> field_gradient(const scalar_field& f, const std::vector<S>& q) {
    int n = static_cast<int>(q.size());
    if (n > kMaxPartials) throw std::length_error("field_gradient: chart wider than kMaxPartials");
    std::vector<S> out(q.size(), S(0.0));
    if constexpr (std::is_same_v<S, double>) {
        std::vector<dual> x = seed_point<dual>(q);
        dual r = f(x);
        for (int i = 0; i < n && i < r.n; ++i) out[i] = r.d[i];
    } else if constexpr (std::is_same_v<S, dual>) {
        std::vector<dual2> x(q.size());
        for (int j = 0; j < n; ++j) {
            x[j].a = q[j];
            x[j].n = n;
            x[j].d[j] = dual(1.0);
        }
        dual2 r = f(x);
        for (int i = 0; i < n && i < r.n; ++i) out[i] = r.d[i];
    } else {
        throw std::logic_error("field_gradient: second-order input needs third-order jets");
    }
    return out;
}

namespace detail {
template <typename Op>
scalar_field combine(const scalar_field& f, const scalar_field& g, Op op) {
    return scalar_field(
        [f, g, op](const std::vector<double>& q) { return op(f(q), g(q)); },
        [f, g, op](const std::vector<dual>& q) { return op(f(q), g(q)); },
        [f, g, op](const std::vector<dual2>& q) { return op(f(q), g(q)); });
}
}  // namespace detail

inline scalar_field operator+(const scalar_field& f, const scalar_field& g) {
    return detail::combine(f, g, [](const auto& a, const auto& b) { return a + b; });
}
inline scalar_field operator-(const scalar_field& f, const scalar_field& g) {
    return detail::combine(f, g, [](const auto& a, const auto& b) { return a - b; });
}
inline scalar_field operator*(const scalar_field& f, const scalar_field& g) {
    return detail::combine(f, g, [](const auto& a, const auto& b) { return a * b; });
}
inline scalar_field operator-(const scalar_field& f) {
    return scalar_field(0.0) - f;
}
inline scalar_field operator*(double c, const scalar_field& f) {
    return scalar_field(c) * f;
}

}  // namespace nonholo

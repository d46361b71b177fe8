#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "nonholo/forms.hpp"
#include "nonholo/jet.hpp"
#include "nonholo/linalg.hpp"
#include "nonholo/scalarfield.hpp"
#include "oracles.hpp"

using namespace nonholo;

namespace {

// smooth test function used across the AD checks
template <typename S>
S smooth(const std::vector<S>& q) {
    using nonholo::sin;
    using nonholo::cos;
    using nonholo::sqrt;
    return q[0] * q[0] * q[1] + sin(q[0] * q[1]) + sqrt(2.0 + cos(q[1]));
}

}  // namespace

TEST_CASE("jet first partials match finite differences") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> q{u(rng), u(rng)};
        auto x = seed_point<dual>(q);
        dual r = smooth(x);
        CHECK(r.a == doctest::Approx(smooth(q)).epsilon(1e-14));
        for (int i = 0; i < 2; ++i) {
            double fd = oracle::central_diff(
                [&](double t) {
                    std::vector<double> qq = q;
                    qq[i] = t;
                    return smooth(qq);
                },
                q[i]);
            CHECK(r.d[i] == doctest::Approx(fd).epsilon(1e-6));
        }
    }
}

TEST_CASE("nested jets produce the full Hessian") {
    std::vector<double> q{0.7, -0.4};
    auto x = seed_point<dual2>(q);
    dual2 r = smooth(x);
    // f = x^2 y + sin(xy) + sqrt(2 + cos y)
    double X = q[0], Y = q[1];
    double fxx = 2 * Y - Y * Y * std::sin(X * Y);
    double fxy = 2 * X + std::cos(X * Y) - X * Y * std::sin(X * Y);
    double g = 2.0 + std::cos(Y);
    double fyy = -X * X * std::sin(X * Y) +
                 (-std::cos(Y) * 2.0 * g - std::sin(Y) * std::sin(Y)) / (4.0 * std::pow(g, 1.5));
    CHECK(r.d[0].d[0] == doctest::Approx(fxx).epsilon(1e-12));
    CHECK(r.d[0].d[1] == doctest::Approx(fxy).epsilon(1e-12));
    CHECK(r.d[1].d[0] == doctest::Approx(fxy).epsilon(1e-12));
    CHECK(r.d[1].d[1] == doctest::Approx(fyy).epsilon(1e-10));
}

TEST_CASE("lu solves plain and jet systems") {
    matrix<double> a(3, 3);
    double vals[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a(i, j) = vals[i][j];
    std::vector<double> b{1.0, -2.0, 0.5};
    auto x = solve_linear(a, b);
    auto back = a * x;
    for (int i = 0; i < 3; ++i) CHECK(back[i] == doctest::Approx(b[i]).epsilon(1e-13));

    // jet-valued system: entries depend on a seeded parameter t
    double t0 = 0.3;
    dual t;
    t.a = t0;
    t.n = 1;
    t.d[0] = 1.0;
    matrix<dual> aj(2, 2);
    aj(0, 0) = 1.0 + t * t;
    aj(0, 1) = t;
    aj(1, 0) = t;
    aj(1, 1) = 2.0;
    std::vector<dual> bj{dual(1.0), t};
    auto xj = lu_factorization<dual>(aj).solve(bj);
    auto fd = [&](double tt) {
        matrix<double> m(2, 2);
        m(0, 0) = 1 + tt * tt;
        m(0, 1) = tt;
        m(1, 0) = tt;
        m(1, 1) = 2;
        return solve_linear(m, std::vector<double>{1.0, tt});
    };
    auto base = fd(t0);
    for (int i = 0; i < 2; ++i) {
        CHECK(xj[i].a == doctest::Approx(base[i]).epsilon(1e-13));
        double d = oracle::central_diff([&](double tt) { return fd(tt)[i]; }, t0);
        CHECK(xj[i].d[0] == doctest::Approx(d).epsilon(1e-7));
    }
}

TEST_CASE("canonical pairing and antisymmetry of form evaluation") {
    coordinate_form omega(2, 2);
    omega.add_term({0, 1}, scalar_field(1.0));  // dq ^ dp
    std::vector<double> pt{0.3, 0.8};
    std::vector<std::vector<double>> eq_ep{{1.0, 0.0}, {0.0, 1.0}};
    CHECK(omega.evaluate(pt, eq_ep) == doctest::Approx(1.0));
    std::vector<std::vector<double>> ep_eq{{0.0, 1.0}, {1.0, 0.0}};
    CHECK(omega.evaluate(pt, ep_eq) == doctest::Approx(-1.0));

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1, 1);
    coordinate_form w(2, 3);
    w.add_term({0, 1}, scalar_field([](const auto& q) { return q[2] * q[0]; }));
    w.add_term({1, 2}, scalar_field([](const auto& q) { return q[0] + q[1]; }));
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> p{u(rng), u(rng), u(rng)};
        std::vector<double> a{u(rng), u(rng), u(rng)}, b{u(rng), u(rng), u(rng)};
        double ab = w.evaluate(p, {a, b});
        double ba = w.evaluate(p, {b, a});
        CHECK(ab == doctest::Approx(-ba).epsilon(1e-14));
    }
}

TEST_CASE("exterior derivative of the canonical one-form") {
    // theta = p dq on (q, p); d theta = dp ^ dq = -(dq ^ dp)
    coordinate_form theta(1, 2);
    theta.add_term({0}, coordinate_field(1));
    coordinate_form dtheta = exterior_derivative(theta);
    std::vector<double> pt{0.2, -0.7};
    CHECK(dtheta.coefficient({1, 0})(pt) == doctest::Approx(1.0));
    CHECK(dtheta.coefficient({0, 1})(pt) == doctest::Approx(-1.0));
}

TEST_CASE("exterior derivative applied twice vanishes") {
    coordinate_form alpha(1, 3);
    alpha.add_term({0}, scalar_field([](const auto& q) {
                       using nonholo::sin;
                       return q[1] * q[1] * q[2] + sin(q[1]);
                   }));
    alpha.add_term({1}, scalar_field([](const auto& q) { return q[0] * q[2] + q[2] * q[2]; }));
    alpha.add_term({2}, scalar_field([](const auto& q) {
                       using nonholo::cos;
                       return cos(q[0] * q[1]);
                   }));
    coordinate_form dda = exterior_derivative(exterior_derivative(alpha));
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-1.2, 1.2);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> p{u(rng), u(rng), u(rng)};
        CHECK(dda.max_abs_coefficient(p) < 1e-9);
    }
}

TEST_CASE("interior product contracts the first slot") {
    coordinate_form omega(2, 2);
    omega.add_term({0, 1}, scalar_field(1.0));
    coordinate_vector_field eq(2);
    eq.components[0] = scalar_field(1.0);
    coordinate_form contracted = interior_product(eq, omega);
    std::vector<double> pt{0.1, 0.4};
    CHECK(contracted.coefficient({1})(pt) == doctest::Approx(1.0));
    CHECK(contracted.coefficient({0})(pt) == doctest::Approx(0.0));

    // i_X df = directional derivative of f along X
    scalar_field f([](const auto& q) {
        using nonholo::sin;
        return q[0] * q[1] + sin(q[0]);
    });
    coordinate_vector_field x(2);
    x.components[0] = scalar_field([](const auto& q) { return q[1]; });
    x.components[1] = scalar_field(2.0);
    coordinate_form xf = interior_product(x, differential(f, 2));
    std::vector<double> pt2{0.6, -0.9};
    double fd = 0.0;
    {
        double h = 1e-4;
        std::vector<double> dir{pt2[1], 2.0};
        auto fline = [&](double t) {
            return f(std::vector<double>{pt2[0] + t * dir[0], pt2[1] + t * dir[1]});
        };
        fd = (-fline(2 * h) + 8 * fline(h) - 8 * fline(-h) + fline(-2 * h)) / (12 * h);
    }
    CHECK(xf.coefficient(std::vector<int>{})(pt2) == doctest::Approx(fd).epsilon(1e-6));
}

TEST_CASE("wedge and scalar multiplication satisfy the product rule under d") {
    scalar_field f([](const auto& q) {
        using nonholo::cos;
        return 1.5 + cos(q[0]) * q[1];
    });
    coordinate_form omega(2, 3);
    omega.add_term({0, 1}, scalar_field([](const auto& q) { return q[2]; }));
    omega.add_term({0, 2}, scalar_field([](const auto& q) { return q[1] * q[0]; }));

    coordinate_form lhs = exterior_derivative(f * omega);
    coordinate_form rhs = wedge(differential(f, 3), omega) + f * exterior_derivative(omega);
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<double> p{u(rng), u(rng), u(rng)};
        std::vector<std::vector<double>> args{{u(rng), u(rng), u(rng)},
                                              {u(rng), u(rng), u(rng)},
                                              {u(rng), u(rng), u(rng)}};
        CHECK(lhs.evaluate(p, args) == doctest::Approx(rhs.evaluate(p, args)).epsilon(1e-10));
    }
}

TEST_CASE("derived fields still evaluate at first order") {
    scalar_field f([](const auto& q) {
        using nonholo::sin;
        return sin(q[0]) * q[1] * q[1];
    });
    scalar_field fx = partial(f, 0);
    std::vector<double> q{0.5, 1.2};
    auto xd = seed_point<dual>(q);
    dual v = fx(xd);
    CHECK(v.a == doctest::Approx(std::cos(0.5) * 1.44).epsilon(1e-13));
    CHECK(v.d[0] == doctest::Approx(-std::sin(0.5) * 1.44).epsilon(1e-12));
    CHECK(v.d[1] == doctest::Approx(std::cos(0.5) * 2.4).epsilon(1e-12));
    CHECK_THROWS_AS((void)fx(seed_point<dual2>(q)), std::logic_error);
}

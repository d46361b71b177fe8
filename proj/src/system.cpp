#include "nonholo/system.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>

namespace nonholo {

namespace {

// Frame-block kinetic matrix [[kbar, kcross], [kcross^T, k_WW]] at a full
// configuration; pairs frame velocities (rdot, v^A) with frame momenta.
matrix<double> frame_metric(const mechanical_system& sys, const std::vector<double>& q) {
    int m = sys.chart.qbar_dim(), w = sys.chart.n_gw(), n = sys.chart.dim();
    matrix<double> kb = kappa_bar(sys, q);
    matrix<double> kc = kappa_cross(sys, q);
    matrix<double> k = metric_at(sys, q);
    matrix<double> out(n, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) out(i, j) = kb(i, j);
    for (int i = 0; i < m; ++i)
        for (int b = 0; b < w; ++b) {
            out(i, m + b) = kc(i, b);
            out(m + b, i) = kc(i, b);
        }
    for (int a = 0; a < w; ++a)
        for (int b = 0; b < w; ++b) out(m + a, m + b) = k(m + a, m + b);
    return out;
}

// Unpivoted LDL^T diagonal; smallest entry decides definiteness.
double min_ldlt_pivot(const matrix<double>& k) {
    int n = k.rows();
    matrix<double> l = matrix<double>::identity(n);
    std::vector<double> d(n, 0.0);
    double min_pivot = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
        double dj = k(j, j);
        for (int s = 0; s < j; ++s) dj -= l(j, s) * l(j, s) * d[s];
        d[j] = dj;
        min_pivot = std::min(min_pivot, dj);
        if (dj == 0.0) break;
        for (int i = j + 1; i < n; ++i) {
            double v = k(i, j);
            for (int s = 0; s < j; ++s) v -= l(i, s) * l(j, s) * d[s];
            l(i, j) = v / dj;
        }
    }
    return min_pivot;
}

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

validation_report validate(const mechanical_system& sys, int samples, unsigned seed, double tol) {
    if (samples < 1) throw std::invalid_argument("validate: need at least one sample");
    int n = sys.chart.dim(), m = sys.chart.qbar_dim(), w = sys.chart.n_gw();
    int ns = sys.chart.n_shape(), nh = sys.chart.n_h();
    std::mt19937_64 rng(seed);

    validation_report rep;
    rep.min_metric_pivot = std::numeric_limits<double>::infinity();
    rep.min_frame_pivot = std::numeric_limits<double>::infinity();
    bool finite = true;

    // Coordinate directions whose partials must vanish for each data block.
    std::vector<int> metric_dirs, connection_dirs;
    for (int b = 0; b < w; ++b) {
        if (sys.metric_gw_invariant) metric_dirs.push_back(m + b);
        if (sys.connection_gw_invariant) connection_dirs.push_back(m + b);
    }
    for (int a = 0; a < nh; ++a) {
        if (sys.metric_h_invariant) metric_dirs.push_back(ns + a);
        if (sys.connection_h_invariant) connection_dirs.push_back(ns + a);
    }

    for (int s = 0; s < samples; ++s) {
        std::vector<double> q = sys.chart.sample(rng);
        matrix<double> k = metric_at(sys, q);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (!std::isfinite(k(i, j))) finite = false;
                rep.max_metric_asymmetry =
                    std::max(rep.max_metric_asymmetry, std::abs(k(i, j) - k(j, i)));
            }
        if (sys.metric_definite) {
            rep.min_metric_pivot = std::min(rep.min_metric_pivot, min_ldlt_pivot(k));
        } else {
            lu_factorization<double> lu(k);
            rep.min_metric_pivot = std::min(rep.min_metric_pivot, lu.min_pivot());
        }

        matrix<double> a = connection_at(sys, q);
        matrix<double> frame = matrix<double>::identity(n);
        for (int al = 0; al < m; ++al)
            for (int b = 0; b < w; ++b) {
                if (!std::isfinite(a(b, al))) finite = false;
                frame(al, m + b) = -a(b, al);
            }
        lu_factorization<double> flu(frame);
        rep.min_frame_pivot = std::min(rep.min_frame_pivot, flu.min_pivot());

        std::vector<dual> qd = seed_point<dual>(q);
        auto record = [&](const scalar_field& f, const std::vector<int>& dirs) {
            dual v = f(qd);
            if (!std::isfinite(value(v))) finite = false;
            for (int dir : dirs)
                rep.max_invariance_violation =
                    std::max(rep.max_invariance_violation, std::abs(partial_or_zero(v, dir)));
        };
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) record(sys.metric(i, j), metric_dirs);
        for (int b = 0; b < w; ++b)
            for (int al = 0; al < m; ++al) record(sys.connection(b, al), connection_dirs);
        record(sys.potential, metric_dirs);
    }

    rep.metric_spd = sys.metric_definite ? rep.min_metric_pivot > tol
                                         : std::abs(rep.min_metric_pivot) > tol;
    rep.frame_full_rank = std::abs(rep.min_frame_pivot) > tol;
    if (!finite) rep.failures.push_back("non-finite coefficient at a sampled point");
    if (!rep.metric_spd)
        rep.failures.push_back((sys.metric_definite ? "metric not positive definite, min pivot "
                                                    : "metric singular, min pivot ") +
                               fmt(rep.min_metric_pivot));
    if (rep.max_metric_asymmetry > tol)
        rep.failures.push_back("metric asymmetry " + fmt(rep.max_metric_asymmetry));
    if (!rep.frame_full_rank)
        rep.failures.push_back("constraint frame rank deficient, min pivot " +
                               fmt(rep.min_frame_pivot));
    if (rep.max_invariance_violation > tol)
        rep.failures.push_back("declared invariance violated by " +
                               fmt(rep.max_invariance_violation));
    rep.passed = rep.failures.empty();
    return rep;
}

namespace {

void check_state(const mechanical_system& sys, const phase_state& st, representation want) {
    if (st.repr != want) throw std::invalid_argument("phase state has wrong representation");
    size_t p = st.position.size();
    if (p != static_cast<size_t>(sys.chart.dim()) &&
        p != static_cast<size_t>(sys.chart.qbar_dim()))
        throw std::invalid_argument("phase state position has wrong dimension");
    if (st.fiber.size() != p) throw std::invalid_argument("phase state fiber has wrong dimension");
}

matrix<double> fiber_metric(const mechanical_system& sys, const std::vector<double>& pos) {
    if (pos.size() == static_cast<size_t>(sys.chart.dim())) return frame_metric(sys, pos);
    return kappa_bar(sys, pos);
}

}  // namespace

phase_state legendre(const mechanical_system& sys, const phase_state& state) {
    check_state(sys, state, representation::tangent);
    matrix<double> k = fiber_metric(sys, state.position);
    return {state.position, k * state.fiber, representation::cotangent};
}

phase_state legendre_inverse(const mechanical_system& sys, const phase_state& state) {
    check_state(sys, state, representation::cotangent);
    matrix<double> k = fiber_metric(sys, state.position);
    lu_factorization<double> lu(k);
    return {state.position, lu.solve(state.fiber), representation::tangent};
}

double energy(const mechanical_system& sys, const phase_state& state) {
    const phase_state& tan =
        state.repr == representation::tangent ? state : legendre_inverse(sys, state);
    matrix<double> k = fiber_metric(sys, tan.position);
    double e = 0.5 * dot(tan.fiber, k * tan.fiber);
    std::vector<double> q = pad_to_full(sys, tan.position);
    return e + sys.potential(q);
}

field_matrix connection_from_one_forms(const adapted_chart& chart,
                                       const std::vector<std::vector<scalar_field>>& rows) {
    int m = chart.qbar_dim(), w = chart.n_gw(), n = chart.dim();
    if (static_cast<int>(rows.size()) != w)
        throw std::invalid_argument("need one constraint form per gw fiber coordinate");
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != n)
            throw std::invalid_argument("constraint form has wrong dimension");
    auto shared = std::make_shared<const std::vector<std::vector<scalar_field>>>(rows);
    field_matrix a(w, m);
    for (int b = 0; b < w; ++b)
        for (int al = 0; al < m; ++al)
            a(b, al) = scalar_field([shared, m, w, b, al](const auto& q) {
                using S = std::decay_t<decltype(q[0])>;
                matrix<S> eg(w, w);
                std::vector<S> col(static_cast<size_t>(w));
                for (int i = 0; i < w; ++i) {
                    for (int j = 0; j < w; ++j) eg(i, j) = (*shared)[i][m + j](q);
                    col[i] = (*shared)[i][al](q);
                }
                lu_factorization<S> lu(eg);
                return lu.solve(col)[b];
            });
    return a;
}

}  // namespace nonholo

#include "nonholo/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nonholo {

namespace {

std::vector<double> flatten(const phase_state& st) {
    std::vector<double> y = st.position;
    y.insert(y.end(), st.fiber.begin(), st.fiber.end());
    return y;
}

phase_state unflatten(const std::vector<double>& y, const phase_state& proto) {
    phase_state st;
    st.repr = proto.repr;
    st.position.assign(y.begin(), y.begin() + proto.position.size());
    st.fiber.assign(y.begin() + proto.position.size(), y.end());
    return st;
}

bool all_finite(const std::vector<double>& y) {
    for (double v : y)
        if (!std::isfinite(v)) return false;
    return true;
}

std::vector<double> axpy(const std::vector<double>& y, double h, const std::vector<double>& d) {
    std::vector<double> r = y;
    for (size_t i = 0; i < r.size(); ++i) r[i] += h * d[i];
    return r;
}

std::vector<double> rk4_step(const flow_rhs& rhs, const std::vector<double>& y, double h) {
    auto k1 = rhs(y);
    auto k2 = rhs(axpy(y, h / 2, k1));
    auto k3 = rhs(axpy(y, h / 2, k2));
    auto k4 = rhs(axpy(y, h, k3));
    std::vector<double> out = y;
    for (size_t i = 0; i < y.size(); ++i)
        out[i] += h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    return out;
}

// Dormand-Prince 5(4) pair; returns the 5th-order state and the embedded
// error estimate.
void rk45_step(const flow_rhs& rhs, const std::vector<double>& y, double h,
               std::vector<double>& out, std::vector<double>& err) {
    static const double a21 = 1.0 / 5;
    static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                        a54 = -212.0 / 729;
    static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static const double e1 = 5179.0 / 57600, e3 = 7571.0 / 16695, e4 = 393.0 / 640,
                        e5 = -92097.0 / 339200, e6 = 187.0 / 2100, e7 = 1.0 / 40;

    size_t n = y.size();
    auto k1 = rhs(y);
    std::vector<double> t(n);
    for (size_t i = 0; i < n; ++i) t[i] = y[i] + h * a21 * k1[i];
    auto k2 = rhs(t);
    for (size_t i = 0; i < n; ++i) t[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    auto k3 = rhs(t);
    for (size_t i = 0; i < n; ++i) t[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    auto k4 = rhs(t);
    for (size_t i = 0; i < n; ++i)
        t[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    auto k5 = rhs(t);
    for (size_t i = 0; i < n; ++i)
        t[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    auto k6 = rhs(t);
    out.resize(n);
    for (size_t i = 0; i < n; ++i)
        out[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    auto k7 = rhs(out);
    err.resize(n);
    for (size_t i = 0; i < n; ++i) {
        double low = y[i] + h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                                 e7 * k7[i]);
        err[i] = out[i] - low;
    }
}

}  // namespace

trajectory integrate(const flow_rhs& rhs, const adapted_chart& chart, const phase_state& initial,
                     double step, double horizon, step_method method,
                     const integration_options& opts) {
    if (step <= 0.0 || horizon <= 0.0)
        throw std::invalid_argument("integrate: step and horizon must be positive");
    if (!chart.in_range(initial.position, opts.guard_margin))
        throw std::invalid_argument("integrate: initial state outside chart ranges");

    trajectory traj;
    std::vector<double> y = flatten(initial);
    double t = 0.0;
    traj.times.push_back(t);
    traj.states.push_back(initial);

    double h = step;
    const double tiny = horizon * 1e-14;
    while (t < horizon - tiny) {
        double hs = std::min(h, horizon - t);
        std::vector<double> ynew;
        if (method == step_method::rk4) {
            ynew = rk4_step(rhs, y, hs);
        } else {
            std::vector<double> err;
            for (;;) {
                rk45_step(rhs, y, hs, ynew, err);
                double norm = 0.0;
                for (size_t i = 0; i < y.size(); ++i) {
                    double sc = opts.abs_tol +
                                opts.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
                    norm += (err[i] / sc) * (err[i] / sc);
                }
                norm = std::sqrt(norm / static_cast<double>(y.size()));
                double factor = norm > 0.0 ? 0.9 * std::pow(norm, -0.2) : 5.0;
                factor = std::clamp(factor, 0.2, 5.0);
                if (norm <= 1.0 || !std::isfinite(norm)) {
                    if (!std::isfinite(norm))
                        throw std::runtime_error("integrate: non-finite error estimate");
                    h = hs * factor;
                    break;
                }
                hs *= factor;
                if (hs < tiny) throw std::runtime_error("integrate: step size underflow");
            }
        }
        if (!all_finite(ynew)) throw std::runtime_error("integrate: non-finite state");
        phase_state st = unflatten(ynew, initial);
        if (!chart.in_range(st.position, opts.guard_margin)) {
            traj.range_exit = true;
            break;
        }
        t += hs;
        y = std::move(ynew);
        traj.times.push_back(t);
        traj.states.push_back(std::move(st));
    }
    return traj;
}

drift_report monitor(trajectory& traj, const std::vector<named_observable>& observables) {
    drift_report rep;
    size_t n = traj.states.size();
    for (const auto& obs : observables) {
        std::vector<double> vals(n);
        for (size_t i = 0; i < n; ++i) vals[i] = obs.fn(traj.states[i]);
        drift_entry entry;
        entry.name = obs.name;
        if (n > 0) {
            double base = vals[0];
            for (double v : vals) entry.max_drift = std::max(entry.max_drift, std::abs(v - base));
        }
        if (n > 1) {
            double tm = 0.0, vm = 0.0;
            for (size_t i = 0; i < n; ++i) {
                tm += traj.times[i];
                vm += vals[i];
            }
            tm /= static_cast<double>(n);
            vm /= static_cast<double>(n);
            double num = 0.0, den = 0.0;
            for (size_t i = 0; i < n; ++i) {
                num += (traj.times[i] - tm) * (vals[i] - vm);
                den += (traj.times[i] - tm) * (traj.times[i] - tm);
            }
            entry.rate = den > 0.0 ? num / den : 0.0;
        }
        traj.observables[obs.name] = std::move(vals);
        rep.entries.push_back(std::move(entry));
    }
    return rep;
}

}  // namespace nonholo

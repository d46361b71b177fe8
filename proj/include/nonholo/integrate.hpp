/**
 * @file integrate.hpp
 * @brief Fixed and adaptive Runge-Kutta integration with range guards and drift monitoring.
 */
#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "nonholo/chart.hpp"
#include "nonholo/system.hpp"

namespace nonholo {

enum class step_method { rk4, rk45 };

struct trajectory {
    std::vector<double> times;
    std::vector<phase_state> states;
    // named sequences aligned with times, filled by monitor or the producer
    std::map<std::string, std::vector<double>> observables;
    // true when the run was truncated by the coordinate guard
    bool range_exit = false;
};

struct integration_options {
    double abs_tol = 1e-9;   // adaptive absolute tolerance
    double rel_tol = 1e-9;   // adaptive relative tolerance
    double guard_margin = 0.05;
};

// Time derivative of the flattened state (position then fiber).
using flow_rhs = std::function<std::vector<double>(const std::vector<double>&)>;

// Integrates over [0, horizon] from initial.  step is the fixed step for rk4
// and the starting step for rk45.  The position block is checked against the
// chart's hard ranges after every accepted step; leaving them truncates the
// trajectory and sets range_exit instead of failing.
trajectory integrate(const flow_rhs& rhs, const adapted_chart& chart, const phase_state& initial,
                     double step, double horizon, step_method method,
                     const integration_options& opts = {});

struct named_observable {
    std::string name;
    std::function<double(const phase_state&)> fn;
};

struct drift_entry {
    std::string name;
    double max_drift = 0.0;  // max |obs(t) - obs(0)| along the trajectory
    double rate = 0.0;       // least-squares slope of obs over time
};

struct drift_report {
    std::vector<drift_entry> entries;
};

// Evaluates each observable along the trajectory, stores the sequences in
// trajectory.observables, and reports per-observable drift statistics.
drift_report monitor(trajectory& traj, const std::vector<named_observable>& observables);

}  // namespace nonholo

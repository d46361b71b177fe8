/**
 * @file models.hpp
 * @brief Built-in example systems with closed-form reference functions.
 */
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nonholo/forms.hpp"
#include "nonholo/system.hpp"

namespace nonholo {

// Input convention of a reference function.
enum class oracle_input {
    compressed_cotangent,  // z = (qbar, p)
    compressed_tangent,    // (qbar, rdot)
    leaf,                  // (x, ptilde) on a fixed momentum leaf
    position,              // qbar
    custom                 // documented per oracle; excluded from generic sweeps
};

struct oracle_fn {
    oracle_input input = oracle_input::compressed_cotangent;
    std::function<std::vector<double>(const std::vector<double>&)> fn;
};

struct model_bundle {
    std::string name;
    std::shared_ptr<const mechanical_system> system;
    std::map<std::string, double> parameters;
    // Optional gauge two-form on the compressed phase space (base
    // differentials only, coefficients functions of the full phase point).
    std::optional<coordinate_form> gauge;
    std::map<std::string, oracle_fn> oracles;
    std::vector<double> default_state;  // compressed cotangent (qbar, p)
    std::vector<double> default_mu;     // momentum level for the second reduction
    std::vector<std::string> warnings;
};

// Board with steerable wheel pairs and a rotor; shape (theta, phi), residual
// rotor angle psi, translation fiber (x, y).
model_bundle snakeboard(double m, double J, double J0, double J1, double R);

// Inhomogeneous sphere rolling without sliding; shape Euler angles
// (theta, psi), residual angle phi, translation fiber (x, y).
model_bundle chaplygin_ball(double m, double r, double I1, double I2, double I3);

// Parameter-free example on R^4 x SE(2) with a nonabelian residual group.
model_bundle se2_toy();

// Bundle by CLI/JSON name: "snakeboard", "chaplygin-ball", "se2-toy".
model_bundle make_model(const std::string& name);

std::vector<std::string> model_names();

}  // namespace nonholo

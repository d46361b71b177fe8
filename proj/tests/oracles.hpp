/**
 * @file oracles.hpp
 * @brief Independent closed-form reference formulas and frozen literals for tests.
 *
 * Everything here is hand-derived and self-contained: no engine headers are
 * included, so these values cannot inherit an engine bug.
 */
#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

using vec3 = std::array<double, 3>;
using mat3 = std::array<std::array<double, 3>, 3>;

inline vec3 cross(const vec3& a, const vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline double dot3(const vec3& a, const vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline vec3 scale(double c, const vec3& a) { return {c * a[0], c * a[1], c * a[2]}; }
inline vec3 add(const vec3& a, const vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

// 5-point central difference, h tuned for ~1e-10 truncation on smooth f.
inline double central_diff(const std::function<double(double)>& f, double x, double h = 1e-3) {
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

// ---------------------------------------------------------------------------
// Snakeboard: shape (theta, phi), conserved rotor direction psi, translations
// (x, y) eliminated by the constraint connection.
// ---------------------------------------------------------------------------
namespace sb {

struct params {
    double m = 1.0, R = 1.0, J0 = 0.4, J1 = 0.1, J = 0.4;
};

// coupling coefficient g(phi) appearing in the reduced magnetic term and bracket
inline double coupling(const params& P, double phi) {
    double s = std::sin(phi);
    return P.m * P.R * P.R * (std::cos(phi) / s) / (P.m * P.R * P.R - P.J0 * s * s);
}

// coefficient of dtheta^dphi in the magnetic 2-form carried by the compressed
// bracket, expressed in momenta
inline double jk_coeff(const params& P, double phi, double p_theta, double p_psi) {
    return -coupling(P, phi) * (p_theta - p_psi);
}

// kinetic metric in compressed coordinates (theta, phi, psi)
inline std::array<std::array<double, 3>, 3> kbar(const params& P, double phi) {
    double s2 = std::sin(phi) * std::sin(phi);
    return {{{P.m * P.R * P.R / s2, 0.0, P.J0}, {0.0, 2 * P.J1, 0.0}, {P.J0, 0.0, P.J0}}};
}

inline std::array<double, 3> legendre(const params& P, double phi, double thd, double phd,
                                      double psd) {
    double s2 = std::sin(phi) * std::sin(phi);
    return {P.m * P.R * P.R / s2 * thd + P.J0 * psd, 2 * P.J1 * phd, P.J0 * (thd + psd)};
}

inline double hamiltonian(const params& P, double phi, double p_theta, double p_phi, double p_psi) {
    double s2 = std::sin(phi) * std::sin(phi);
    double d = P.m * P.R * P.R - P.J0 * s2;
    return (p_theta - p_psi) * (p_theta - p_psi) * s2 / (2 * d) + p_psi * p_psi / (2 * P.J0) +
           p_phi * p_phi / (4 * P.J1);
}

// accelerations of the compressed second-order dynamics
inline std::array<double, 3> accelerations(const params& P, double phi, double thd, double phd,
                                           double /*psd*/) {
    double s = std::sin(phi);
    double d = P.m * P.R * P.R - P.J0 * s * s;
    double thdd = P.m * P.R * P.R * (std::cos(phi) / s) * phd * thd / d;
    return {thdd, 0.0, -thdd};
}

// shape-only kinetic term after the rotor direction is eliminated at fixed level
inline double shape_metric_theta(const params& P, double phi) {
    double s2 = std::sin(phi) * std::sin(phi);
    return P.m * P.R * P.R / s2 - P.J0;  // G(phi)
}

inline double reduced_lagrangian(const params& P, double phi, double thd, double phd) {
    return 0.5 * shape_metric_theta(P, phi) * thd * thd + P.J1 * phd * phd;
}

inline double amended_potential(const params& P, double mu) { return mu * mu / (2 * P.J0); }

inline double conformal_factor(const params& P, double phi) {
    double s = std::sin(phi);
    return s / std::sqrt(P.m * P.R * P.R - P.J0 * s * s);
}

// nonzero reduced bracket entry {p_phi~, p_theta~} = coupling * p_theta~
inline double bracket_entry(const params& P, double phi, double ptil_theta) {
    return coupling(P, phi) * ptil_theta;
}

// leaf flow at level mu: state (theta, phi, ptil_theta, ptil_phi)
inline std::array<double, 4> leaf_rhs(const params& P, const std::array<double, 4>& s) {
    double G = shape_metric_theta(P, s[1]);
    double thd = s[2] / G;
    double phd = s[3] / (2 * P.J1);
    return {thd, phd, -coupling(P, s[1]) * s[2] * phd, 0.0};
}

}  // namespace sb

// ---------------------------------------------------------------------------
// Rolling ball with an inhomogeneous inertia tensor, body frame.
// State (k, gamma): angular momentum about the contact point and the vertical
// unit vector, both in body coordinates.
// ---------------------------------------------------------------------------
namespace ball {

struct params {
    double m = 1.0, r = 0.3;
    vec3 inertia{1.0, 2.0, 3.0};
    double a(int i) const { return inertia[i] + m * r * r; }
};

inline double s_quad(const params& P, const vec3& g) {
    return g[0] * g[0] / P.a(0) + g[1] * g[1] / P.a(1) + g[2] * g[2] / P.a(2);
}

inline double gamma_dot_omega(const params& P, const vec3& g, const vec3& k) {
    double gAk = g[0] * k[0] / P.a(0) + g[1] * k[1] / P.a(1) + g[2] * k[2] / P.a(2);
    return gAk / (1.0 - P.m * P.r * P.r * s_quad(P, g));
}

inline vec3 omega_from_k(const params& P, const vec3& g, const vec3& k) {
    double go = gamma_dot_omega(P, g, k);
    vec3 w;
    for (int i = 0; i < 3; ++i) w[i] = (k[i] + P.m * P.r * P.r * go * g[i]) / P.a(i);
    return w;
}

inline vec3 k_from_omega(const params& P, const vec3& g, const vec3& w) {
    double go = dot3(g, w);
    vec3 k;
    for (int i = 0; i < 3; ++i) k[i] = P.a(i) * w[i] - P.m * P.r * P.r * go * g[i];
    return k;
}

inline double energy(const params& P, const vec3& g, const vec3& k) {
    return 0.5 * dot3(k, omega_from_k(P, g, k));
}

inline double conserved(const vec3& g, const vec3& k) { return dot3(g, k); }

inline double conformal_factor(const params& P, const vec3& g) {
    return 1.0 / std::sqrt(1.0 - P.m * P.r * P.r * s_quad(P, g));
}

inline double amended_potential(const params& P, const vec3& g, double mu) {
    double igg = P.inertia[0] * g[0] * g[0] + P.inertia[1] * g[1] * g[1] +
                 P.inertia[2] * g[2] * g[2];
    return mu * mu / (2 * igg);
}

// body-frame equations of motion: kdot = k x omega, gammadot = gamma x omega
inline void rhs(const params& P, const vec3& g, const vec3& k, vec3& gdot, vec3& kdot) {
    vec3 w = omega_from_k(P, g, k);
    kdot = cross(k, w);
    gdot = cross(g, w);
}

// fixed-step RK4 in (gamma, k) with per-step renormalization of gamma
inline void integrate(const params& P, vec3& g, vec3& k, double h, int steps) {
    auto f = [&P](const vec3& gg, const vec3& kk, vec3& gd, vec3& kd) { rhs(P, gg, kk, gd, kd); };
    for (int n = 0; n < steps; ++n) {
        vec3 g1, k1, g2, k2, g3, k3, g4, k4;
        f(g, k, g1, k1);
        f(add(g, scale(h / 2, g1)), add(k, scale(h / 2, k1)), g2, k2);
        f(add(g, scale(h / 2, g2)), add(k, scale(h / 2, k2)), g3, k3);
        f(add(g, scale(h, g3)), add(k, scale(h, k3)), g4, k4);
        g = add(g, scale(h / 6, add(add(g1, g4), scale(2.0, add(g2, g3)))));
        k = add(k, scale(h / 6, add(add(k1, k4), scale(2.0, add(k2, k3)))));
        double n2 = std::sqrt(dot3(g, g));
        g = scale(1.0 / n2, g);
    }
}

// Euler chart (theta, psi, phi):
//   gamma = (sin theta sin psi, sin theta cos psi, cos theta)
inline vec3 gamma_of(double theta, double psi) {
    return {std::sin(theta) * std::sin(psi), std::sin(theta) * std::cos(psi), std::cos(theta)};
}

// columns of the body angular-velocity map: omega = L_th*thd + L_ps*psd + L_ph*phd
inline void chart_columns(double theta, double psi, vec3& col_th, vec3& col_ps, vec3& col_ph) {
    col_th = {std::cos(psi), -std::sin(psi), 0.0};
    col_ps = {0.0, 0.0, 1.0};
    col_ph = gamma_of(theta, psi);
}

// chart kinetic metric in order (theta, psi, phi)
inline mat3 kbar(const params& P, double theta, double psi) {
    vec3 c[3];
    chart_columns(theta, psi, c[0], c[1], c[2]);
    vec3 g = gamma_of(theta, psi);
    mat3 kb{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double aij = 0.0;
            for (int s = 0; s < 3; ++s) aij += P.a(s) * c[i][s] * c[j][s];
            kb[i][j] = aij - P.m * P.r * P.r * dot3(g, c[i]) * dot3(g, c[j]);
        }
    return kb;
}

// chart momenta p_i = <K, column_i>
inline vec3 chart_momenta(double theta, double psi, const vec3& k) {
    vec3 c0, c1, c2;
    chart_columns(theta, psi, c0, c1, c2);
    return {dot3(k, c0), dot3(k, c1), dot3(k, c2)};
}

}  // namespace ball

// ---------------------------------------------------------------------------
// Planar toy system on SE(2) x R^2 x T^2 with one-parameter shape coupling.
// ---------------------------------------------------------------------------
namespace se2 {

inline double kbar22(double x1) { return 2.0 * (2.0 + std::cos(x1)); }

inline double reduced_lagrangian(double x1, double x1d, double x2d) {
    return 0.5 * (x1d * x1d + kbar22(x1) * x2d * x2d);
}

// coefficient of dx2^dx1 in the compressed magnetic form
inline double jk_coeff(double x1, double p_x2) { return std::sin(x1) * p_x2; }

// true compressed shape accelerations
inline std::array<double, 2> accelerations(double x1, double x1d, double x2d) {
    return {0.0, std::sin(x1) * x1d * x2d / kbar22(x1)};
}

// orbit-variable dynamics at level mu in primed coordinates (theta', z')
inline std::array<double, 2> orbit_rhs(double mu, double thp, double zp) {
    double th_dot = (2.0 * std::cos(thp) + 2.0 * mu * std::sin(thp) - zp) / 3.0;
    double z_dot = (2.0 / 3.0) * (zp * (std::sin(thp) - mu * std::cos(thp)) -
                                  2.0 * (1.0 - mu * mu) * std::sin(thp) * std::cos(thp) -
                                  2.0 * mu + 4.0 * mu * std::cos(thp) * std::cos(thp));
    return {th_dot, z_dot};
}

}  // namespace se2

// ---------------------------------------------------------------------------
// Frozen spot literals, computed independently with numpy at double precision.
// ---------------------------------------------------------------------------
namespace frozen {

// snakeboard at (phi=pi/3, p_theta=0.9, p_phi=-0.3, p_psi=0.2), defaults
inline constexpr double sb_jk_dtheta_dphi = -0.577350269189626;
inline constexpr double sb_hamiltonian = 0.5374999999999999;
// snakeboard tangent at (phi=pi/3, thd=0.5, phd=-0.2, psd=0.1)
inline constexpr double sb_theta_ddot = -0.08247860988423228;
inline constexpr double sb_p_theta = 0.7066666666666668;
inline constexpr double sb_p_phi = -0.04000000000000001;
inline constexpr double sb_p_psi = 0.24;
inline constexpr double sb_conformal_at_pi3 = 1.0350983390135313;
inline constexpr double sb_bracket_at_pi3_ptil07 = 0.577350269189626;
inline constexpr double sb_shape_metric_pi3 = 0.9333333333333335;

// ball at gamma = normalize(0.3,-0.4,0.85), k = (0.5,-0.2,0.7), defaults
inline constexpr double ball_gamma0[3] = {0.3042120759380363, -0.40561610125071507,
                                          0.8619342151577695};
inline constexpr double ball_k0[3] = {0.5, -0.2, 0.7};
inline constexpr double ball_s_quad = 0.4040540889351483;
inline constexpr double ball_conformal = 1.0186938575483202;
inline constexpr double ball_gamma_dot_omega = 0.38772137661769135;
inline constexpr double ball_omega[3] = {0.4684545479247503, -0.10246600142773711,
                                         0.23627091548250403};
inline constexpr double ball_energy = 0.21005505754283768;
inline constexpr double ball_conserved = 0.8365832088295998;
inline constexpr double ball_kdot[3] = {0.02447201790291516, 0.20978272580607316,
                                        0.04245790887108151};
inline constexpr double ball_gammadot[3] = {-0.00751633505597903, 0.33190053741989445,
                                            0.15884131233500176};

// ball Euler chart at (theta=0.8, psi=0.55), omega = (0.25,-0.45,0.6)
inline constexpr double ball_chart_gamma[3] = {0.3749528673088017, 0.611563658540591,
                                               0.6967067093471654};
inline constexpr double ball_chart_kbar_thth = 1.3632019392872115;
inline constexpr double ball_chart_kbar_thph = -0.31965651399727735;
inline constexpr double ball_chart_kbar_psph = 2.0901201280414958;
inline constexpr double ball_chart_i_gamma = 2.344810586146264;
inline constexpr double ball_chart_abar_theta = -0.13632508991808942;
inline constexpr double ball_chart_abar_psi = 0.8913812230252013;
inline constexpr double ball_chart_k[3] = {0.2645171508497805, -0.9535203576436854,
                                           1.8391669235053913};
inline constexpr double ball_chart_p[3] = {0.7239002710705004, 1.8391669235053913,
                                           0.797403000965566};
inline constexpr double ball_amended_mu037 = 0.029192123408355444;

// se2 at (x1=0.6, x1d=0.4, x2d=-0.7) and (theta'=0.4, z'=-0.3, mu=0.25)
inline constexpr double se2_x2_ddot = -0.027978957918538137;
inline constexpr double se2_jk_at_px2_09 = 0.5081782260555319;
inline constexpr double se2_kbar22 = 5.650671229819356;
inline constexpr double se2_orbit_theta_dot = 0.7789437197200317;
inline constexpr double se2_orbit_z_dot = -0.24794260579139915;

}  // namespace frozen

}  // namespace oracle

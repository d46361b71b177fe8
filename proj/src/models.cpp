#include "nonholo/models.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "nonholo/linalg.hpp"

namespace nonholo {

namespace {

void require_positive(std::initializer_list<std::pair<const char*, double>> params) {
    for (const auto& [name, v] : params)
        if (!(v > 0.0))
            throw std::invalid_argument(std::string("model parameter must be positive: ") + name);
}

// ---------------------------------------------------------------------------
// snakeboard
// ---------------------------------------------------------------------------

std::shared_ptr<mechanical_system> snakeboard_system(double m, double J0, double J1, double R) {
    auto sys = std::make_shared<mechanical_system>();
    sys->chart = adapted_chart({"theta", "phi"}, {"psi"}, {"x", "y"},
                               {{-3.14159265358979, 3.14159265358979, false},
                                {0.15, 3.14159265358979 - 0.15, true},
                                {-3.14159265358979, 3.14159265358979, false},
                                {-2.0, 2.0, false},
                                {-2.0, 2.0, false}});
    sys->metric = field_matrix(5, 5);
    sys->metric(0, 0) = m * R * R;
    sys->metric(1, 1) = 2.0 * J1;
    sys->metric(2, 2) = J0;
    sys->metric(0, 2) = J0;
    sys->metric(2, 0) = J0;
    sys->metric(3, 3) = m;
    sys->metric(4, 4) = m;
    sys->potential = scalar_field(0.0);
    sys->connection = field_matrix(2, 3);
    sys->connection(0, 0) = scalar_field([R](const auto& q) {
        using nonholo::cos;
        using nonholo::sin;
        return R * cos(q[0]) * cos(q[1]) / sin(q[1]);
    });
    sys->connection(1, 0) = scalar_field([R](const auto& q) {
        using nonholo::cos;
        using nonholo::sin;
        return R * sin(q[0]) * cos(q[1]) / sin(q[1]);
    });
    coordinate_vector_field gen(3);
    gen.components[2] = scalar_field(1.0);
    sys->h_generators.push_back(gen);
    sys->h_abelian = true;
    return sys;
}

// ---------------------------------------------------------------------------
// chaplygin ball: ZXZ Euler angles, chart order (theta, psi | phi | x, y)
// ---------------------------------------------------------------------------

template <typename S>
std::array<S, 3> ball_gamma(const std::vector<S>& q) {
    using nonholo::cos;
    using nonholo::sin;
    return {sin(q[0]) * sin(q[1]), sin(q[0]) * cos(q[1]), cos(q[0])};
}

// Body angular velocity map: Omega = lam * (thetadot, psidot, phidot).
template <typename S>
matrix<S> ball_lambda(const std::vector<S>& q) {
    using nonholo::cos;
    using nonholo::sin;
    matrix<S> lam(3, 3);
    auto g = ball_gamma(q);
    lam(0, 0) = cos(q[1]);
    lam(1, 0) = -sin(q[1]);
    lam(2, 0) = S(0.0);
    lam(0, 1) = S(0.0);
    lam(1, 1) = S(0.0);
    lam(2, 1) = S(1.0);
    for (int i = 0; i < 3; ++i) lam(i, 2) = g[i];
    return lam;
}

// First two rows of the attitude matrix (third row is gamma).
template <typename S>
std::array<std::array<S, 3>, 2> ball_alpha_beta(const std::vector<S>& q) {
    using nonholo::cos;
    using nonholo::sin;
    S ct = cos(q[0]), st = sin(q[0]);
    S cp = cos(q[1]), sp = sin(q[1]);
    S cf = cos(q[2]), sf = sin(q[2]);
    std::array<S, 3> alpha = {cf * cp - sf * ct * sp, -cf * sp - sf * ct * cp, sf * st};
    std::array<S, 3> beta = {sf * cp + cf * ct * sp, -sf * sp + cf * ct * cp, -cf * st};
    return {alpha, beta};
}

template <typename S>
std::array<S, 3> cross3(const std::array<S, 3>& a, const std::array<S, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <typename S, typename T>
S dot3(const std::array<S, 3>& a, const T& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// Body momentum coordinates from chart momenta: solves lam^T K = p.
template <typename S>
std::array<S, 3> ball_k_from_p(const matrix<S>& lam, const std::vector<S>& p) {
    matrix<S> lt(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) lt(i, j) = lam(j, i);
    lu_factorization<S> lu(lt);
    std::vector<S> k = lu.solve(p);
    return {k[0], k[1], k[2]};
}

// Inverts K = (I + mr^2) Omega - mr^2 <gamma, Omega> gamma.
template <typename S>
std::array<S, 3> ball_omega_from_k(const std::array<S, 3>& k, const std::array<S, 3>& gamma,
                                   double m, double r, const std::array<double, 3>& inertia) {
    std::array<S, 3> ainv_k, ainv_g;
    for (int i = 0; i < 3; ++i) {
        double ai = inertia[i] + m * r * r;
        ainv_k[i] = k[i] / ai;
        ainv_g[i] = gamma[i] / ai;
    }
    S u = S(1.0) - m * r * r * dot3(gamma, ainv_g);
    S go = dot3(gamma, ainv_k) / u;
    std::array<S, 3> omega;
    for (int i = 0; i < 3; ++i)
        omega[i] = ainv_k[i] + m * r * r * go * gamma[i] / (inertia[i] + m * r * r);
    return omega;
}

// Coefficient of dq^a wedge dq^b in lam_i wedge lam_j (rows of lam as forms).
template <typename S>
S lam_wedge(const matrix<S>& lam, int i, int j, int a, int b) {
    return lam(i, a) * lam(j, b) - lam(i, b) * lam(j, a);
}

std::shared_ptr<mechanical_system> ball_system(double m, double r,
                                               const std::array<double, 3>& inertia) {
    auto sys = std::make_shared<mechanical_system>();
    sys->chart = adapted_chart({"theta", "psi"}, {"phi"}, {"x", "y"},
                               {{0.15, 1.5707963267948966 - 0.15, true},
                                {-3.14159265358979, 3.14159265358979, false},
                                {-3.14159265358979, 3.14159265358979, false},
                                {-2.0, 2.0, false},
                                {-2.0, 2.0, false}});
    sys->metric = field_matrix(5, 5);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            sys->metric(i, j) = scalar_field([i, j, inertia](const auto& q) {
                using S = std::decay_t<decltype(q[0])>;
                matrix<S> lam = ball_lambda(q);
                S v(0.0);
                for (int k = 0; k < 3; ++k) v += inertia[k] * lam(k, i) * lam(k, j);
                return v;
            });
    sys->metric(3, 3) = m;
    sys->metric(4, 4) = m;
    sys->potential = scalar_field(0.0);
    sys->connection = field_matrix(2, 3);
    for (int col = 0; col < 3; ++col) {
        sys->connection(0, col) = scalar_field([col, r](const auto& q) {
            using S = std::decay_t<decltype(q[0])>;
            matrix<S> lam = ball_lambda(q);
            auto rows = ball_alpha_beta(q);
            S v(0.0);
            for (int k = 0; k < 3; ++k) v += rows[1][k] * lam(k, col);
            return -r * v;
        });
        sys->connection(1, col) = scalar_field([col, r](const auto& q) {
            using S = std::decay_t<decltype(q[0])>;
            matrix<S> lam = ball_lambda(q);
            auto rows = ball_alpha_beta(q);
            S v(0.0);
            for (int k = 0; k < 3; ++k) v += rows[0][k] * lam(k, col);
            return r * v;
        });
    }
    sys->connection_h_invariant = false;  // rolling coefficients depend on phi
    coordinate_vector_field gen(3);
    gen.components[2] = scalar_field(1.0);
    sys->h_generators.push_back(gen);
    sys->h_abelian = true;
    return sys;
}

// ---------------------------------------------------------------------------
// se2 toy
// ---------------------------------------------------------------------------

std::shared_ptr<mechanical_system> se2_system() {
    auto sys = std::make_shared<mechanical_system>();
    std::vector<coordinate_range> ranges(7);
    for (auto& rr : ranges) rr = {-1.5, 1.5, false};
    ranges[0] = {-3.14159265358979, 3.14159265358979, false};
    ranges[4] = {-3.14159265358979, 3.14159265358979, false};
    sys->chart = adapted_chart({"x1", "x2"}, {"y", "z", "w"}, {"u", "v"}, ranges);
    sys->metric = field_matrix(7, 7);
    sys->metric(0, 0) = 1.0;
    sys->metric(1, 1) = 2.0;
    sys->metric(2, 2) = 1.0;
    sys->metric(3, 3) = 1.0;
    sys->metric(4, 4) = 1.0;
    sys->metric(5, 5) = 1.0;
    sys->metric(6, 6) = 1.0;
    auto cy = scalar_field([](const auto& q) {
        using nonholo::cos;
        return 2.0 * cos(q[4]);
    });
    auto sz = scalar_field([](const auto& q) {
        using nonholo::sin;
        return 2.0 * sin(q[4]);
    });
    sys->metric(2, 4) = cy;
    sys->metric(4, 2) = cy;
    sys->metric(3, 4) = sz;
    sys->metric(4, 3) = sz;
    sys->potential = scalar_field(0.0);
    sys->connection = field_matrix(2, 5);
    sys->connection(0, 1) = scalar_field([](const auto& q) {
        using nonholo::cos;
        return -(1.0 + cos(q[0]));
    });
    sys->connection(1, 1) = scalar_field([](const auto& q) {
        using nonholo::sin;
        return -sin(q[0]);
    });
    sys->metric_h_invariant = false;  // symmetry acts by rotation, not coordinate shift
    sys->metric_definite = false;     // cross coupling makes the h block indefinite
    coordinate_vector_field e1(5), e2(5), e3(5);
    e1.components[2] = scalar_field(1.0);
    e2.components[3] = scalar_field(1.0);
    e3.components[2] = scalar_field([](const auto& q) { return -q[3]; });
    e3.components[3] = scalar_field([](const auto& q) { return q[2]; });
    e3.components[4] = scalar_field(1.0);
    sys->h_generators.push_back(e1);
    sys->h_generators.push_back(e2);
    sys->h_generators.push_back(e3);
    sys->h_abelian = false;
    sys->structure_constants.assign(3, std::vector<std::vector<double>>(3, {0.0, 0.0, 0.0}));
    sys->structure_constants[0][2][1] = 1.0;
    sys->structure_constants[2][0][1] = -1.0;
    sys->structure_constants[1][2][0] = -1.0;
    sys->structure_constants[2][1][0] = 1.0;
    return sys;
}

}  // namespace

model_bundle snakeboard(double m, double J, double J0, double J1, double R) {
    require_positive({{"m", m}, {"J", J}, {"J0", J0}, {"J1", J1}, {"R", R}});
    model_bundle b;
    b.name = "snakeboard";
    b.parameters = {{"m", m}, {"J", J}, {"J0", J0}, {"J1", J1}, {"R", R}};
    if (std::abs(J + J0 + 2.0 * J1 - m * R * R) > 1e-12)
        b.warnings.push_back("inertia relation J + J0 + 2 J1 = m R^2 violated; "
                             "closed-form reference functions assume it");
    b.system = snakeboard_system(m, J0, J1, R);
    b.default_state = {0.3, 3.14159265358979 / 3.0, 0.0, 0.9, -0.3, 0.2};
    b.default_mu = {0.2};

    double mr2 = m * R * R;
    auto coupling = [mr2, J0](double phi) {
        double s = std::sin(phi);
        return mr2 * (std::cos(phi) / s) / (mr2 - J0 * s * s);
    };
    b.oracles["jk_coefficients"] = {oracle_input::compressed_cotangent,
                                    [coupling](const std::vector<double>& z) {
                                        double g = coupling(z[1]);
                                        return std::vector<double>{-g * (z[3] - z[5]), 0.0, 0.0};
                                    }};
    b.oracles["hamiltonian"] = {
        oracle_input::compressed_cotangent, [mr2, J0, J1](const std::vector<double>& z) {
            double s = std::sin(z[1]), d = z[3] - z[5];
            return std::vector<double>{d * d * s * s / (2.0 * (mr2 - J0 * s * s)) +
                                       z[5] * z[5] / (2.0 * J0) + z[4] * z[4] / (4.0 * J1)};
        }};
    b.oracles["conserved"] = {oracle_input::compressed_cotangent,
                              [](const std::vector<double>& z) {
                                  return std::vector<double>{z[5]};
                              }};
    b.oracles["accelerations"] = {
        oracle_input::compressed_cotangent,
        [mr2, J0, J1, coupling](const std::vector<double>& z) {
            double s = std::sin(z[1]);
            double thdot = (z[3] - z[5]) * s * s / (mr2 - J0 * s * s);
            double phdot = z[4] / (2.0 * J1);
            double thdd = coupling(z[1]) * thdot * phdot;
            return std::vector<double>{thdd, 0.0, -thdd};
        }};
    b.oracles["conformal_factor"] = {oracle_input::position,
                                     [mr2, J0](const std::vector<double>& q) {
                                         double s = std::sin(q[1]);
                                         return std::vector<double>{
                                             s / std::sqrt(mr2 - J0 * s * s)};
                                     }};
    b.oracles["reduced_lagrangian"] = {
        oracle_input::compressed_tangent, [mr2, J0, J1](const std::vector<double>& in) {
            double s = std::sin(in[1]);
            double th = in[3], ph = in[4], ps = in[5];
            return std::vector<double>{0.5 * mr2 / (s * s) * th * th + 0.5 * J0 * ps * ps +
                                       J0 * ps * th + J1 * ph * ph};
        }};
    b.oracles["bracket_entry"] = {oracle_input::leaf, [coupling](const std::vector<double>& xp) {
                                      return std::vector<double>{coupling(xp[1]) * xp[2]};
                                  }};
    double mu = b.default_mu[0];
    b.oracles["amended_potential"] = {oracle_input::position,
                                      [mu, J0](const std::vector<double>&) {
                                          return std::vector<double>{mu * mu / (2.0 * J0)};
                                      }};
    return b;
}

model_bundle chaplygin_ball(double m, double r, double I1, double I2, double I3) {
    require_positive({{"m", m}, {"r", r}, {"I1", I1}, {"I2", I2}, {"I3", I3}});
    model_bundle b;
    b.name = "chaplygin-ball";
    b.parameters = {{"m", m}, {"r", r}, {"I1", I1}, {"I2", I2}, {"I3", I3}};
    std::array<double, 3> inertia = {I1, I2, I3};
    b.system = ball_system(m, r, inertia);
    b.default_mu = {0.37};

    // chart state and momenta from Omega = (0.1, -0.15, 0.5); this initial
    // body velocity keeps theta inside the chart guard band for tens of
    // time units, so long conservation runs do not hit the singularity
    {
        std::vector<double> q{0.8, 0.55, 0.3};
        auto gam = ball_gamma(q);
        auto lam = ball_lambda(q);
        std::array<double, 3> om = {0.1, -0.15, 0.5};
        double go = dot3(gam, om);
        std::vector<double> p(3);
        std::array<double, 3> k;
        for (int i = 0; i < 3; ++i) k[i] = (inertia[i] + m * r * r) * om[i] - m * r * r * go * gam[i];
        for (int j = 0; j < 3; ++j) p[j] = lam(0, j) * k[0] + lam(1, j) * k[1] + lam(2, j) * k[2];
        b.default_state = {q[0], q[1], q[2], p[0], p[1], p[2]};
    }

    // momentum-curvature pairing, pairs (theta,psi), (theta,phi), (psi,phi)
    auto jk_closed = [m, r, inertia](const std::vector<double>& z) {
        std::vector<double> q(z.begin(), z.begin() + 3), p(z.begin() + 3, z.end());
        auto gam = ball_gamma(q);
        auto lam = ball_lambda(q);
        auto k = ball_k_from_p(lam, p);
        auto om = ball_omega_from_k(k, gam, m, r, inertia);
        double go = dot3(gam, om);
        double r2m = r * r * m;
        std::vector<double> out(3);
        const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
        for (int t = 0; t < 3; ++t) {
            int a = pairs[t][0], bb = pairs[t][1];
            double v = om[0] * lam_wedge(lam, 1, 2, a, bb) + om[1] * lam_wedge(lam, 2, 0, a, bb) +
                       om[2] * lam_wedge(lam, 0, 1, a, bb);
            out[t] = -r2m * v;
        }
        // gamma . dgamma x dgamma = -sin(theta) dtheta wedge dpsi
        out[0] += r2m * go * (-std::sin(q[0]));
        return out;
    };
    b.oracles["jk_coefficients"] = {oracle_input::compressed_cotangent, jk_closed};
    b.oracles["hamiltonian"] = {oracle_input::compressed_cotangent,
                                [m, r, inertia](const std::vector<double>& z) {
                                    std::vector<double> q(z.begin(), z.begin() + 3),
                                        p(z.begin() + 3, z.end());
                                    auto gam = ball_gamma(q);
                                    auto lam = ball_lambda(q);
                                    auto k = ball_k_from_p(lam, p);
                                    auto om = ball_omega_from_k(k, gam, m, r, inertia);
                                    return std::vector<double>{0.5 * dot3(k, om)};
                                }};
    b.oracles["conserved"] = {oracle_input::compressed_cotangent,
                              [m, r, inertia](const std::vector<double>& z) {
                                  std::vector<double> q(z.begin(), z.begin() + 3),
                                      p(z.begin() + 3, z.end());
                                  auto gam = ball_gamma(q);
                                  auto lam = ball_lambda(q);
                                  auto k = ball_k_from_p(lam, p);
                                  return std::vector<double>{dot3(gam, k)};
                              }};
    b.oracles["conformal_factor"] = {
        oracle_input::position, [m, r, inertia](const std::vector<double>& q) {
            auto gam = ball_gamma(q);
            double s = 0.0;
            for (int i = 0; i < 3; ++i) s += gam[i] * gam[i] / (inertia[i] + m * r * r);
            return std::vector<double>{1.0 / std::sqrt(1.0 - m * r * r * s)};
        }};
    b.oracles["reduced_lagrangian"] = {
        oracle_input::compressed_tangent, [m, r, inertia](const std::vector<double>& in) {
            std::vector<double> q(in.begin(), in.begin() + 3), v(in.begin() + 3, in.end());
            auto gam = ball_gamma(q);
            auto lam = ball_lambda(q);
            std::array<double, 3> om = {0.0, 0.0, 0.0};
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) om[i] += lam(i, j) * v[j];
            double go = dot3(gam, om);
            double e = -0.5 * m * r * r * go * go;
            for (int i = 0; i < 3; ++i) e += 0.5 * (inertia[i] + m * r * r) * om[i] * om[i];
            return std::vector<double>{e};
        }};
    double mu = b.default_mu[0];
    b.oracles["amended_potential"] = {oracle_input::position,
                                      [mu, inertia](const std::vector<double>& q) {
                                          auto gam = ball_gamma(q);
                                          double ig = inertia[0] * gam[0] * gam[0] +
                                                      inertia[1] * gam[1] * gam[1] +
                                                      inertia[2] * gam[2] * gam[2];
                                          return std::vector<double>{mu * mu / (2.0 * ig)};
                                      }};
    // standalone leaf two-form pieces on dtheta wedge dpsi at level mu:
    // [0] residual-symmetry piece, [1] gauge piece
    b.oracles["leaf_pieces"] = {
        oracle_input::leaf, [m, r, inertia, mu](const std::vector<double>& xp) {
            std::vector<double> q{xp[0], xp[1], 0.0};
            auto gam = ball_gamma(q);
            auto lam = ball_lambda(q);
            double ig = inertia[0] * gam[0] * gam[0] + inertia[1] * gam[1] * gam[1] +
                        inertia[2] * gam[2] * gam[2];
            // quotient metric kbar = lam^T (A - mr^2 gamma gamma^T) lam
            matrix<double> kbar(3, 3);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    double v = 0.0;
                    for (int a = 0; a < 3; ++a)
                        for (int bidx = 0; bidx < 3; ++bidx) {
                            double ghat = (a == bidx ? inertia[a] + m * r * r : 0.0) -
                                          m * r * r * gam[a] * gam[bidx];
                            v += lam(a, i) * ghat * lam(bidx, j);
                        }
                    kbar(i, j) = v;
                }
            // shape block Schur complement and leaf velocities
            matrix<double> ks(2, 2);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) ks(i, j) = kbar(i, j) - kbar(i, 2) * kbar(j, 2) / ig;
            double det = ks(0, 0) * ks(1, 1) - ks(0, 1) * ks(1, 0);
            double xd0 = (ks(1, 1) * xp[2] - ks(0, 1) * xp[3]) / det;
            double xd1 = (ks(0, 0) * xp[3] - ks(1, 0) * xp[2]) / det;
            double phid = (mu - kbar(2, 0) * xd0 - kbar(2, 1) * xd1) / ig;
            std::array<double, 3> om = {0.0, 0.0, 0.0};
            double qd[3] = {xd0, xd1, phid};
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) om[i] += lam(i, j) * qd[j];
            auto gxo = cross3(gam, om);
            double g3 = gam[2];
            double gam1c = gxo[1] / (g3 * ig), gam2c = -gxo[0] / (g3 * ig);
            double eps12 = -std::tan(q[0]) / (ig * ig);  // ebar1 wedge ebar2 on dtheta wedge dpsi
            double i_gam_sq = inertia[0] * inertia[0] * gam[0] * gam[0] +
                              inertia[1] * inertia[1] * gam[1] * gam[1] +
                              inertia[2] * inertia[2] * gam[2] * gam[2];
            double beta_coeff = mu * (inertia[0] + inertia[1] + inertia[2] - 2.0 * i_gam_sq / ig) *
                                eps12;
            double gauge_coeff =
                m * r * r * ig *
                ((ig - inertia[0]) * gam[0] * gam1c + (ig - inertia[1]) * gam[1] * gam2c +
                 mu / ig) *
                eps12;
            return std::vector<double>{beta_coeff, gauge_coeff};
        }};

    // dynamical gauge two-form over the compressed phase space
    coordinate_form gauge(2, 6);
    const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (int t = 0; t < 3; ++t) {
        int a = pairs[t][0], bb = pairs[t][1];
        gauge.add_term({a, bb}, scalar_field([m, r, inertia, a, bb](const auto& z) {
                           using S = std::decay_t<decltype(z[0])>;
                           std::vector<S> q(z.begin(), z.begin() + 3);
                           std::vector<S> p(z.begin() + 3, z.end());
                           auto gam = ball_gamma(q);
                           matrix<S> lam = ball_lambda(q);
                           auto k = ball_k_from_p(lam, p);
                           auto om = ball_omega_from_k(k, gam, m, r, inertia);
                           S v = om[0] * lam_wedge(lam, 1, 2, a, bb) +
                                 om[1] * lam_wedge(lam, 2, 0, a, bb) +
                                 om[2] * lam_wedge(lam, 0, 1, a, bb);
                           return r * r * m * v;
                       }));
    }
    b.gauge = gauge;
    return b;
}

model_bundle se2_toy() {
    model_bundle b;
    b.name = "se2-toy";
    b.system = se2_system();
    b.default_state = {0.4, 0.2, 0.0, 0.0, 0.5, 0.3, 0.45, 1.0, 0.25, 0.0};
    b.default_mu = {1.0, 0.25, 0.0};

    auto kbar22 = [](double x1) { return 2.0 * (2.0 + std::cos(x1)); };
    // h-block inverse: adj/det for [[1,0,2c],[0,1,2s],[2c,2s,1]]
    auto hblock_solve = [](double w, const std::array<double, 3>& rhs) {
        double c = std::cos(w), s = std::sin(w);
        double det = -3.0;
        std::array<double, 3> out;
        out[0] = ((1.0 - 4.0 * s * s) * rhs[0] + 4.0 * s * c * rhs[1] - 2.0 * c * rhs[2]) / det;
        out[1] = (4.0 * s * c * rhs[0] + (1.0 - 4.0 * c * c) * rhs[1] - 2.0 * s * rhs[2]) / det;
        out[2] = (-2.0 * c * rhs[0] - 2.0 * s * rhs[1] + rhs[2]) / det;
        return out;
    };

    b.oracles["jk_coefficients"] = {oracle_input::compressed_cotangent,
                                    [kbar22](const std::vector<double>& z) {
                                        std::vector<double> out(10, 0.0);
                                        // pair (x1, x2) is first in lexicographic order
                                        out[0] = std::sin(z[0]) * z[6] / kbar22(z[0]);
                                        return out;
                                    }};
    b.oracles["hamiltonian"] = {
        oracle_input::compressed_cotangent, [kbar22, hblock_solve](const std::vector<double>& z) {
            std::array<double, 3> ph = {z[7], z[8], z[9]};
            auto vh = hblock_solve(z[4], ph);
            double e = 0.5 * (z[5] * z[5] + z[6] * z[6] / kbar22(z[0]));
            for (int i = 0; i < 3; ++i) e += 0.5 * ph[i] * vh[i];
            return std::vector<double>{e};
        }};
    b.oracles["conserved"] = {oracle_input::compressed_cotangent,
                              [](const std::vector<double>& z) {
                                  return std::vector<double>{z[7], z[8],
                                                             z[9] + z[2] * z[8] - z[3] * z[7]};
                              }};
    b.oracles["accelerations"] = {
        oracle_input::compressed_tangent, [kbar22, hblock_solve](const std::vector<double>& in) {
            double x1 = in[0], w = in[4];
            double x1d = in[5], x2d = in[6], wd = in[9];
            std::array<double, 3> rhs = {2.0 * std::sin(w) * wd * wd,
                                         -2.0 * std::cos(w) * wd * wd, 0.0};
            auto hdd = hblock_solve(w, rhs);
            return std::vector<double>{0.0, std::sin(x1) * x1d * x2d / kbar22(x1), hdd[0], hdd[1],
                                       hdd[2]};
        }};
    b.oracles["reduced_lagrangian"] = {
        oracle_input::compressed_tangent, [kbar22](const std::vector<double>& in) {
            double w = in[4];
            double l = 0.5 * (in[5] * in[5] + kbar22(in[0]) * in[6] * in[6] + in[7] * in[7] +
                              in[8] * in[8] + in[9] * in[9]);
            l += 2.0 * (std::sin(w) * in[8] + std::cos(w) * in[7]) * in[9];
            return std::vector<double>{l};
        }};
    // orbit-equation right-hand side at level (1, mu, 0): input (theta', z', mu)
    b.oracles["orbit_rhs"] = {oracle_input::custom, [](const std::vector<double>& in) {
                                  double th = in[0], zz = in[1], mu = in[2];
                                  double c = std::cos(th), s = std::sin(th);
                                  double thd = (2.0 * c + 2.0 * mu * s - zz) / 3.0;
                                  double zd = (2.0 / 3.0) * (zz * (s - mu * c) -
                                                             2.0 * (1.0 - mu * mu) * s * c -
                                                             2.0 * mu + 4.0 * mu * c * c);
                                  return std::vector<double>{thd, zd};
                              }};
    return b;
}

model_bundle make_model(const std::string& name) {
    if (name == "snakeboard") return snakeboard(1.0, 0.4, 0.4, 0.1, 1.0);
    if (name == "chaplygin-ball") return chaplygin_ball(1.0, 0.3, 1.0, 2.0, 3.0);
    if (name == "se2-toy") return se2_toy();
    throw std::invalid_argument("unknown model: " + name);
}

std::vector<std::string> model_names() { return {"snakeboard", "chaplygin-ball", "se2-toy"}; }

}  // namespace nonholo

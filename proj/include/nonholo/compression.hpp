/**
 * @file compression.hpp
 * @brief First reduction step: constraint-fiber elimination onto the quotient.
 */
#pragma once

#include <memory>
#include <vector>

#include "nonholo/forms.hpp"
#include "nonholo/system.hpp"

namespace nonholo {

// Mixed curvature coefficients of the constraint frame:
// c[B](al, be) = d A^B_al / d qbar^be + A^C_al d A^B_be / d s^C.
template <typename S>
std::vector<matrix<S>> curvature_c_at(const mechanical_system& sys, const std::vector<S>& q_full) {
    int m = sys.chart.qbar_dim(), w = sys.chart.n_gw();
    matrix<S> a = connection_at(sys, q_full);
    std::vector<matrix<S>> c(static_cast<size_t>(w), matrix<S>(m, m));
    for (int b = 0; b < w; ++b)
        for (int al = 0; al < m; ++al)
            for (int be = 0; be < m; ++be) {
                S v = partial(sys.connection(b, al), be)(q_full);
                for (int cc = 0; cc < w; ++cc)
                    v += a(cc, al) * partial(sys.connection(b, be), m + cc)(q_full);
                c[b](al, be) = v;
            }
    return c;
}

// Antisymmetrized curvature k[B] = c[B] - c[B]^T, exact by construction.
template <typename S>
std::vector<matrix<S>> curvature_k_at(const mechanical_system& sys, const std::vector<S>& q_full) {
    auto c = curvature_c_at(sys, q_full);
    std::vector<matrix<S>> k;
    k.reserve(c.size());
    for (const auto& cb : c) {
        matrix<S> kb(cb.rows(), cb.cols());
        for (int i = 0; i < cb.rows(); ++i)
            for (int j = 0; j < cb.cols(); ++j) kb(i, j) = cb(i, j) - cb(j, i);
        k.push_back(kb);
    }
    return k;
}

struct curvature_data {
    std::vector<matrix<double>> c;
    std::vector<matrix<double>> k;
};

// Curvature at a quotient (or full) configuration point.
curvature_data curvature(const mechanical_system& sys, const std::vector<double>& point);

// System after the quotient step: an almost-symplectic manifold of dimension
// 2 * qbar_dim with Hamiltonian dynamics twisted by the jk two-form.
struct compressed_system {
    std::shared_ptr<const mechanical_system> base;
    coordinate_form jk;        // momentum-curvature pairing, base differentials only
    coordinate_form omega;     // canonical two-form minus jk
    scalar_field hamiltonian;  // function of (qbar, p)
    int phase_dim = 0;
};

compressed_system compress(std::shared_ptr<const mechanical_system> base);

// Cotangent-side flow at z = (qbar, p): solves the interior-product equation
// of omega against dH.  Throws with a condition diagnostic when omega is
// numerically degenerate at z.
std::vector<double> compressed_vector_field(const compressed_system& cs,
                                            const std::vector<double>& z);

// Tangent-side accelerations from the forced Euler-Lagrange equations
// kbar rddot = dl/dr - (d_g kbar) rdot rdot - F, with F the curvature force.
std::vector<double> compressed_accelerations(const mechanical_system& sys,
                                             const std::vector<double>& qbar,
                                             const std::vector<double>& rdot);

// Restriction of the Lagrangian to the constraint distribution, as a function
// of quotient position and velocity.
double reduced_lagrangian(const mechanical_system& sys, const std::vector<double>& qbar,
                          const std::vector<double>& rdot);

}  // namespace nonholo

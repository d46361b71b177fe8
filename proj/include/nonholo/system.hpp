/**
 * @file system.hpp
 * @brief Mechanical systems with symmetry in adapted coordinates.
 */
#pragma once

#include <string>
#include <vector>

#include "nonholo/chart.hpp"
#include "nonholo/forms.hpp"
#include "nonholo/linalg.hpp"
#include "nonholo/scalarfield.hpp"

namespace nonholo {

enum class representation { tangent, cotangent };

// Point of a tangent or cotangent space.  position is either a full
// configuration (chart dim) or its first-reduction quotient (qbar_dim) with
// the constraint fiber eliminated; fiber holds frame velocities or momenta of
// matching length.
struct phase_state {
    std::vector<double> position;
    std::vector<double> fiber;
    representation repr = representation::cotangent;
};

// Rectangular array of coordinate functions.
class field_matrix {
public:
    field_matrix() = default;
    field_matrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols, scalar_field(0.0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    scalar_field& operator()(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const scalar_field& operator()(int i, int j) const {
        return entries_[static_cast<size_t>(i) * cols_ + j];
    }

    template <typename S>
    matrix<S> evaluate(const std::vector<S>& q) const {
        matrix<S> m(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j)(q);
        return m;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<scalar_field> entries_;
};

// Mechanical system with kinetic-minus-potential Lagrangian, constraints
// described by a connection on the gw fiber block, and a residual symmetry
// group acting on the quotient through h_generators.
struct mechanical_system {
    adapted_chart chart;
    field_matrix metric;      // n x n kinetic metric, functions of full q
    scalar_field potential;   // function of full q
    field_matrix connection;  // gw x qbar constraint coefficients A^A_alpha, functions of full q

    // Invariance flags assert coordinate independence of the coefficient
    // data; validate checks the corresponding partials only when set.
    bool metric_gw_invariant = true;
    bool metric_h_invariant = true;
    bool connection_gw_invariant = true;
    bool connection_h_invariant = true;
    // Kinetic matrix is positive definite (not assumed for toy models).
    bool metric_definite = true;

    std::vector<coordinate_vector_field> h_generators;  // fields over qbar positions
    bool h_abelian = true;
    // c[a][b][c]: coefficient of generator c in the bracket of generators (a, b)
    std::vector<std::vector<std::vector<double>>> structure_constants;
};

// Extends a quotient point with zero constraint-fiber coordinates.
template <typename S>
std::vector<S> pad_to_full(const mechanical_system& sys, const std::vector<S>& qbar) {
    std::vector<S> q = qbar;
    q.resize(sys.chart.dim(), S(0.0));
    return q;
}

template <typename S>
matrix<S> metric_at(const mechanical_system& sys, const std::vector<S>& q_full) {
    return sys.metric.evaluate(q_full);
}

template <typename S>
matrix<S> connection_at(const mechanical_system& sys, const std::vector<S>& q_full) {
    return sys.connection.evaluate(q_full);
}

// Kinetic metric restricted to the constraint frame, i.e. the quotient metric:
// kbar_ab = k_ab - A^C_a k_Cb - A^D_b k_aD + A^C_a A^D_b k_CD.
template <typename S>
matrix<S> kappa_bar(const mechanical_system& sys, const std::vector<S>& qbar) {
    int m = sys.chart.qbar_dim(), w = sys.chart.n_gw();
    std::vector<S> q = pad_to_full(sys, qbar);
    matrix<S> k = metric_at(sys, q);
    matrix<S> a = connection_at(sys, q);
    matrix<S> kb(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            S v = k(i, j);
            for (int c = 0; c < w; ++c) {
                v -= a(c, i) * k(m + c, j);
                v -= a(c, j) * k(i, m + c);
                for (int d = 0; d < w; ++d) v += a(c, i) * a(d, j) * k(m + c, m + d);
            }
            kb(i, j) = v;
        }
    return kb;
}

// Frame cross block pairing quotient directions with the constraint fiber:
// kcross_aB = k_aB - A^C_a k_CB.
template <typename S>
matrix<S> kappa_cross(const mechanical_system& sys, const std::vector<S>& qbar) {
    int m = sys.chart.qbar_dim(), w = sys.chart.n_gw();
    std::vector<S> q = pad_to_full(sys, qbar);
    matrix<S> k = metric_at(sys, q);
    matrix<S> a = connection_at(sys, q);
    matrix<S> kc(m, w);
    for (int i = 0; i < m; ++i)
        for (int b = 0; b < w; ++b) {
            S v = k(i, m + b);
            for (int c = 0; c < w; ++c) v -= a(c, i) * k(m + c, m + b);
            kc(i, b) = v;
        }
    return kc;
}

struct validation_report {
    bool passed = false;
    bool metric_spd = false;
    bool frame_full_rank = false;
    double min_metric_pivot = 0.0;
    double min_frame_pivot = 0.0;
    double max_metric_asymmetry = 0.0;
    double max_invariance_violation = 0.0;
    std::vector<std::string> failures;
};

// Samples the declared ranges and checks metric positivity, frame rank, and
// invariance of the coefficient data along the declared symmetry directions.
validation_report validate(const mechanical_system& sys, int samples, unsigned seed,
                           double tol = 1e-10);

// Fiber-wise Legendre transform; position block is passed through.
phase_state legendre(const mechanical_system& sys, const phase_state& state);
phase_state legendre_inverse(const mechanical_system& sys, const phase_state& state);

// Kinetic plus potential energy in either representation.
double energy(const mechanical_system& sys, const phase_state& state);

// Builds the connection block from raw constraint one-forms (rows over full
// dq, ordered like the gw fiber names) by a pointwise linear solve.
field_matrix connection_from_one_forms(const adapted_chart& chart,
                                       const std::vector<std::vector<scalar_field>>& rows);

}  // namespace nonholo

/**
 * @file forms.hpp
 * @brief Sparse coordinate differential forms of degree 0..3 and vector fields.
 */
#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "nonholo/linalg.hpp"
#include "nonholo/scalarfield.hpp"

namespace nonholo {

struct coordinate_vector_field {
    int dim = 0;
    std::vector<scalar_field> components;

    coordinate_vector_field() = default;
    explicit coordinate_vector_field(int d) : dim(d), components(d, scalar_field(0.0)) {}

    template <typename S>
    std::vector<S> evaluate(const std::vector<S>& point) const {
        std::vector<S> v(dim);
        for (int i = 0; i < dim; ++i) v[i] = components[i](point);
        return v;
    }
};

// Returns the parity sign of the permutation sorting idx, or 0 on a repeat.
int sort_index_tuple(std::vector<int>& idx);

// Antisymmetric k-form, k <= 3, stored as coefficients on strictly increasing
// index tuples; a missing tuple is a zero coefficient.
class coordinate_form {
public:
    coordinate_form() = default;
    coordinate_form(int degree, int dim);

    int degree() const { return degree_; }
    int dim() const { return dim_; }
    const std::map<std::vector<int>, scalar_field>& coefficients() const { return coeffs_; }

    // adds field on the tuple idx (any order; sign handled); repeats are dropped
    void add_term(std::vector<int> idx, const scalar_field& field);

    // coefficient on an arbitrary-order tuple, sign included
    scalar_field coefficient(std::vector<int> idx) const;

    template <typename S>
    S evaluate(const std::vector<S>& point, const std::vector<std::vector<S>>& args) const {
        if (static_cast<int>(args.size()) != degree_)
            throw std::invalid_argument("coordinate_form: argument count must equal degree");
        S total(0.0);
        for (const auto& [idx, field] : coeffs_) {
            S det = alternating_minor(idx, args);
            total += field(point) * det;
        }
        return total;
    }

    // antisymmetric matrix M[k][m] = form(e_k, e_m); degree-2 only
    template <typename S>
    matrix<S> two_form_matrix(const std::vector<S>& point) const {
        if (degree_ != 2) throw std::logic_error("two_form_matrix: degree 2 required");
        matrix<S> m(dim_, dim_);
        for (const auto& [idx, field] : coeffs_) {
            S v = field(point);
            m(idx[0], idx[1]) += v;
            m(idx[1], idx[0]) -= v;
        }
        return m;
    }

    double max_abs_coefficient(const std::vector<double>& point) const;

private:
    template <typename S>
    static S alternating_minor(const std::vector<int>& idx,
                               const std::vector<std::vector<S>>& args) {
        switch (idx.size()) {
            case 0:
                return S(1.0);
            case 1:
                return args[0][idx[0]];
            case 2:
                return args[0][idx[0]] * args[1][idx[1]] - args[0][idx[1]] * args[1][idx[0]];
            default: {
                S det(0.0);
                const int i = idx[0], j = idx[1], k = idx[2];
                det += args[0][i] * (args[1][j] * args[2][k] - args[1][k] * args[2][j]);
                det -= args[0][j] * (args[1][i] * args[2][k] - args[1][k] * args[2][i]);
                det += args[0][k] * (args[1][i] * args[2][j] - args[1][j] * args[2][i]);
                return det;
            }
        }
    }

    int degree_ = 0;
    int dim_ = 0;
    std::map<std::vector<int>, scalar_field> coeffs_;
};

coordinate_form exterior_derivative(const coordinate_form& form);
coordinate_form interior_product(const coordinate_vector_field& field, const coordinate_form& form);
coordinate_form wedge(const coordinate_form& a, const coordinate_form& b);
coordinate_form operator+(const coordinate_form& a, const coordinate_form& b);
coordinate_form operator-(const coordinate_form& a, const coordinate_form& b);
coordinate_form operator*(const scalar_field& f, const coordinate_form& a);

// one-form from a degree-0 function: (df)_i = partial_i f
coordinate_form differential(const scalar_field& f, int dim);

}  // namespace nonholo

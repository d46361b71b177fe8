/**
 * @file linalg.hpp
 * @brief Small dense matrices and LU factorization over plain or jet scalars.
 */
#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "nonholo/jet.hpp"

namespace nonholo {

template <typename T>
class matrix {
public:
    matrix() = default;
    matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, T(0.0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    static matrix identity(int n) {
        matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1.0);
        return m;
    }

    matrix transposed() const {
        matrix m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> data_;
};

template <typename T>
matrix<T> operator*(const matrix<T>& a, const matrix<T>& b) {
    matrix<T> c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            T aik = a(i, k);
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

template <typename T>
std::vector<T> operator*(const matrix<T>& a, const std::vector<T>& x) {
    std::vector<T> y(a.rows(), T(0.0));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

template <typename T>
T dot(const std::vector<T>& x, const std::vector<T>& y) {
    T s(0.0);
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

// Column-pivoted LU; pivot choice compares value parts so the factorization
// stays valid when T is a jet scalar.
template <typename T>
class lu_factorization {
public:
    explicit lu_factorization(matrix<T> a) : lu_(std::move(a)), perm_(lu_.rows()) {
        int n = lu_.rows();
        if (n != lu_.cols()) throw std::invalid_argument("lu: matrix must be square");
        for (int i = 0; i < n; ++i) perm_[i] = i;
        max_pivot_ = 0.0;
        min_pivot_ = 0.0;
        for (int k = 0; k < n; ++k) {
            int p = k;
            double best = std::abs(value(lu_(k, k)));
            for (int i = k + 1; i < n; ++i) {
                double cand = std::abs(value(lu_(i, k)));
                if (cand > best) {
                    best = cand;
                    p = i;
                }
            }
            if (p != k) {
                std::swap(perm_[p], perm_[k]);
                for (int j = 0; j < n; ++j) std::swap(lu_(p, j), lu_(k, j));
            }
            if (best == 0.0) throw std::runtime_error("lu: singular matrix");
            if (k == 0 || best > max_pivot_) max_pivot_ = best;
            if (k == 0 || best < min_pivot_) min_pivot_ = best;
            T inv = T(1.0) / lu_(k, k);
            for (int i = k + 1; i < n; ++i) {
                T m = lu_(i, k) * inv;
                lu_(i, k) = m;
                for (int j = k + 1; j < n; ++j) lu_(i, j) -= m * lu_(k, j);
            }
        }
    }

    // Ratio of extreme pivot magnitudes, a cheap conditioning proxy.
    double pivot_ratio() const { return max_pivot_ / min_pivot_; }
    double min_pivot() const { return min_pivot_; }
    double max_pivot() const { return max_pivot_; }

    std::vector<T> solve(const std::vector<T>& b) const {
        int n = lu_.rows();
        std::vector<T> x(n);
        for (int i = 0; i < n; ++i) x[i] = b[perm_[i]];
        for (int i = 1; i < n; ++i)
            for (int j = 0; j < i; ++j) x[i] -= lu_(i, j) * x[j];
        for (int i = n - 1; i >= 0; --i) {
            for (int j = i + 1; j < n; ++j) x[i] -= lu_(i, j) * x[j];
            x[i] /= lu_(i, i);
        }
        return x;
    }

    matrix<T> solve(const matrix<T>& b) const {
        matrix<T> x(b.rows(), b.cols());
        std::vector<T> col(b.rows());
        for (int j = 0; j < b.cols(); ++j) {
            for (int i = 0; i < b.rows(); ++i) col[i] = b(i, j);
            std::vector<T> s = solve(col);
            for (int i = 0; i < b.rows(); ++i) x(i, j) = s[i];
        }
        return x;
    }

    matrix<T> inverse() const { return solve(matrix<T>::identity(lu_.rows())); }

private:
    matrix<T> lu_;
    std::vector<int> perm_;
    double max_pivot_ = 0.0;
    double min_pivot_ = 0.0;
};

template <typename T>
std::vector<T> solve_linear(const matrix<T>& a, const std::vector<T>& b) {
    return lu_factorization<T>(a).solve(b);
}

}  // namespace nonholo

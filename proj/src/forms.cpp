#include "nonholo/forms.hpp"

#include <algorithm>
#include <cmath>

namespace nonholo {

int sort_index_tuple(std::vector<int>& idx) {
    int sign = 1;
    for (size_t i = 0; i + 1 < idx.size(); ++i)
        for (size_t j = 0; j + 1 < idx.size() - i; ++j)
            if (idx[j] > idx[j + 1]) {
                std::swap(idx[j], idx[j + 1]);
                sign = -sign;
            }
    for (size_t i = 0; i + 1 < idx.size(); ++i)
        if (idx[i] == idx[i + 1]) return 0;
    return sign;
}

coordinate_form::coordinate_form(int degree, int dim) : degree_(degree), dim_(dim) {
    if (degree < 0 || degree > 3) throw std::invalid_argument("coordinate_form: degree 0..3 only");
}

void coordinate_form::add_term(std::vector<int> idx, const scalar_field& field) {
    if (static_cast<int>(idx.size()) != degree_)
        throw std::invalid_argument("coordinate_form: tuple length must equal degree");
    for (int i : idx)
        if (i < 0 || i >= dim_) throw std::out_of_range("coordinate_form: index out of range");
    int sign = sort_index_tuple(idx);
    if (sign == 0) return;
    scalar_field signed_field = sign > 0 ? field : -field;
    auto it = coeffs_.find(idx);
    if (it == coeffs_.end())
        coeffs_.emplace(std::move(idx), signed_field);
    else
        it->second = it->second + signed_field;
}

scalar_field coordinate_form::coefficient(std::vector<int> idx) const {
    int sign = sort_index_tuple(idx);
    if (sign == 0) return scalar_field(0.0);
    auto it = coeffs_.find(idx);
    if (it == coeffs_.end()) return scalar_field(0.0);
    return sign > 0 ? it->second : -it->second;
}

double coordinate_form::max_abs_coefficient(const std::vector<double>& point) const {
    double mx = 0.0;
    for (const auto& [idx, field] : coeffs_) mx = std::max(mx, std::abs(field(point)));
    return mx;
}

coordinate_form exterior_derivative(const coordinate_form& form) {
    coordinate_form out(form.degree() + 1, form.dim());
    for (const auto& [idx, field] : form.coefficients())
        for (int t = 0; t < form.dim(); ++t) {
            std::vector<int> ext = idx;
            ext.insert(ext.begin(), t);
            out.add_term(std::move(ext), partial(field, t));
        }
    return out;
}

coordinate_form interior_product(const coordinate_vector_field& field,
                                 const coordinate_form& form) {
    if (form.degree() == 0) throw std::invalid_argument("interior_product: degree-0 form");
    coordinate_form out(form.degree() - 1, form.dim());
    for (const auto& [idx, coeff] : form.coefficients())
        for (size_t s = 0; s < idx.size(); ++s) {
            std::vector<int> rest;
            for (size_t t = 0; t < idx.size(); ++t)
                if (t != s) rest.push_back(idx[t]);
            scalar_field term = field.components[idx[s]] * coeff;
            out.add_term(std::move(rest), s % 2 == 0 ? term : -term);
        }
    return out;
}

coordinate_form wedge(const coordinate_form& a, const coordinate_form& b) {
    coordinate_form out(a.degree() + b.degree(), a.dim());
    for (const auto& [ia, fa] : a.coefficients())
        for (const auto& [ib, fb] : b.coefficients()) {
            std::vector<int> idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            out.add_term(std::move(idx), fa * fb);
        }
    return out;
}

coordinate_form operator+(const coordinate_form& a, const coordinate_form& b) {
    coordinate_form out = a;
    for (const auto& [idx, field] : b.coefficients()) out.add_term(idx, field);
    return out;
}

coordinate_form operator-(const coordinate_form& a, const coordinate_form& b) {
    coordinate_form out = a;
    for (const auto& [idx, field] : b.coefficients()) out.add_term(idx, -field);
    return out;
}

coordinate_form operator*(const scalar_field& f, const coordinate_form& a) {
    coordinate_form out(a.degree(), a.dim());
    for (const auto& [idx, field] : a.coefficients()) out.add_term(idx, f * field);
    return out;
}

coordinate_form differential(const scalar_field& f, int dim) {
    coordinate_form out(1, dim);
    for (int i = 0; i < dim; ++i) out.add_term({i}, partial(f, i));
    return out;
}

}  // namespace nonholo

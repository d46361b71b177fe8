#include "nonholo/compression.hpp"

#include <stdexcept>
#include <string>

namespace nonholo {

curvature_data curvature(const mechanical_system& sys, const std::vector<double>& point) {
    if (!sys.chart.in_range(point, 0.0))
        throw std::domain_error("curvature: point outside declared ranges");
    std::vector<double> q = pad_to_full(sys, point);
    return {curvature_c_at(sys, q), curvature_k_at(sys, q)};
}

compressed_system compress(std::shared_ptr<const mechanical_system> base) {
    int m = base->chart.qbar_dim();
    compressed_system cs;
    cs.base = base;
    cs.phase_dim = 2 * m;

    cs.jk = coordinate_form(2, 2 * m);
    for (int al = 0; al < m; ++al)
        for (int be = al + 1; be < m; ++be) {
            // evaluates only the curvature entries of this index pair: one
            // gradient per involved connection entry instead of the full tensor
            auto coeff = scalar_field([base, m, al, be](const auto& z) {
                using S = std::decay_t<decltype(z[0])>;
                int w = base->chart.n_gw();
                std::vector<S> qbar(z.begin(), z.begin() + m);
                std::vector<S> p(z.begin() + m, z.end());
                lu_factorization<S> lu(kappa_bar(*base, qbar));
                std::vector<S> rdot = lu.solve(p);
                matrix<S> kc = kappa_cross(*base, qbar);
                std::vector<S> q = pad_to_full(*base, qbar);
                matrix<S> a = connection_at(*base, q);
                S v(0.0);
                for (int b = 0; b < w; ++b) {
                    std::vector<S> g_al = field_gradient(base->connection(b, al), q);
                    std::vector<S> g_be = field_gradient(base->connection(b, be), q);
                    S c_albe = g_al[be], c_beal = g_be[al];
                    for (int cc = 0; cc < w; ++cc) {
                        c_albe += a(cc, al) * g_be[m + cc];
                        c_beal += a(cc, be) * g_al[m + cc];
                    }
                    S pw(0.0);
                    for (int g = 0; g < m; ++g) pw += rdot[g] * kc(g, b);
                    v += pw * (c_albe - c_beal);
                }
                return -v;
            });
            cs.jk.add_term({al, be}, coeff);
        }

    coordinate_form canonical(2, 2 * m);
    for (int al = 0; al < m; ++al) canonical.add_term({al, m + al}, scalar_field(1.0));
    cs.omega = canonical - cs.jk;

    cs.hamiltonian = scalar_field([base, m](const auto& z) {
        using S = std::decay_t<decltype(z[0])>;
        std::vector<S> qbar(z.begin(), z.begin() + m);
        std::vector<S> p(z.begin() + m, z.end());
        lu_factorization<S> lu(kappa_bar(*base, qbar));
        std::vector<S> rdot = lu.solve(p);
        S e(0.0);
        for (int i = 0; i < m; ++i) e += S(0.5) * p[i] * rdot[i];
        return e + base->potential(pad_to_full(*base, qbar));
    });
    return cs;
}

std::vector<double> compressed_vector_field(const compressed_system& cs,
                                            const std::vector<double>& z) {
    if (static_cast<int>(z.size()) != cs.phase_dim)
        throw std::invalid_argument("compressed_vector_field: wrong phase dimension");
    matrix<double> mform = cs.omega.two_form_matrix(z);
    std::vector<dual> zd = seed_point<dual>(z);
    dual h = cs.hamiltonian(zd);
    std::vector<double> rhs(z.size());
    for (size_t i = 0; i < z.size(); ++i) rhs[i] = -partial_or_zero(h, static_cast<int>(i));
    lu_factorization<double> lu(mform);
    if (lu.pivot_ratio() > 1e12)
        throw std::runtime_error("compressed two-form numerically degenerate, condition ratio " +
                                 std::to_string(lu.pivot_ratio()));
    return lu.solve(rhs);
}

std::vector<double> compressed_accelerations(const mechanical_system& sys,
                                             const std::vector<double>& qbar,
                                             const std::vector<double>& rdot) {
    int m = sys.chart.qbar_dim(), w = sys.chart.n_gw();
    std::vector<dual> qd = seed_point<dual>(qbar);
    matrix<dual> kbd = kappa_bar(sys, qd);
    dual u = sys.potential(pad_to_full(sys, qd));

    matrix<double> kb(m, m);
    std::vector<double> rhs(m, 0.0);
    for (int al = 0; al < m; ++al) {
        // dl/dr^al = half rdot^T (d_al kbar) rdot - d_al U
        double v = -partial_or_zero(u, al);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                v += 0.5 * partial_or_zero(kbd(i, j), al) * rdot[i] * rdot[j];
        // convective term (d_g kbar_{al,be}) rdot^g rdot^be
        for (int g = 0; g < m; ++g)
            for (int be = 0; be < m; ++be)
                v -= partial_or_zero(kbd(al, be), g) * rdot[g] * rdot[be];
        rhs[al] = v;
        for (int j = 0; j < m; ++j) kb(al, j) = value(kbd(al, j));
    }

    // curvature force F_al = pW_B K^B_{al,be} rdot^be with pW the constraint
    // fiber momenta of the constrained velocity
    matrix<double> kc = kappa_cross(sys, qbar);
    auto kk = curvature_k_at(sys, pad_to_full(sys, qbar));
    std::vector<double> pw(static_cast<size_t>(w), 0.0);
    for (int b = 0; b < w; ++b)
        for (int g = 0; g < m; ++g) pw[b] += kc(g, b) * rdot[g];
    for (int al = 0; al < m; ++al)
        for (int b = 0; b < w; ++b)
            for (int be = 0; be < m; ++be) rhs[al] -= pw[b] * kk[b](al, be) * rdot[be];

    lu_factorization<double> lu(kb);
    return lu.solve(rhs);
}

double reduced_lagrangian(const mechanical_system& sys, const std::vector<double>& qbar,
                          const std::vector<double>& rdot) {
    matrix<double> kb = kappa_bar(sys, qbar);
    return 0.5 * dot(rdot, kb * rdot) - sys.potential(pad_to_full(sys, qbar));
}

}  // namespace nonholo

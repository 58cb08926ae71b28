#include "bspde/series.hpp"

#include "bspde/errors.hpp"

#include <stdexcept>
#include <utility>

namespace bspde {

YPolynomial differentiate_y(const YPolynomial& p) {
    return p.derivative();
}

YPolynomial apply_L(int n, const YPolynomial& p) {
    if (n < 0) throw std::invalid_argument("apply_L: order must be non-negative");
    const YPolynomial dp = p.derivative();
    return dp.derivative() * Rational(2) + dp.times_y() - p * Rational(n + 1);
}

YPolynomial forcing_term(int n, const YPolynomial& f_prev, const YPolynomial& f_prev2,
                         const ParamSet& params) {
    if (n < 1) throw std::invalid_argument("forcing_term: order must be positive");
    if (n == 1 && !f_prev2.is_zero()) {
        throw std::invalid_argument("forcing_term: f_prev2 must be zero at order 1");
    }
    return f_prev.derivative() * (Rational(-2) * (params.k1 - 1)) +
           f_prev2 * (Rational(2) * params.k2);
}

YPolynomial solve_order(int n, const YPolynomial& g) {
    if (n < 0) throw std::invalid_argument("solve_order: order must be non-negative");
    if (g.is_zero()) return {};
    const int d = g.degree();
    std::vector<Rational> f(static_cast<std::size_t>(d) + 1);
    for (int m = d; m >= 0; --m) {
        // Coefficient of y^m in L_n[f] is (m - n - 1) f_m + 2 (m+2)(m+1) f_{m+2}.
        Rational required = g.coeff(m);
        if (m + 2 <= d) required -= Rational(2 * (m + 2) * (m + 1)) * f[m + 2];
        const int diagonal = m - n - 1;
        if (diagonal == 0) {
            if (required != 0) throw ResonanceError(n, m);
            // Minimal solution: no component along the degree-(n+1) kernel.
        } else {
            f[static_cast<std::size_t>(m)] = required / diagonal;
        }
    }
    return YPolynomial(std::move(f));
}

YPolynomial validate_initial(const YPolynomial& f0) {
    return apply_L(0, f0);
}

SeriesSolution expand(const YPolynomial& f0, int order, const ParamSet& params) {
    if (order < 0) throw std::invalid_argument("expand: order must be non-negative");
    const YPolynomial residual = validate_initial(f0);
    if (!residual.is_zero()) throw InadmissibleInitialError(residual.to_string());

    std::vector<YPolynomial> terms;
    terms.reserve(static_cast<std::size_t>(order) + 1);
    terms.push_back(f0);
    for (int n = 1; n <= order; ++n) {
        const YPolynomial& prev = terms[static_cast<std::size_t>(n - 1)];
        const YPolynomial prev2 =
            n >= 2 ? terms[static_cast<std::size_t>(n - 2)] : YPolynomial();
        terms.push_back(solve_order(n, forcing_term(n, prev, prev2, params)));
    }
    return SeriesSolution{params, std::move(terms)};
}

Rational evaluate(const SeriesSolution& s, const Rational& y, const Rational& z) {
    Rational acc(0);
    for (auto it = s.terms.rbegin(); it != s.terms.rend(); ++it) {
        acc = acc * z + it->evaluate(y);
    }
    return acc;
}

double evaluate(const SeriesSolution& s, double y, double z) {
    double acc = 0.0;
    for (auto it = s.terms.rbegin(); it != s.terms.rend(); ++it) {
        acc = acc * z + it->evaluate(y);
    }
    return acc;
}

BivariatePolynomial pde_residual(const SeriesSolution& s) {
    BivariatePolynomial u;
    for (int j = 0; j <= s.order(); ++j) {
        u += BivariatePolynomial::from_y_polynomial(s.terms[static_cast<std::size_t>(j)], j);
    }
    const BivariatePolynomial u_y = u.derivative_y();
    const BivariatePolynomial lhs = u.times_z().derivative_z();
    const BivariatePolynomial rhs = u_y.derivative_y() * Rational(2) + u_y.times_y() +
                                    u_y.times_z() * (Rational(2) * (s.params.k1 - 1)) -
                                    u.times_z(2) * (Rational(2) * s.params.k2);
    return lhs - rhs;
}

YPolynomial recurrence_defect(const SeriesSolution& s, int n) {
    if (n < 0 || n > s.order()) throw std::invalid_argument("recurrence_defect: order out of range");
    const YPolynomial& fn = s.terms[static_cast<std::size_t>(n)];
    const YPolynomial fp = n >= 1 ? s.terms[static_cast<std::size_t>(n - 1)] : YPolynomial();
    const YPolynomial fp2 = n >= 2 ? s.terms[static_cast<std::size_t>(n - 2)] : YPolynomial();
    const YPolynomial dfn = fn.derivative();
    return fn * Rational(n + 1) -
           (dfn.derivative() * Rational(2) + dfn.times_y() +
            fp.derivative() * (Rational(2) * (s.params.k1 - 1)) -
            fp2 * (Rational(2) * s.params.k2));
}

} // namespace bspde

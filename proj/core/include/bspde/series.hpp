#ifndef BSPDE_SERIES_HPP
#define BSPDE_SERIES_HPP

#include "bspde/bivariate.hpp"
#include "bspde/params.hpp"
#include "bspde/ypoly.hpp"

#include <vector>

namespace bspde {

/// Truncated power-series solution u(y,z) = sum f_j(y) z^j, j = 0..order.
struct SeriesSolution {
    ParamSet params;
    std::vector<YPolynomial> terms; // f_0 .. f_N by order

    int order() const { return static_cast<int>(terms.size()) - 1; }
    bool operator==(const SeriesSolution& other) const = default;
};

YPolynomial differentiate_y(const YPolynomial& p);

/// The order-n operator L_n[p] = 2 p'' + y p' - (n+1) p. On the monomial y^m
/// it acts as (m - n - 1) y^m + 2 m (m-1) y^(m-2), so it is triangular over
/// dense coefficients with diagonal entry m - n - 1.
YPolynomial apply_L(int n, const YPolynomial& p);

/// Right-hand side g_n = -2 (k1 - 1) f_{n-1}' + 2 k2 f_{n-2} of L_n[f_n] = g_n.
/// Callers pass the zero polynomial for negative-order terms; in particular
/// f_prev2 must be zero when n = 1.
YPolynomial forcing_term(int n, const YPolynomial& f_prev, const YPolynomial& f_prev2,
                         const ParamSet& params);

/// Solves L_n[f] = g by back-substitution from the highest degree down and
/// returns the minimal solution: the unique one with zero coefficient at
/// degree n+1, where L_n's polynomial kernel lives. Throws ResonanceError if
/// the zero diagonal at degree n+1 meets a nonzero required coefficient.
YPolynomial solve_order(int n, const YPolynomial& g);

/// Residual L_0[f0] of the order-0 constraint; the zero polynomial means f0
/// is admissible. Among polynomials the kernel of L_0 is span{y}.
YPolynomial validate_initial(const YPolynomial& f0);

/// Computes f_0..f_N. Throws InadmissibleInitialError when validate_initial
/// is nonzero; propagates ResonanceError.
SeriesSolution expand(const YPolynomial& f0, int order, const ParamSet& params);

/// Horner evaluation in z; exact for rational arguments.
Rational evaluate(const SeriesSolution& s, const Rational& y, const Rational& z);
double evaluate(const SeriesSolution& s, double y, double z);

/// Symbolic PDE residual of the truncated series:
///   R = d/dz(z u) - [2 u_yy + y u_y + 2(k1-1) z u_y - 2 k2 z^2 u].
/// When every order satisfies the recurrence, R collapses to the tail
///   [-2(k1-1) f_N' + 2 k2 f_{N-1}] z^(N+1) + 2 k2 f_N z^(N+2).
BivariatePolynomial pde_residual(const SeriesSolution& s);

/// Exact defect (n+1) f_n - [2 f_n'' + y f_n' + 2(k1-1) f_{n-1}' - 2 k2 f_{n-2}]
/// of the recurrence at order n (0 <= n <= order); zero when satisfied.
YPolynomial recurrence_defect(const SeriesSolution& s, int n);

} // namespace bspde

#endif // BSPDE_SERIES_HPP

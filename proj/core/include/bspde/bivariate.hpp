#ifndef BSPDE_BIVARIATE_HPP
#define BSPDE_BIVARIATE_HPP

#include "bspde/rational.hpp"
#include "bspde/ypoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace bspde {

/// Sparse polynomial in (y, z) with exact rational coefficients, keyed by
/// (y-degree, z-degree). Zero coefficients are never stored, so iteration
/// order and equality are canonical.
class BivariatePolynomial {
public:
    using Key = std::pair<int, int>; // (y degree, z degree)
    using TermMap = std::map<Key, Rational>;

    BivariatePolynomial() = default;

    /// p(y) * z^z_degree.
    static BivariatePolynomial from_y_polynomial(const YPolynomial& p, int z_degree = 0);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// Adds c * y^ydeg * z^zdeg, erasing the entry if it cancels to zero.
    void add_term(int ydeg, int zdeg, const Rational& c);

    const Rational& coeff(int ydeg, int zdeg) const;
    /// Coefficient of z^zdeg as a polynomial in y.
    YPolynomial z_coefficient(int zdeg) const;

    BivariatePolynomial derivative_y() const;
    BivariatePolynomial derivative_z() const;
    BivariatePolynomial times_y() const;
    BivariatePolynomial times_z(int power = 1) const;

    /// Definite integral from 0 to z: y^a z^b -> y^a z^(b+1) / (b+1).
    BivariatePolynomial integrate_z() const;
    /// Decrements every z-degree; throws DivisionByZError on a z-degree-0 term.
    BivariatePolynomial divide_by_z() const;

    Rational evaluate(const Rational& y, const Rational& z) const;
    double evaluate(double y, double z) const;

    std::optional<int> min_z_degree() const;
    std::optional<int> max_z_degree() const;
    /// Largest numerator bit length over all coefficients (0 when zero).
    int max_abs_numerator_bits() const;

    BivariatePolynomial operator-() const;
    BivariatePolynomial& operator+=(const BivariatePolynomial& other);
    BivariatePolynomial& operator-=(const BivariatePolynomial& other);
    BivariatePolynomial& operator*=(const Rational& scalar);

    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
        return a += b;
    }
    friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) {
        return a -= b;
    }
    friend BivariatePolynomial operator*(BivariatePolynomial p, const Rational& s) {
        return p *= s;
    }
    friend BivariatePolynomial operator*(const Rational& s, BivariatePolynomial p) {
        return p *= s;
    }

    bool operator==(const BivariatePolynomial& other) const { return terms_ == other.terms_; }

    std::string to_string() const;

private:
    TermMap terms_;
};

/// Free-function forms of the z-calculus used by the ADM identity.
inline BivariatePolynomial integrate_z(const BivariatePolynomial& p) { return p.integrate_z(); }
inline BivariatePolynomial divide_by_z(const BivariatePolynomial& p) { return p.divide_by_z(); }

} // namespace bspde

#endif // BSPDE_BIVARIATE_HPP

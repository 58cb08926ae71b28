#ifndef BSPDE_YPOLY_HPP
#define BSPDE_YPOLY_HPP

#include "bspde/rational.hpp"

#include <string>
#include <vector>

namespace bspde {

/// Dense univariate polynomial in y with exact rational coefficients.
/// Trailing zero coefficients are trimmed; the zero polynomial has degree -1.
class YPolynomial {
public:
    YPolynomial() = default;
    explicit YPolynomial(std::vector<Rational> coefficients);

    static YPolynomial monomial(int degree, Rational coefficient);
    /// The identity profile y (coefficients [0, 1]).
    static YPolynomial y();

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of y^k; zero outside the stored range.
    const Rational& coeff(int k) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    YPolynomial derivative() const;
    /// Multiplication by the monomial y (degree shift by one).
    YPolynomial times_y() const;

    Rational evaluate(const Rational& y) const;
    double evaluate(double y) const;

    YPolynomial operator-() const;
    YPolynomial& operator+=(const YPolynomial& other);
    YPolynomial& operator-=(const YPolynomial& other);
    YPolynomial& operator*=(const Rational& scalar);

    friend YPolynomial operator+(YPolynomial a, const YPolynomial& b) { return a += b; }
    friend YPolynomial operator-(YPolynomial a, const YPolynomial& b) { return a -= b; }
    friend YPolynomial operator*(YPolynomial p, const Rational& s) { return p *= s; }
    friend YPolynomial operator*(const Rational& s, YPolynomial p) { return p *= s; }

    bool operator==(const YPolynomial& other) const { return coeffs_ == other.coeffs_; }

    /// Human-readable form, e.g. "-1/2*y^2 + 3" ("0" for the zero polynomial).
    std::string to_string() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

} // namespace bspde

#endif // BSPDE_YPOLY_HPP

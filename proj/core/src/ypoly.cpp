#include "bspde/ypoly.hpp"

#include <utility>

namespace bspde {

YPolynomial::YPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
    trim();
}

YPolynomial YPolynomial::monomial(int degree, Rational coefficient) {
    if (coefficient == 0) return {};
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    c.back() = std::move(coefficient);
    return YPolynomial(std::move(c));
}

YPolynomial YPolynomial::y() {
    return monomial(1, Rational(1));
}

const Rational& YPolynomial::coeff(int k) const {
    static const Rational zero(0);
    if (k < 0 || k > degree()) return zero;
    return coeffs_[static_cast<std::size_t>(k)];
}

YPolynomial YPolynomial::derivative() const {
    if (degree() < 1) return {};
    std::vector<Rational> c(coeffs_.size() - 1);
    for (std::size_t m = 1; m < coeffs_.size(); ++m) {
        c[m - 1] = coeffs_[m] * static_cast<int>(m);
    }
    return YPolynomial(std::move(c));
}

YPolynomial YPolynomial::times_y() const {
    if (is_zero()) return {};
    std::vector<Rational> c(coeffs_.size() + 1);
    for (std::size_t m = 0; m < coeffs_.size(); ++m) c[m + 1] = coeffs_[m];
    return YPolynomial(std::move(c));
}

Rational YPolynomial::evaluate(const Rational& y) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * y + *it;
    }
    return acc;
}

double YPolynomial::evaluate(double y) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * y + to_double(*it);
    }
    return acc;
}

YPolynomial YPolynomial::operator-() const {
    YPolynomial r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

YPolynomial& YPolynomial::operator+=(const YPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t m = 0; m < other.coeffs_.size(); ++m) coeffs_[m] += other.coeffs_[m];
    trim();
    return *this;
}

YPolynomial& YPolynomial::operator-=(const YPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t m = 0; m < other.coeffs_.size(); ++m) coeffs_[m] -= other.coeffs_[m];
    trim();
    return *this;
}

YPolynomial& YPolynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

std::string YPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int m = degree(); m >= 0; --m) {
        const Rational& c = coeffs_[static_cast<std::size_t>(m)];
        if (c == 0) continue;
        if (!out.empty()) {
            out += (c > 0) ? " + " : " - ";
        } else if (c < 0) {
            out += "-";
        }
        const Rational mag = abs(c);
        if (mag != 1 || m == 0) out += format_rational(mag);
        if (m > 0) {
            if (mag != 1) out += "*";
            out += (m == 1) ? "y" : "y^" + std::to_string(m);
        }
    }
    return out;
}

void YPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

} // namespace bspde

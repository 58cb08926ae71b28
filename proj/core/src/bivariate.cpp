#include "bspde/bivariate.hpp"

#include "bspde/errors.hpp"

#include <algorithm>
#include <cmath>

namespace bspde {

BivariatePolynomial BivariatePolynomial::from_y_polynomial(const YPolynomial& p, int z_degree) {
    BivariatePolynomial out;
    for (int m = 0; m <= p.degree(); ++m) {
        if (p.coeff(m) != 0) out.terms_[{m, z_degree}] = p.coeff(m);
    }
    return out;
}

void BivariatePolynomial::add_term(int ydeg, int zdeg, const Rational& c) {
    if (c == 0) return;
    const Key key{ydeg, zdeg};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

const Rational& BivariatePolynomial::coeff(int ydeg, int zdeg) const {
    static const Rational zero(0);
    auto it = terms_.find({ydeg, zdeg});
    return it == terms_.end() ? zero : it->second;
}

YPolynomial BivariatePolynomial::z_coefficient(int zdeg) const {
    YPolynomial out;
    for (const auto& [key, c] : terms_) {
        if (key.second == zdeg) out += YPolynomial::monomial(key.first, c);
    }
    return out;
}

BivariatePolynomial BivariatePolynomial::derivative_y() const {
    BivariatePolynomial out;
    for (const auto& [key, c] : terms_) {
        if (key.first > 0) out.terms_[{key.first - 1, key.second}] = c * key.first;
    }
    return out;
}

BivariatePolynomial BivariatePolynomial::derivative_z() const {
    BivariatePolynomial out;
    for (const auto& [key, c] : terms_) {
        if (key.second > 0) out.terms_[{key.first, key.second - 1}] = c * key.second;
    }
    return out;
}

BivariatePolynomial BivariatePolynomial::times_y() const {
    BivariatePolynomial out;
    for (const auto& [key, c] : terms_) out.terms_[{key.first + 1, key.second}] = c;
    return out;
}

BivariatePolynomial BivariatePolynomial::times_z(int power) const {
    BivariatePolynomial out;
    for (const auto& [key, c] : terms_) out.terms_[{key.first, key.second + power}] = c;
    return out;
}

BivariatePolynomial BivariatePolynomial::integrate_z() const {
    BivariatePolynomial out;
    for (const auto& [key, c] : terms_) {
        out.terms_[{key.first, key.second + 1}] = c / (key.second + 1);
    }
    return out;
}

BivariatePolynomial BivariatePolynomial::divide_by_z() const {
    BivariatePolynomial out;
    for (const auto& [key, c] : terms_) {
        if (key.second < 1) throw DivisionByZError();
        out.terms_[{key.first, key.second - 1}] = c;
    }
    return out;
}

Rational BivariatePolynomial::evaluate(const Rational& y, const Rational& z) const {
    Rational acc(0);
    for (const auto& [key, c] : terms_) {
        Rational term = c;
        for (int a = 0; a < key.first; ++a) term *= y;
        for (int b = 0; b < key.second; ++b) term *= z;
        acc += term;
    }
    return acc;
}

double BivariatePolynomial::evaluate(double y, double z) const {
    double acc = 0.0;
    for (const auto& [key, c] : terms_) {
        acc += to_double(c) * std::pow(y, key.first) * std::pow(z, key.second);
    }
    return acc;
}

std::optional<int> BivariatePolynomial::min_z_degree() const {
    std::optional<int> best;
    for (const auto& [key, c] : terms_) {
        if (!best || key.second < *best) best = key.second;
    }
    return best;
}

std::optional<int> BivariatePolynomial::max_z_degree() const {
    std::optional<int> best;
    for (const auto& [key, c] : terms_) {
        if (!best || key.second > *best) best = key.second;
    }
    return best;
}

int BivariatePolynomial::max_abs_numerator_bits() const {
    int bits = 0;
    for (const auto& [key, c] : terms_) bits = std::max(bits, numerator_bits(c));
    return bits;
}

BivariatePolynomial BivariatePolynomial::operator-() const {
    BivariatePolynomial out(*this);
    for (auto& [key, c] : out.terms_) c = -c;
    return out;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& other) {
    for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, c);
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& other) {
    for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, -c);
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, c] : terms_) c *= scalar;
    return *this;
}

std::string BivariatePolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [key, c] : terms_) {
        if (!out.empty()) {
            out += (c > 0) ? " + " : " - ";
        } else if (c < 0) {
            out += "-";
        }
        const Rational mag = abs(c);
        const bool has_var = key.first > 0 || key.second > 0;
        if (mag != 1 || !has_var) out += format_rational(mag);
        bool star = mag != 1;
        if (key.first > 0) {
            if (star) out += "*";
            out += (key.first == 1) ? "y" : "y^" + std::to_string(key.first);
            star = true;
        }
        if (key.second > 0) {
            if (star) out += "*";
            out += (key.second == 1) ? "z" : "z^" + std::to_string(key.second);
        }
    }
    return out;
}

} // namespace bspde

#include "bspde/rational.hpp"

#include "bspde/errors.hpp"

#include <cctype>

namespace bspde {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Int parse_integer(std::string_view s, std::string_view full) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw ConfigError("invalid rational literal: '" + std::string(full) + "'");
    }
    Int v(std::string(s));
    return negative ? Int(-v) : v;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    const Int num = parse_integer(text.substr(0, slash), text);
    const std::string_view den_part = text.substr(slash + 1);
    if (den_part.empty() || den_part.front() == '-' || den_part.front() == '+' ||
        !all_digits(den_part)) {
        throw ConfigError("invalid rational literal: '" + std::string(text) + "'");
    }
    const Int den(std::string(den_part));
    if (den == 0) {
        throw ConfigError("zero denominator in rational literal: '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

std::string format_rational(const Rational& value) {
    const Int num = numerator(value);
    const Int den = denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

double to_double(const Rational& value) {
    return value.convert_to<double>();
}

int numerator_bits(const Rational& value) {
    const Int num = abs(numerator(value));
    if (num == 0) return 0;
    return static_cast<int>(msb(num)) + 1;
}

} // namespace bspde

#include "psdrank/rational.hpp"

#include "psdrank/errors.hpp"

#include <cctype>

namespace psdrank {

std::string to_string(const Rational& r) {
    return r.str();
}

std::string to_string(const Integer& n) {
    return n.str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Integer parse_unsigned(std::string_view s, std::string_view original) {
    if (!all_digits(s)) throw ParseError("not an integer: '" + std::string(original) + "'");
    return Integer(std::string(s));
}

}  // namespace

Integer parse_integer(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    Integer value = parse_unsigned(body, text);
    return negative ? -value : value;
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    const Integer num = parse_integer(text.substr(0, slash));
    const std::string_view den_text = text.substr(slash + 1);
    const Integer den = parse_unsigned(den_text, text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

int sign_of(const Rational& r) {
    return r.sign();
}

bool is_integer(const Rational& r) {
    return denominator(r) == 1;
}

}  // namespace psdrank

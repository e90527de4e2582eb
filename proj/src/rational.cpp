#include "timealign/rational.hpp"

#include "timealign/errors.hpp"

#include <cctype>
#include <ostream>

namespace timealign {

namespace {

bool all_digits(std::string_view text) {
    if (text.empty()) return false;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

/// A decimal digit string as an integer. cpp_int's own string constructor
/// would read a leading zero as an octal prefix.
BigInt from_digits(std::string_view digits) {
    std::size_t first = digits.find_first_not_of('0');
    if (first == std::string_view::npos) return BigInt(0);
    return BigInt{std::string(digits.substr(first))};
}

[[noreturn]] void bad_literal(std::string_view text) {
    throw parse_error("not an exact rational literal: '" + std::string(text) + "'");
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw std::invalid_argument("rational with zero denominator");
    if (den.sign() < 0) {
        value_ = boost::multiprecision::cpp_rational(-num, -den);
    } else {
        value_ = boost::multiprecision::cpp_rational(num, den);
    }
}

Rational Rational::operator-() const {
    Rational result;
    result.value_ = -value_;
    return result;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }
    if (rest.empty()) bad_literal(text);

    Rational magnitude;
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
        std::string_view num = rest.substr(0, slash);
        std::string_view den = rest.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad_literal(text);
        BigInt d = from_digits(den);
        if (d.is_zero()) bad_literal(text);
        magnitude = Rational(from_digits(num), d);
    } else {
        std::string_view whole = rest;
        std::string_view frac;
        if (auto dot = rest.find('.'); dot != std::string_view::npos) {
            whole = rest.substr(0, dot);
            frac = rest.substr(dot + 1);
            if (frac.find('.') != std::string_view::npos) bad_literal(text);
        }
        if (whole.empty() && frac.empty()) bad_literal(text);
        if (!whole.empty() && !all_digits(whole)) bad_literal(text);
        if (!frac.empty() && !all_digits(frac)) bad_literal(text);
        std::string digits = std::string(whole) + std::string(frac);
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        magnitude = Rational(from_digits(digits), scale);
    }
    return negative ? -magnitude : magnitude;
}

std::string Rational::fraction_str() const {
    std::string result = numerator().str();
    if (!is_integer()) {
        result += '/';
        result += denominator().str();
    }
    return result;
}

std::optional<std::string> Rational::decimal_str() const {
    BigInt den = denominator();
    unsigned twos = 0;
    unsigned fives = 0;
    while (den % 2 == 0) { den /= 2; ++twos; }
    while (den % 5 == 0) { den /= 5; ++fives; }
    if (den != 1) return std::nullopt;

    unsigned places = std::max(twos, fives);
    BigInt scaled = numerator();
    for (unsigned i = twos; i < places; ++i) scaled *= 2;
    for (unsigned i = fives; i < places; ++i) scaled *= 5;

    if (scaled.sign() < 0) scaled = -scaled;
    std::string digits = scaled.str();
    if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');

    std::string result;
    if (sign() < 0) result += '-';
    result += digits.substr(0, digits.size() - places);
    if (places > 0) {
        std::string frac = digits.substr(digits.size() - places);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) {
            result += '.';
            result += frac;
        }
    }
    return result;
}

std::string Rational::str() const {
    if (auto dec = decimal_str()) return *dec;
    return fraction_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
    return os << value.str();
}

}  // namespace timealign

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace timealign {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number.
///
/// All timestamps, move magnitudes and costs in this library are exact
/// rationals: the algorithms branch on sign tests and magnitude comparisons,
/// and those branches must never be decided by rounding noise. The value is
/// kept in canonical form (reduced, denominator > 0) at all times.
class Rational {
public:
    Rational() = default;
    Rational(long long value) : value_(value) {}  // NOLINT: implicit by design
    Rational(const BigInt& num, const BigInt& den);

    /// Parses an exact literal: an optional sign followed by either a finite
    /// decimal ("3", "-0.25", "4.") or a fraction ("7/2", "-1/3").
    /// Throws parse_error on anything else.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    int sign() const { return value_.sign(); }
    bool is_zero() const { return value_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
    friend bool operator!=(const Rational& lhs, const Rational& rhs) { return lhs.value_ != rhs.value_; }
    friend bool operator<(const Rational& lhs, const Rational& rhs) { return lhs.value_ < rhs.value_; }
    friend bool operator<=(const Rational& lhs, const Rational& rhs) { return lhs.value_ <= rhs.value_; }
    friend bool operator>(const Rational& lhs, const Rational& rhs) { return lhs.value_ > rhs.value_; }
    friend bool operator>=(const Rational& lhs, const Rational& rhs) { return lhs.value_ >= rhs.value_; }

    /// "p/q"; just "p" for integers.
    std::string fraction_str() const;

    /// Exact finite decimal rendering, available iff the denominator is of
    /// the form 2^a * 5^b. Parsing the result gives back the same value.
    std::optional<std::string> decimal_str() const;

    /// Canonical exact rendering: the finite decimal when one exists,
    /// otherwise the fraction.
    std::string str() const;

    friend Rational abs(Rational value) {
        if (value.sign() < 0) value.value_ = -value.value_;
        return value;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& value);

private:
    boost::multiprecision::cpp_rational value_;
};

}  // namespace timealign

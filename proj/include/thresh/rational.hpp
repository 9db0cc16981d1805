#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace thresh {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Unlike the raw GMP type, division
/// by zero throws ZeroDenominator instead of trapping.
class Rational {
public:
    Rational() = default;
    Rational(int v) : value_(v) {}
    Rational(long v) : value_(v) {}
    Rational(long long v) : value_(static_cast<long>(v)) {}
    Rational(unsigned v) : value_(v) {}
    Rational(unsigned long v) : value_(v) {}
    Rational(const BigInt& v) : value_(v) {}
    Rational(const BigInt& num, const BigInt& den);
    Rational(long num, long den);
    explicit Rational(const mpq_class& v) : value_(v) { value_.canonicalize(); }

    /// Exact binary value of a finite double.
    static Rational from_double(double v);

    /// Parses "p/q", an integer, or a decimal literal such as "-0.125" or "1e-3".
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }

    double to_double() const { return value_.get_d(); }
    std::string to_string() const { return value_.get_str(); }
    const mpq_class& gmp() const { return value_; }

    /// Largest integer not exceeding the value.
    BigInt floor() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class value_;
};

Rational abs(const Rational& r);
Rational pow(const Rational& base, unsigned exponent);
Rational factorial(unsigned n);

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace thresh

template <>
struct std::hash<thresh::Rational> {
    std::size_t operator()(const thresh::Rational& r) const noexcept
    {
        return std::hash<std::string>{}(r.to_string());
    }
};

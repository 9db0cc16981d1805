#include "thresh/rational.hpp"

#include "thresh/errors.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <string>

namespace thresh {

Rational::Rational(const BigInt& num, const BigInt& den)
{
    if (den == 0) {
        throw ZeroDenominator("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational Rational::from_double(double v)
{
    if (!std::isfinite(v)) {
        throw DomainError("cannot convert a non-finite double to Rational");
    }
    return Rational(mpq_class(v));
}

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole)
{
    if (digits.empty()) {
        throw ParseError("malformed number '" + std::string(whole) + "'");
    }
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ParseError("malformed number '" + std::string(whole) + "'");
        }
    }
    return BigInt(std::string(digits), 10);
}

BigInt power_of_ten(unsigned long e)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    const std::string_view whole = text;
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    Rational result;
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const BigInt num = parse_integer(text.substr(0, slash), whole);
        const BigInt den = parse_integer(text.substr(slash + 1), whole);
        if (den == 0) {
            throw ZeroDenominator("zero denominator in '" + std::string(whole) + "'");
        }
        result = Rational(num, den);
    } else {
        long exponent = 0;
        if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
            std::string_view exp_text = text.substr(e + 1);
            bool exp_negative = false;
            if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
                exp_negative = exp_text.front() == '-';
                exp_text.remove_prefix(1);
            }
            const BigInt e_val = parse_integer(exp_text, whole);
            if (!e_val.fits_slong_p() || abs(e_val) > 100000) {
                throw ParseError("exponent out of range in '" + std::string(whole) + "'");
            }
            exponent = e_val.get_si() * (exp_negative ? -1 : 1);
            text = text.substr(0, e);
        }
        std::string digits;
        if (const auto dot = text.find('.'); dot != std::string_view::npos) {
            const std::string_view int_part = text.substr(0, dot);
            const std::string_view frac_part = text.substr(dot + 1);
            if (int_part.empty() && frac_part.empty()) {
                throw ParseError("malformed number '" + std::string(whole) + "'");
            }
            digits = std::string(int_part) + std::string(frac_part);
            exponent -= static_cast<long>(frac_part.size());
        } else {
            digits = std::string(text);
        }
        const BigInt mantissa = parse_integer(digits, whole);
        if (exponent >= 0) {
            result = Rational(BigInt(mantissa * power_of_ten(static_cast<unsigned long>(exponent))));
        } else {
            result = Rational(mantissa, power_of_ten(static_cast<unsigned long>(-exponent)));
        }
    }
    return negative ? -result : result;
}

BigInt Rational::floor() const
{
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) {
        throw ZeroDenominator("division by zero");
    }
    value_ /= o.value_;
    return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, unsigned exponent)
{
    Rational result = 1;
    for (unsigned i = 0; i < exponent; ++i) {
        result *= base;
    }
    return result;
}

Rational factorial(unsigned n)
{
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

} // namespace thresh

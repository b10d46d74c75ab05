#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hodgepoly {

using BigInt = mpz_class;

// Exact rational number, always held in lowest terms with a positive
// denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(const BigInt& value) : value_(value) {}
    Rational(const BigInt& numerator, const BigInt& denominator);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return cmp(lhs.value_, rhs.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        return cmp(lhs.value_, rhs.value_) <=> 0;
    }

    Rational pow(unsigned exponent) const;

    // "p/q", or "p" alone when q = 1.
    std::string to_string() const;

    // Strict inverse of to_string(): rejects non-canonical spellings such as
    // "2/4", "1/-3", "+5", "3/1" or "-0".
    static Rational parse(std::string_view text);

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

// (2k+1)!! = 1 * 3 * 5 * ... * (2k+1)
BigInt double_factorial_odd(unsigned k);

// Bernoulli number B_index for even index >= 2, with B_2 = 1/6.
Rational bernoulli(int index);

}  // namespace hodgepoly

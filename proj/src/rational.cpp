#include "hodgepoly/rational.hpp"

#include <mutex>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace hodgepoly {

Rational::Rational(const BigInt& numerator, const BigInt& denominator) : value_(numerator, denominator) {
    if (denominator == 0) throw std::domain_error("rational with zero denominator");
    value_.canonicalize();
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::pow(unsigned exponent) const {
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
    Rational r;
    r.value_ = mpq_class(num, den);  // already coprime
    return r;
}

std::string Rational::to_string() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

namespace {

bool is_canonical_natural(std::string_view digits) {
    if (digits.empty()) return false;
    for (char c : digits)
        if (c < '0' || c > '9') return false;
    return digits.size() == 1 || digits.front() != '0';
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    auto fail = [&] { return std::invalid_argument("not a canonical rational: '" + std::string(text) + "'"); };

    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!is_canonical_natural(den) || den == "0" || den == "1") throw fail();
    }
    std::string_view magnitude = num;
    if (!magnitude.empty() && magnitude.front() == '-') magnitude.remove_prefix(1);
    if (!is_canonical_natural(magnitude)) throw fail();
    if (magnitude == "0" && (num.front() == '-' || !den.empty())) throw fail();

    BigInt n(std::string(num), 10);
    BigInt d = den.empty() ? BigInt(1) : BigInt(std::string(den), 10);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (g != 1) throw fail();
    return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned n, unsigned k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt double_factorial_odd(unsigned k) {
    BigInt r = 1;
    for (unsigned m = 3; m <= 2 * k + 1; m += 2) r *= m;
    return r;
}

Rational bernoulli(int index) {
    if (index < 2 || index % 2 != 0)
        throw std::invalid_argument("bernoulli: index must be even and >= 2, got " + std::to_string(index));

    // sum_{j=0}^{m} C(m+1, j) B_j = 0, B_0 = 1
    static std::mutex mutex;
    static std::vector<Rational> table{Rational(1)};
    std::lock_guard lock(mutex);
    for (auto m = static_cast<unsigned>(table.size()); m <= static_cast<unsigned>(index); ++m) {
        Rational sum;
        for (unsigned j = 0; j < m; ++j) sum += Rational(binomial(m + 1, j)) * table[j];
        table.push_back(-sum / Rational(static_cast<long>(m + 1)));
    }
    return table[static_cast<std::size_t>(index)];
}

}  // namespace hodgepoly

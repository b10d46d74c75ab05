#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "hodgepoly/rational.hpp"

namespace hodgepoly {

// Dense univariate polynomial over the rationals. Trailing zeros are never
// stored, so the zero polynomial has no coefficients and degree() == -1.
class UniPoly {
public:
    static constexpr int zero_degree = -1;

    UniPoly() = default;
    UniPoly(Rational constant);
    explicit UniPoly(std::vector<Rational> coefficients);

    static UniPoly monomial(Rational coefficient, int exponent);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    Rational coeff(int exponent) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational evaluate(const Rational& x) const;
    // p(scale * x + shift)
    UniPoly compose_affine(const Rational& scale, const Rational& shift) const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& rhs);
    UniPoly& operator-=(const UniPoly& rhs);
    UniPoly& operator*=(const UniPoly& rhs);
    UniPoly& operator*=(const Rational& rhs);

    friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
    friend UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }
    friend UniPoly operator*(UniPoly lhs, const UniPoly& rhs) { return lhs *= rhs; }
    friend UniPoly operator*(UniPoly lhs, const Rational& rhs) { return lhs *= rhs; }
    friend UniPoly operator*(const Rational& lhs, UniPoly rhs) { return rhs *= lhs; }
    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Sparse polynomial in two variables t and alpha. Keys are
// (t exponent, alpha exponent); zero coefficients are never stored and
// iteration is lexicographic in the key.
class BiPoly {
public:
    using Exponents = std::pair<int, int>;
    using Terms = std::map<Exponents, Rational>;

    BiPoly() = default;
    BiPoly(Rational constant);

    static BiPoly monomial(Rational coefficient, int t_exponent, int alpha_exponent);
    // sum_k t^k * coefficients[k](alpha)
    static BiPoly from_t_coefficients(const std::vector<UniPoly>& coefficients);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(int t_exponent, int alpha_exponent) const;
    void add_term(int t_exponent, int alpha_exponent, const Rational& coefficient);

    int degree_t() const;
    int degree_alpha() const;
    int total_degree() const;

    // Coefficient of t^k as a polynomial in alpha.
    UniPoly t_coefficient(int t_exponent) const;

    BiPoly derivative_t() const;
    // alpha -> scale * alpha + shift
    BiPoly substitute_alpha(const Rational& scale, const Rational& shift) const;
    // alpha -> value; result is alpha-free
    BiPoly evaluate_alpha(const Rational& value) const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& rhs);
    BiPoly& operator-=(const BiPoly& rhs);
    BiPoly& operator*=(const Rational& rhs);

    friend BiPoly operator+(BiPoly lhs, const BiPoly& rhs) { return lhs += rhs; }
    friend BiPoly operator-(BiPoly lhs, const BiPoly& rhs) { return lhs -= rhs; }
    friend BiPoly operator*(BiPoly lhs, const Rational& rhs) { return lhs *= rhs; }
    friend BiPoly operator*(const Rational& lhs, BiPoly rhs) { return rhs *= lhs; }
    friend BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs);
    friend bool operator==(const BiPoly&, const BiPoly&) = default;

private:
    Terms terms_;
};

// Power series in t truncated after t^order, with coefficients that are
// polynomials in alpha.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    TruncatedSeries(int order, std::vector<UniPoly> coefficients);

    int order() const { return order_; }
    const UniPoly& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    UniPoly& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
    const std::vector<UniPoly>& coefficients() const { return coeffs_; }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    int order_;
    std::vector<UniPoly> coeffs_;
};

// exp(linear_coeff * t) truncated at t^order.
TruncatedSeries series_exp(const Rational& linear_coeff, int order);

// Cauchy product truncated at the common order; throws on mismatched orders.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace hodgepoly

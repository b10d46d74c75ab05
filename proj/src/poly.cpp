#include "hodgepoly/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hodgepoly {

// ---- UniPoly ---------------------------------------------------------------

UniPoly::UniPoly(Rational constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::monomial(Rational coefficient, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    std::vector<Rational> c(static_cast<std::size_t>(exponent) + 1);
    c.back() = std::move(coefficient);
    return UniPoly(std::move(c));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UniPoly::coeff(int exponent) const {
    if (exponent < 0 || exponent > degree()) return Rational();
    return coeffs_[static_cast<std::size_t>(exponent)];
}

Rational UniPoly::evaluate(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::compose_affine(const Rational& scale, const Rational& shift) const {
    UniPoly inner(std::vector<Rational>{shift, scale});
    UniPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= inner;
        acc += UniPoly(*it);
    }
    return acc;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) { return *this += -rhs; }

UniPoly& UniPoly::operator*=(const UniPoly& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& rhs) {
    for (auto& c : coeffs_) c *= rhs;
    trim();
    return *this;
}

// ---- BiPoly ----------------------------------------------------------------

BiPoly::BiPoly(Rational constant) { add_term(0, 0, constant); }

BiPoly BiPoly::monomial(Rational coefficient, int t_exponent, int alpha_exponent) {
    BiPoly p;
    p.add_term(t_exponent, alpha_exponent, coefficient);
    return p;
}

BiPoly BiPoly::from_t_coefficients(const std::vector<UniPoly>& coefficients) {
    BiPoly p;
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
        const auto& c = coefficients[k].coefficients();
        for (std::size_t j = 0; j < c.size(); ++j) p.add_term(static_cast<int>(k), static_cast<int>(j), c[j]);
    }
    return p;
}

Rational BiPoly::coeff(int t_exponent, int alpha_exponent) const {
    auto it = terms_.find({t_exponent, alpha_exponent});
    return it == terms_.end() ? Rational() : it->second;
}

void BiPoly::add_term(int t_exponent, int alpha_exponent, const Rational& coefficient) {
    if (t_exponent < 0 || alpha_exponent < 0) throw std::invalid_argument("negative exponent in BiPoly");
    if (coefficient.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({t_exponent, alpha_exponent}, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int BiPoly::degree_t() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first);
    return d;
}

int BiPoly::degree_alpha() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.second);
    return d;
}

int BiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
    return d;
}

UniPoly BiPoly::t_coefficient(int t_exponent) const {
    std::vector<Rational> c;
    for (auto it = terms_.lower_bound({t_exponent, 0}); it != terms_.end() && it->first.first == t_exponent; ++it) {
        auto j = static_cast<std::size_t>(it->first.second);
        if (c.size() <= j) c.resize(j + 1);
        c[j] = it->second;
    }
    return UniPoly(std::move(c));
}

BiPoly BiPoly::derivative_t() const {
    BiPoly d;
    for (const auto& [e, c] : terms_)
        if (e.first > 0) d.add_term(e.first - 1, e.second, c * Rational(e.first));
    return d;
}

BiPoly BiPoly::substitute_alpha(const Rational& scale, const Rational& shift) const {
    std::vector<UniPoly> by_t(static_cast<std::size_t>(degree_t() + 1));
    for (std::size_t k = 0; k < by_t.size(); ++k)
        by_t[k] = t_coefficient(static_cast<int>(k)).compose_affine(scale, shift);
    return from_t_coefficients(by_t);
}

BiPoly BiPoly::evaluate_alpha(const Rational& value) const { return substitute_alpha(Rational(), value); }

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e.first, e.second, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e.first, e.second, -c);
    return *this;
}

BiPoly& BiPoly::operator*=(const Rational& rhs) {
    if (rhs.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= rhs;
    return *this;
}

BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs) {
    BiPoly out;
    for (const auto& [a, x] : lhs.terms_)
        for (const auto& [b, y] : rhs.terms_) out.add_term(a.first + b.first, a.second + b.second, x * y);
    return out;
}

// ---- TruncatedSeries -------------------------------------------------------

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries::TruncatedSeries(int order, std::vector<UniPoly> coefficients) : TruncatedSeries(order) {
    if (coefficients.size() != coeffs_.size())
        throw std::invalid_argument("series of order " + std::to_string(order) + " needs " +
                                    std::to_string(coeffs_.size()) + " coefficients");
    coeffs_ = std::move(coefficients);
}

TruncatedSeries series_exp(const Rational& linear_coeff, int order) {
    TruncatedSeries s(order);
    Rational term(1);
    for (int g = 0; g <= order; ++g) {
        if (g > 0) term = term * linear_coeff / Rational(g);
        s[g] = UniPoly(term);
    }
    return s;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series_mul: orders differ (" + std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()) + ")");
    TruncatedSeries out(a.order());
    for (int i = 0; i <= a.order(); ++i)
        for (int j = 0; i + j <= a.order(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace hodgepoly

#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hodgepoly/hodge.hpp"
#include "hodgepoly/poly.hpp"
#include "hodgepoly/rational.hpp"

namespace hodgepoly {

// Raised when a computed series contradicts a structural property the
// engine checks as it goes (polynomiality, monicity, alpha-independence).
// Such a failure means a bug in the engines below.
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a = (a_1, ..., a_n), n >= 0, a_i >= 0.
struct IndexVector {
    std::vector<int> entries;

    IndexVector() = default;
    IndexVector(std::vector<int> values);
    IndexVector(std::initializer_list<int> values) : IndexVector(std::vector<int>(values)) {}

    // "2,1" or "" for the empty vector.
    static IndexVector parse(std::string_view text);

    int size() const { return static_cast<int>(entries.size()); }
    int weight() const;
    int operator[](int i) const { return entries.at(static_cast<std::size_t>(i)); }
    // "(2,1)", "()"
    std::string to_string() const;

    friend bool operator==(const IndexVector&, const IndexVector&) = default;
};

// Every index vector with entries sorted descending, |a| <= max_weight and
// n <= max_length, ordered by weight, then length, then reverse-lexicographic.
std::vector<IndexVector> index_vectors(int max_weight, int max_length);

// Partitions of 0..max_weight (positive parts), ordered by weight and then
// reverse-lexicographically: the layout of the published table.
std::vector<IndexVector> table_index_vectors(int max_weight);

enum class Convention { alpha, alpha_shifted };
std::string_view to_string(Convention c);

// P_a(alpha, t), or P_a(-alpha-1, t) when the convention is alpha_shifted.
struct PPolynomial {
    IndexVector a;
    Convention convention = Convention::alpha;
    BiPoly poly;

    friend bool operator==(const PPolynomial&, const PPolynomial&) = default;
};

// prod_i (2a_i+1)!! (-4)^{a_i}
BigInt prefactor(const IndexVector& a);

// Lambda^v_g(1) Lambda^v_g(alpha) = sum_{k,j} sign * alpha^{alpha_power} lambda_k lambda_j
struct LambdaProductTerm {
    int k = 0;
    int j = 0;
    int sign = 1;
    int alpha_power = 0;
};
std::vector<LambdaProductTerm> lambda_product_expansion(int genus);

// alpha -> -alpha - 1; an involution that toggles the convention.
PPolynomial shift_convention(const PPolynomial& p);

// P_{(a,0)} = P_a - sum_i (8a_i+4) P_{a - e_i}. `family` must contain
// P_{a - e_i} for every i with a_i > 0, in p's convention.
PPolynomial string_apply(const PPolynomial& p, std::span<const PPolynomial> family);

// P_{(a,1)} = (t - 12n + 24) P_a - 24 t dP_a/dt, where n = |a| + 1 is the
// length of the target index vector.
PPolynomial dilaton_apply(const PPolynomial& p, int n);

// Closed-form t^0 coefficient of P_a.
Rational constant_term(const IndexVector& a);

struct ConjectureReport {
    int weight = 0;
    int max_total_degree = 0;
    bool holds = false;  // max_total_degree == weight
};
ConjectureReport conjecture_check(const PPolynomial& p);

class SeriesEngine {
public:
    explicit SeriesEngine(std::shared_ptr<HodgeEngine> hodge);

    // int_{M_{g,n+1}} prod psi_i^{a_i} Lambda^v_g(1) Lambda^v_g(alpha) / (1 - psi_0),
    // as a polynomial in alpha, before the prefactor.
    UniPoly double_hodge_coeff(int genus, const IndexVector& a);

    // prefactor(a) * sum_g t^g double_hodge_coeff(g, a) * exp(t/24), truncated
    // after t^order.
    TruncatedSeries assembled_series(const IndexVector& a, int order);

    // P_a in the alpha convention. Throws IntegrityError unless the
    // coefficients of t^{|a|+1} .. t^{|a|+guard} vanish and the t^{|a|}
    // coefficient is 1.
    PPolynomial assemble(const IndexVector& a, int guard = 2);

    UniPoly A_value(int genus, const IndexVector& a);

    // P_a(-1, t) from pure psi integrals only.
    PPolynomial mumford_specialize(const IndexVector& a, int guard = 2);

    // 1 + sum_{g>0} t^{2g} int_{M_{g,1}} Lambda^v_g(1) Lambda^v_g(alpha)/(1-psi_0),
    // truncated after t^order. Throws IntegrityError if a coefficient depends
    // on alpha.
    TruncatedSeries F_series(int order);

    HodgeEngine& hodge() { return *hodge_; }

private:
    std::shared_ptr<HodgeEngine> hodge_;
};

}  // namespace hodgepoly

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hodgepoly/cache.hpp"
#include "hodgepoly/psi.hpp"
#include "hodgepoly/rational.hpp"

namespace hodgepoly {

// Monomial in the Chern classes lambda_j of the Hodge bundle.
struct LambdaMonomial {
    std::map<int, int> exponents;  // j -> multiplicity, j >= 1

    static LambdaMonomial from_indices(std::span<const int> indices);
    std::vector<int> indices() const;  // each j repeated by its multiplicity
    int degree() const;
    bool empty() const { return exponents.empty(); }
};

// A monomial in the odd Chern characters ch_1, ch_3, ch_5, ... of the Hodge
// bundle, as a sorted multiset of indices.
using ChMonomial = std::vector<int>;
using ChPolynomial = std::map<ChMonomial, Rational>;

// Rewrites a lambda monomial in terms of odd Chern characters using
// c(E) = exp(sum_m (-1)^{m-1} (m-1)! ch_m) and ch_{2l}(E) = 0. Classes
// lambda_j with j > genus vanish and give the zero polynomial.
ChPolynomial lambda_to_ch(const LambdaMonomial& m, int genus);

// psi^a * kappa_{b_1} ... kappa_{b_r} * ch_{c_1} ... ch_{c_s} on M_{g,n},
// times a rational scalar. n is the length of psi.
struct TautMonomial {
    int genus = 0;
    std::vector<int> psi;
    std::vector<int> kappa;
    std::vector<int> ch;
    Rational scalar{1};

    int markings() const { return static_cast<int>(psi.size()); }
    int dimension() const { return 3 * genus - 3 + markings(); }
    int degree() const;
};

// One summand of the boundary part of Mumford's formula, already pulled back
// to the boundary and restricted to the dimension-compatible node powers.
struct BoundaryTerm {
    enum class Kind { irreducible, separating };

    Kind kind = Kind::irreducible;
    int split_genus = 0;           // genus of `first` for separating terms
    std::vector<int> subset;       // markings carried by `first` (separating)
    int node_power_first = 0;      // psi power on the node branch of `first`
    int node_power_second = 0;     // the other branch
    TautMonomial first;            // irreducible: the single (g-1, n+2) monomial
    TautMonomial second;           // separating only
    Rational scalar;
};

struct GrrExpansion {
    std::vector<TautMonomial> local;
    std::vector<BoundaryTerm> boundary;
};

// Replaces m.ch[chosen] = ch_{2l-1} by
//   B_{2l}/(2l)! [kappa_{2l-1} - sum_i psi_i^{2l-1}
//                 + 1/2 sum_xi xi_*(sum_{i+j=2l-2} (-1)^i psi'^i psi''^j)].
// Terms that vanish (Chern characters on a genus-zero side, node powers that
// cannot match the dimension) are omitted.
GrrExpansion grr_expand(const TautMonomial& m, std::size_t chosen);

// One kappa-removal step. Requires an empty ch multiset.
std::vector<TautMonomial> kappa_step(const TautMonomial& m);

// Repeats kappa_step until every term is kappa-free.
std::vector<TautMonomial> kappa_reduce(const TautMonomial& m);

enum class ExpansionOrder { largest_first, smallest_first, seeded_random };

struct HodgeOptions {
    ExpansionOrder order = ExpansionOrder::largest_first;
    std::uint64_t seed = 0;
};

// Integrals of psi/kappa/lambda monomials over M_{g,n}, reduced to pure psi
// integrals. Thread-safe; the internal memo and the shared cache tolerate
// concurrent evaluation.
class HodgeEngine {
public:
    HodgeEngine(std::shared_ptr<PsiEngine> psi, std::shared_ptr<IntegralCache> cache, HodgeOptions options = {});

    // Throws std::invalid_argument for unstable (g, n). Zero when the degree
    // does not match dim = 3g-3+n.
    Rational hodge_integral(int genus, std::span<const int> psi, const LambdaMonomial& lambda);

    // Value of m including its scalar.
    Rational integrate(const TautMonomial& m);

    PsiEngine& psi_engine() { return *psi_; }
    std::size_t memo_size() const;

private:
    Rational evaluate(const TautMonomial& m);
    std::size_t choose_ch(const TautMonomial& m, const std::string& key) const;

    std::shared_ptr<PsiEngine> psi_;
    std::shared_ptr<IntegralCache> cache_;
    HodgeOptions options_;

    mutable std::shared_mutex memo_mutex_;
    std::unordered_map<std::string, Rational> memo_;
};

}  // namespace hodgepoly

#include "hodgepoly/psi.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hodgepoly/multiset.hpp"

namespace hodgepoly {

namespace {

// (2m-1)!! with (-1)!! = 1
BigInt odd_double_factorial_below(int m) { return m == 0 ? BigInt(1) : double_factorial_odd(static_cast<unsigned>(m - 1)); }

}  // namespace

PsiKey PsiKey::make(int genus, std::vector<int> exponents) {
    if (genus < 0) throw std::invalid_argument("psi integral: genus must be non-negative");
    if (exponents.empty()) throw std::invalid_argument("psi integral: at least one marking is required");
    for (int d : exponents)
        if (d < 0) throw std::invalid_argument("psi integral: exponents must be non-negative");
    int n = static_cast<int>(exponents.size());
    if (!is_stable(genus, n))
        throw std::invalid_argument("psi integral: (g, n) = (" + std::to_string(genus) + ", " + std::to_string(n) +
                                    ") is unstable; need 2g - 2 + n > 0");
    std::sort(exponents.begin(), exponents.end(), std::greater<>());
    return PsiKey{genus, std::move(exponents)};
}

int PsiKey::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

Rational psi_genus0(std::span<const int> exponents) {
    int n = static_cast<int>(exponents.size());
    if (n < 3) throw std::invalid_argument("psi_genus0: need at least 3 markings");
    int sum = 0;
    for (int d : exponents) {
        if (d < 0) throw std::invalid_argument("psi_genus0: negative exponent");
        sum += d;
    }
    if (sum != n - 3) return Rational();
    BigInt den = 1;
    for (int d : exponents) den *= factorial(static_cast<unsigned>(d));
    return Rational(factorial(static_cast<unsigned>(n - 3)), den);
}

PsiEngine::PsiEngine(std::shared_ptr<IntegralCache> cache, PsiOptions options)
    : cache_(std::move(cache)), options_(options) {}

Rational PsiEngine::integral(int genus, std::span<const int> exponents) {
    return integral(PsiKey::make(genus, std::vector<int>(exponents.begin(), exponents.end())));
}

Rational PsiEngine::integral(const PsiKey& key) {
    if (key.degree() != key.dimension()) return Rational();
    auto text = key.to_string();
    if (auto hit = cache_->find(text)) return *hit;

    Rational value;
    if (key.genus == 0 && options_.genus0_closed_form)
        value = psi_genus0(key.exponents);
    else
        value = dvv(key);
    cache_->insert(text, value);
    return value;
}

Rational PsiEngine::stable_or_zero(int genus, std::vector<int> exponents) {
    if (genus < 0 || !is_stable(genus, static_cast<int>(exponents.size()))) return Rational();
    for (int d : exponents)
        if (d < 0) return Rational();
    return integral(PsiKey::make(genus, std::move(exponents)));
}

// (2d_1+1)!! <tau_{d_1} prod tau_{d_j}>_g =
//     sum_j (2d_1+2d_j-1)!!/(2d_j-1)!! <tau_{d_1+d_j-1} prod_{k != j} tau_{d_k}>_g
//   + 1/2 sum_{r+s=d_1-2} (2r+1)!!(2s+1)!! [ <tau_r tau_s prod tau_{d_j}>_{g-1}
//        + sum_{g_1+g_2=g, I u J} <tau_r tau_I>_{g_1} <tau_s tau_J>_{g_2} ]
Rational PsiEngine::dvv(const PsiKey& key) {
    const int g = key.genus;
    const int n = key.markings();
    if (g == 0 && n == 3) return Rational(1);
    if (g == 1 && n == 1) return Rational(1, 24);

    const int d1 = key.exponents.front();
    const std::vector<int> rest(key.exponents.begin() + 1, key.exponents.end());

    Rational sum;
    for (std::size_t j = 0; j < rest.size(); ++j) {
        int merged = d1 + rest[j] - 1;
        if (merged < 0) continue;
        std::vector<int> exps = rest;
        exps[j] = merged;
        Rational coeff(odd_double_factorial_below(d1 + rest[j]), odd_double_factorial_below(rest[j]));
        sum += coeff * stable_or_zero(g, std::move(exps));
    }

    const auto groups = MultisetGroups::from(rest);
    Rational quadratic;
    for (int r = 0; r <= d1 - 2; ++r) {
        int s = d1 - 2 - r;
        Rational weight(double_factorial_odd(static_cast<unsigned>(r)) * double_factorial_odd(static_cast<unsigned>(s)));

        std::vector<int> exps = rest;
        exps.push_back(r);
        exps.push_back(s);
        Rational bracket = stable_or_zero(g - 1, std::move(exps));

        // <tau_r tau_I>_{g1} has the right dimension for exactly one g1
        for_each_split(groups, [&](const std::vector<int>& first, const std::vector<int>& second, const BigInt& mult) {
            const int first_sum = std::accumulate(first.begin(), first.end(), r);
            const int three_g1 = first_sum + 2 - static_cast<int>(first.size());
            if (three_g1 < 0 || three_g1 % 3 != 0 || three_g1 / 3 > g) return;
            const int g1 = three_g1 / 3;
            std::vector<int> left = first;
            left.push_back(r);
            auto lhs = stable_or_zero(g1, std::move(left));
            if (lhs.is_zero()) return;
            std::vector<int> right = second;
            right.push_back(s);
            bracket += Rational(mult) * lhs * stable_or_zero(g - g1, std::move(right));
        });
        quadratic += weight * bracket;
    }
    sum += quadratic / Rational(2);
    return sum / Rational(double_factorial_odd(static_cast<unsigned>(d1)));
}

}  // namespace hodgepoly

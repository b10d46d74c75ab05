#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hodgepoly/cache.hpp"
#include "hodgepoly/rational.hpp"

namespace hodgepoly {

// 2g - 2 + n > 0
constexpr bool is_stable(int genus, int markings) { return genus >= 0 && markings >= 0 && 2 * genus - 2 + markings > 0; }

// Canonical key of a pure psi integral <tau_{d_1} ... tau_{d_n}>_g.
// Exponents are stored sorted descending, so permutations collapse.
struct PsiKey {
    int genus = 0;
    std::vector<int> exponents;

    // Throws std::invalid_argument on negative exponents, n = 0, or an
    // unstable (g, n).
    static PsiKey make(int genus, std::vector<int> exponents);

    int markings() const { return static_cast<int>(exponents.size()); }
    int dimension() const { return 3 * genus - 3 + markings(); }
    int degree() const;
    std::string to_string() const { return psi_cache_key(genus, exponents); }

    friend bool operator==(const PsiKey&, const PsiKey&) = default;
};

// Genus-zero closed form (n-3)! / prod d_i!; zero on dimension mismatch.
// Throws std::invalid_argument when n < 3.
Rational psi_genus0(std::span<const int> exponents);

struct PsiOptions {
    // When false, genus zero also goes through the DVV recursion. Only the
    // cross-check tests turn this off.
    bool genus0_closed_form = true;
};

// Witten-Kontsevich intersection numbers <tau_{d_1} ... tau_{d_n}>_g,
// memoized in an IntegralCache.
class PsiEngine {
public:
    explicit PsiEngine(std::shared_ptr<IntegralCache> cache = std::make_shared<IntegralCache>(),
                       PsiOptions options = {});

    Rational integral(const PsiKey& key);
    // Raw-order entry point; canonicalizes first.
    Rational integral(int genus, std::span<const int> exponents);

    const std::shared_ptr<IntegralCache>& cache() const { return cache_; }

private:
    Rational dvv(const PsiKey& key);
    // Like integral() but returns 0 for unstable (g, n) instead of throwing.
    Rational stable_or_zero(int genus, std::vector<int> exponents);

    std::shared_ptr<IntegralCache> cache_;
    PsiOptions options_;
};

}  // namespace hodgepoly

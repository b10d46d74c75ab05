#include "hodgepoly/series.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hodgepoly/cache.hpp"

namespace hodgepoly {

// ---- IndexVector -------------------------------------------------------------

IndexVector::IndexVector(std::vector<int> values) : entries(std::move(values)) {
    for (int v : entries)
        if (v < 0) throw std::invalid_argument("index vector entries must be non-negative");
}

IndexVector IndexVector::parse(std::string_view text) {
    std::vector<int> values;
    if (text.empty()) return IndexVector();
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        auto item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw std::invalid_argument("bad index vector '" + std::string(text) + "'");
        values.push_back(std::stoi(std::string(item)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return IndexVector(std::move(values));
}

int IndexVector::weight() const { return std::accumulate(entries.begin(), entries.end(), 0); }

std::string IndexVector::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(entries[i]);
    }
    return s + ")";
}

namespace {

// Non-increasing sequences of length `length` with entries in [min_part, cap]
// summing to `weight`, reverse-lexicographic.
void partitions_into(int weight, int length, int cap, int min_part, std::vector<int>& prefix,
                     std::vector<IndexVector>& out) {
    if (length == 0) {
        if (weight == 0) out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(weight, cap); part >= min_part; --part) {
        if (part * length < weight) break;
        prefix.push_back(part);
        partitions_into(weight - part, length - 1, part, min_part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<IndexVector> index_vectors(int max_weight, int max_length) {
    std::vector<IndexVector> out;
    std::vector<int> prefix;
    for (int w = 0; w <= max_weight; ++w)
        for (int len = 0; len <= max_length; ++len) partitions_into(w, len, w, 0, prefix, out);
    return out;
}

std::vector<IndexVector> table_index_vectors(int max_weight) {
    std::vector<IndexVector> out;
    std::vector<int> prefix;
    for (int w = 0; w <= max_weight; ++w) {
        std::vector<IndexVector> group;
        for (int len = 0; len <= w; ++len) partitions_into(w, len, w, 1, prefix, group);
        std::sort(group.begin(), group.end(),
                  [](const IndexVector& x, const IndexVector& y) { return x.entries > y.entries; });
        out.insert(out.end(), group.begin(), group.end());
    }
    return out;
}

std::string_view to_string(Convention c) { return c == Convention::alpha ? "alpha" : "alpha_shifted"; }

BigInt prefactor(const IndexVector& a) {
    BigInt p = 1;
    for (int ai : a.entries) {
        BigInt four;
        mpz_ui_pow_ui(four.get_mpz_t(), 4, static_cast<unsigned>(ai));
        p *= double_factorial_odd(static_cast<unsigned>(ai)) * four;
        if (ai % 2) p = -p;
    }
    return p;
}

// Lambda^v_g(x) = sum_j (-1)^j x^{g-j} lambda_j
std::vector<LambdaProductTerm> lambda_product_expansion(int genus) {
    if (genus < 0) throw std::invalid_argument("negative genus");
    std::vector<LambdaProductTerm> terms;
    for (int k = 0; k <= genus; ++k)
        for (int j = 0; j <= genus; ++j) terms.push_back({k, j, (k + j) % 2 ? -1 : 1, genus - j});
    return terms;
}

PPolynomial shift_convention(const PPolynomial& p) {
    return {p.a, p.convention == Convention::alpha ? Convention::alpha_shifted : Convention::alpha,
            p.poly.substitute_alpha(Rational(-1), Rational(-1))};
}

PPolynomial string_apply(const PPolynomial& p, std::span<const PPolynomial> family) {
    if (p.a.size() + 1 < 2)
        throw std::invalid_argument("string_apply: the extended index vector needs at least two entries");
    PPolynomial out{p.a, p.convention, p.poly};
    out.a.entries.push_back(0);
    for (int i = 0; i < p.a.size(); ++i) {
        if (p.a[i] == 0) continue;
        IndexVector lowered = p.a;
        --lowered.entries[static_cast<std::size_t>(i)];
        auto it = std::find_if(family.begin(), family.end(), [&](const PPolynomial& q) { return q.a == lowered; });
        if (it == family.end())
            throw std::invalid_argument("string_apply: family lacks P" + lowered.to_string());
        if (it->convention != p.convention)
            throw std::invalid_argument("string_apply: P" + lowered.to_string() + " is in a different convention");
        out.poly -= it->poly * Rational(8 * p.a[i] + 4);
    }
    return out;
}

PPolynomial dilaton_apply(const PPolynomial& p, int n) {
    if (n != p.a.size() + 1)
        throw std::invalid_argument("dilaton_apply: n must be the length of the extended index vector (" +
                                    std::to_string(p.a.size() + 1) + "), got " + std::to_string(n));
    PPolynomial out{p.a, p.convention, {}};
    out.a.entries.push_back(1);
    BiPoly t = BiPoly::monomial(Rational(1), 1, 0);
    out.poly = (t + BiPoly(Rational(24 - 12 * n))) * p.poly - (t * p.poly.derivative_t()) * Rational(24);
    return out;
}

Rational constant_term(const IndexVector& a) {
    const int n = a.size();
    if (n == 0) return Rational(1);  // P_() = 1
    Rational pre(prefactor(a));
    if (n == 1) return a[0] % 2 ? -pre : pre;
    const int free = n - 2 - a.weight();
    if (free < 0) return Rational();
    BigInt den = factorial(static_cast<unsigned>(free));
    for (int ai : a.entries) den *= factorial(static_cast<unsigned>(ai));
    return pre * Rational(factorial(static_cast<unsigned>(n - 2)), den);
}

ConjectureReport conjecture_check(const PPolynomial& p) {
    ConjectureReport r;
    r.weight = p.a.weight();
    r.max_total_degree = p.poly.total_degree();
    r.holds = r.max_total_degree == r.weight;
    return r;
}

// ---- SeriesEngine ------------------------------------------------------------

SeriesEngine::SeriesEngine(std::shared_ptr<HodgeEngine> hodge) : hodge_(std::move(hodge)) {}

UniPoly SeriesEngine::double_hodge_coeff(int genus, const IndexVector& a) {
    if (genus < 0) throw std::invalid_argument("negative genus");
    const int n = a.size();
    if (genus == 0 && n == 0) return UniPoly(Rational(1));
    if (genus == 0 && n == 1) return UniPoly(Rational(a[0] % 2 ? -1 : 1));

    // psi_0 power forced by dim M_{g,n+1} = 3g - 2 + n
    const int free = 3 * genus - 2 + n - a.weight();
    std::vector<int> psi = a.entries;
    psi.push_back(0);

    std::vector<Rational> coeffs(static_cast<std::size_t>(genus) + 1);
    for (const auto& term : lambda_product_expansion(genus)) {
        const int e = free - term.k - term.j;
        if (e < 0) continue;
        psi.back() = e;
        const int lam[] = {term.k, term.j};
        Rational v = hodge_->hodge_integral(genus, psi, LambdaMonomial::from_indices(lam));
        if (term.sign < 0) v = -v;
        coeffs[static_cast<std::size_t>(term.alpha_power)] += v;
    }
    return UniPoly(std::move(coeffs));
}

TruncatedSeries SeriesEngine::assembled_series(const IndexVector& a, int order) {
    TruncatedSeries bare(order);
    Rational pre(prefactor(a));
    for (int g = 0; g <= order; ++g) bare[g] = double_hodge_coeff(g, a) * pre;
    return series_mul(bare, series_exp(Rational(1, 24), order));
}

PPolynomial SeriesEngine::assemble(const IndexVector& a, int guard) {
    if (guard < 0) throw std::invalid_argument("guard must be non-negative");
    const int w = a.weight();
    auto s = assembled_series(a, w + guard);
    for (int k = w + 1; k <= w + guard; ++k)
        if (!s[k].is_zero())
            throw IntegrityError("P" + a.to_string() + ": coefficient of t^" + std::to_string(k) +
                                 " does not vanish (alpha-coefficient of lowest order: " +
                                 s[k].coefficients().front().to_string() + ")");
    if (s[w] != UniPoly(Rational(1)))
        throw IntegrityError("P" + a.to_string() + ": coefficient of t^" + std::to_string(w) + " is not 1");
    std::vector<UniPoly> kept(s.coefficients().begin(), s.coefficients().begin() + w + 1);
    return {a, Convention::alpha, BiPoly::from_t_coefficients(kept)};
}

UniPoly SeriesEngine::A_value(int genus, const IndexVector& a) {
    UniPoly total;
    for (int g2 = 0; g2 <= genus; ++g2) {
        // int_{M_{g2,1}} psi^{3 g2 - 2}, with the value 1 at g2 = 0
        const int top[] = {3 * g2 - 2};
        Rational weight = g2 == 0 ? Rational(1) : hodge_->psi_engine().integral(g2, top);
        total += double_hodge_coeff(genus - g2, a) * weight;
    }
    return total;
}

PPolynomial SeriesEngine::mumford_specialize(const IndexVector& a, int guard) {
    const int n = a.size();
    const int w = a.weight();
    const int order = w + guard;
    TruncatedSeries bare(order);
    Rational pre(prefactor(a));
    for (int g = 0; g <= order; ++g) {
        Rational v;
        if (g == 0 && n == 0)
            v = Rational(1);
        else if (g == 0 && n == 1)
            v = Rational(a[0] % 2 ? -1 : 1);
        else {
            std::vector<int> psi = a.entries;
            const int e = 3 * g - 2 + n - w;
            if (e >= 0) {
                psi.push_back(e);
                v = hodge_->psi_engine().integral(g, psi);
            }
        }
        if (g % 2) v = -v;  // (-t)^g
        bare[g] = UniPoly(v * pre);
    }
    auto s = series_mul(bare, series_exp(Rational(1, 24), order));
    for (int k = w + 1; k <= order; ++k)
        if (!s[k].is_zero())
            throw IntegrityError("P" + a.to_string() + "(-1, t): coefficient of t^" + std::to_string(k) +
                                 " does not vanish");
    std::vector<UniPoly> kept(s.coefficients().begin(), s.coefficients().begin() + w + 1);
    return {a, Convention::alpha, BiPoly::from_t_coefficients(kept)};
}

TruncatedSeries SeriesEngine::F_series(int order) {
    TruncatedSeries s(order);
    for (int g = 0; 2 * g <= order; ++g) {
        auto c = double_hodge_coeff(g, IndexVector());
        if (!c.is_constant())
            throw IntegrityError("F series: coefficient of t^" + std::to_string(2 * g) + " depends on alpha");
        s[2 * g] = c;
    }
    return s;
}

}  // namespace hodgepoly

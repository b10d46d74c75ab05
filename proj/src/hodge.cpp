#include "hodgepoly/hodge.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "hodgepoly/multiset.hpp"

namespace hodgepoly {

namespace {

int sum_of(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

std::vector<int> sorted_copy(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

ChMonomial merge(const ChMonomial& a, const ChMonomial& b) {
    ChMonomial out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

ChPolynomial multiply(const ChPolynomial& a, const ChPolynomial& b) {
    ChPolynomial out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            auto& slot = out[merge(ma, mb)];
            slot += ca * cb;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

// Degree-j part of exp(sum_{l odd} (l-1)! ch_l): a sum over partitions of j
// into odd parts with multiplicities m_l of prod_l ((l-1)!)^{m_l} / m_l!.
ChPolynomial single_lambda(int j) {
    ChPolynomial out;
    ChMonomial parts;
    std::function<void(int, int)> recurse = [&](int remaining, int max_part) {
        if (remaining == 0) {
            Rational coeff(1);
            for (std::size_t i = 0; i < parts.size();) {
                std::size_t k = i;
                while (k < parts.size() && parts[k] == parts[i]) ++k;
                auto l = static_cast<unsigned>(parts[i]);
                auto mult = static_cast<unsigned>(k - i);
                BigInt num;
                BigInt base = factorial(l - 1);
                mpz_pow_ui(num.get_mpz_t(), base.get_mpz_t(), mult);
                coeff *= Rational(num, factorial(mult));
                i = k;
            }
            out[sorted_copy(parts)] += coeff;
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            if (part % 2 == 0) continue;
            parts.push_back(part);
            recurse(remaining - part, part);
            parts.pop_back();
        }
    };
    recurse(j, j);
    return out;
}

// Odometer over (0..counts[i]) tuples.
void for_each_take(const std::vector<int>& counts, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> take(counts.size(), 0);
    while (true) {
        visit(take);
        std::size_t i = 0;
        for (; i < take.size(); ++i) {
            if (take[i] < counts[i]) {
                ++take[i];
                break;
            }
            take[i] = 0;
        }
        if (i == take.size()) return;
    }
}

void validate(const TautMonomial& m) {
    if (!is_stable(m.genus, m.markings()))
        throw std::invalid_argument("tautological monomial on unstable (g, n) = (" + std::to_string(m.genus) + ", " +
                                    std::to_string(m.markings()) + ")");
    for (int d : m.psi)
        if (d < 0) throw std::invalid_argument("negative psi exponent");
    for (int b : m.kappa)
        if (b < 0) throw std::invalid_argument("kappa index must be non-negative, got " + std::to_string(b));
    for (int c : m.ch)
        if (c < 1 || c % 2 == 0)
            throw std::invalid_argument("ch_" + std::to_string(c) +
                                        "(E) requested; only odd Chern characters of the Hodge bundle are non-zero");
}

std::string memo_key(const TautMonomial& m) {
    constexpr char sep = '\xff';
    std::string key;
    key.reserve(4 + m.psi.size() + m.kappa.size() + m.ch.size());
    key.push_back(static_cast<char>(m.genus));
    auto psi = m.psi;
    std::sort(psi.begin(), psi.end(), std::greater<>());
    for (int d : psi) key.push_back(static_cast<char>(d));
    key.push_back(sep);
    for (int b : sorted_copy(m.kappa)) key.push_back(static_cast<char>(b));
    key.push_back(sep);
    for (int c : sorted_copy(m.ch)) key.push_back(static_cast<char>(c));
    return key;
}

}  // namespace

// ---- LambdaMonomial --------------------------------------------------------

LambdaMonomial LambdaMonomial::from_indices(std::span<const int> indices) {
    LambdaMonomial m;
    for (int j : indices) {
        if (j < 0) throw std::invalid_argument("lambda index must be non-negative");
        if (j == 0) continue;  // lambda_0 = 1
        ++m.exponents[j];
    }
    return m;
}

std::vector<int> LambdaMonomial::indices() const {
    std::vector<int> out;
    for (const auto& [j, mult] : exponents) out.insert(out.end(), static_cast<std::size_t>(mult), j);
    return out;
}

int LambdaMonomial::degree() const {
    int d = 0;
    for (const auto& [j, mult] : exponents) d += j * mult;
    return d;
}

ChPolynomial lambda_to_ch(const LambdaMonomial& m, int genus) {
    ChPolynomial out{{ChMonomial{}, Rational(1)}};
    for (const auto& [j, mult] : m.exponents) {
        if (j > genus) return {};
        auto factor = single_lambda(j);
        for (int k = 0; k < mult; ++k) out = multiply(out, factor);
    }
    return out;
}

// ---- TautMonomial ------------------------------------------------------------

int TautMonomial::degree() const { return sum_of(psi) + sum_of(kappa) + sum_of(ch); }

// ---- GRR ---------------------------------------------------------------------

GrrExpansion grr_expand(const TautMonomial& m, std::size_t chosen) {
    validate(m);
    if (chosen >= m.ch.size()) throw std::out_of_range("grr_expand: chosen factor is not present");

    const int c = m.ch[chosen];  // c = 2l - 1
    const int g = m.genus;
    const int n = m.markings();
    std::vector<int> rest_ch = m.ch;
    rest_ch.erase(rest_ch.begin() + static_cast<std::ptrdiff_t>(chosen));

    const Rational coeff = m.scalar * bernoulli(c + 1) / Rational(factorial(static_cast<unsigned>(c + 1)));
    const Rational half_coeff = coeff / Rational(2);

    GrrExpansion out;

    {
        TautMonomial kappa_term{g, m.psi, m.kappa, rest_ch, coeff};
        kappa_term.kappa.push_back(c);
        out.local.push_back(std::move(kappa_term));
    }
    for (int i = 0; i < n; ++i) {
        TautMonomial psi_term{g, m.psi, m.kappa, rest_ch, -coeff};
        psi_term.psi[static_cast<std::size_t>(i)] += c;
        out.local.push_back(std::move(psi_term));
    }

    // Irreducible boundary: M_{g-1, n+2} -> M_{g, n}.
    if (g >= 1 && !(g == 1 && !rest_ch.empty())) {
        for (int i = 0; i <= c - 1; ++i) {
            BoundaryTerm term;
            term.kind = BoundaryTerm::Kind::irreducible;
            term.node_power_first = i;
            term.node_power_second = c - 1 - i;
            term.first = TautMonomial{g - 1, m.psi, m.kappa, rest_ch, Rational(1)};
            term.first.psi.push_back(i);
            term.first.psi.push_back(c - 1 - i);
            term.scalar = i % 2 == 0 ? half_coeff : -half_coeff;
            out.boundary.push_back(std::move(term));
        }
    }

    // Separating boundary over ordered pairs (h, S). Equal psi exponents,
    // kappa indices and ch indices are interchangeable, so the enumeration
    // runs over how many of each kind go to the first side.
    std::map<int, std::vector<int>> psi_runs;
    for (int i = 0; i < n; ++i) psi_runs[m.psi[static_cast<std::size_t>(i)]].push_back(i);
    const auto kappa_runs = MultisetGroups::from(m.kappa).runs;
    const auto ch_runs = MultisetGroups::from(rest_ch).runs;

    struct Run {
        int value;
        int count;
    };
    std::vector<Run> runs;  // psi runs, then kappa runs, then ch runs
    for (const auto& [value, idx] : psi_runs) runs.push_back({value, static_cast<int>(idx.size())});
    for (const auto& [value, count] : kappa_runs) runs.push_back({value, count});
    for (const auto& [value, count] : ch_runs) runs.push_back({value, count});
    const std::size_t psi_end = psi_runs.size();
    const std::size_t kappa_end = psi_end + kappa_runs.size();

    std::vector<int> counts;
    for (const auto& r : runs) counts.push_back(r.count);

    for_each_take(counts, [&](const std::vector<int>& take) {
        // Cheap feasibility checks on sums before building anything.
        int first_markings = 0, first_degree = 0, first_ch = 0;
        for (std::size_t i = 0; i < runs.size(); ++i) {
            first_degree += take[i] * runs[i].value;
            if (i < psi_end) first_markings += take[i];
            if (i >= kappa_end) first_ch += take[i];
        }
        const int second_markings = n - first_markings;
        const int second_ch = static_cast<int>(rest_ch.size()) - first_ch;

        for (int h = 0; h <= g; ++h) {
            // the first side gains the node marking
            const int node = 3 * h - 2 + first_markings - first_degree;
            if (node < 0 || node > c - 1) continue;
            if (!is_stable(h, first_markings + 1) || !is_stable(g - h, second_markings + 1)) continue;
            if ((h == 0 && first_ch > 0) || (g - h == 0 && second_ch > 0)) continue;

            TautMonomial first{h, {}, {}, {}, Rational(1)};
            TautMonomial second{g - h, {}, {}, {}, Rational(1)};
            std::vector<int> subset;
            BigInt mult = 1;
            std::size_t slot = 0;
            for (const auto& [value, idx] : psi_runs) {
                int k = take[slot++];
                first.psi.insert(first.psi.end(), static_cast<std::size_t>(k), value);
                second.psi.insert(second.psi.end(), idx.size() - static_cast<std::size_t>(k), value);
                subset.insert(subset.end(), idx.begin(), idx.begin() + k);
                mult *= binomial(static_cast<unsigned>(idx.size()), static_cast<unsigned>(k));
            }
            for (; slot < runs.size(); ++slot) {
                auto& [value, count] = runs[slot];
                int k = take[slot];
                auto& a = slot < kappa_end ? first.kappa : first.ch;
                auto& b = slot < kappa_end ? second.kappa : second.ch;
                a.insert(a.end(), static_cast<std::size_t>(k), value);
                b.insert(b.end(), static_cast<std::size_t>(count - k), value);
                mult *= binomial(static_cast<unsigned>(count), static_cast<unsigned>(k));
            }
            first.psi.push_back(node);
            second.psi.push_back(c - 1 - node);

            BoundaryTerm term;
            term.kind = BoundaryTerm::Kind::separating;
            term.split_genus = h;
            std::sort(subset.begin(), subset.end());
            term.subset = std::move(subset);
            term.node_power_first = node;
            term.node_power_second = c - 1 - node;
            term.first = std::move(first);
            term.second = std::move(second);
            term.scalar = (node % 2 == 0 ? half_coeff : -half_coeff) * Rational(mult);
            out.boundary.push_back(std::move(term));
        }
    });
    return out;
}

// ---- kappa removal -----------------------------------------------------------

// With kappa_b = pi_*(psi_{n+1}^{b+1}) and pi^* kappa_a = kappa_a - psi_{n+1}^a:
//   <X kappa_B kappa_c>_{g,n} = <X tau_{c+1} kappa_B>_{g,n+1}
//                              - sum_{T nonempty subset of B} <X kappa_{c + |T|} kappa_{B \ T}>_{g,n}
std::vector<TautMonomial> kappa_step(const TautMonomial& m) {
    validate(m);
    if (!m.ch.empty()) throw std::invalid_argument("kappa_step: Chern characters must be expanded first");
    if (m.kappa.empty()) return {m};

    auto kappa = sorted_copy(m.kappa);
    if (kappa.front() == 0) {
        TautMonomial r = m;
        r.kappa.assign(kappa.begin() + 1, kappa.end());
        r.scalar *= Rational(2 * m.genus - 2 + m.markings());
        return {r};
    }

    const int c = kappa.back();
    kappa.pop_back();

    std::vector<TautMonomial> out;
    TautMonomial lifted{m.genus, m.psi, kappa, {}, m.scalar};
    lifted.psi.push_back(c + 1);
    out.push_back(std::move(lifted));

    for_each_split(MultisetGroups::from(kappa), [&](const std::vector<int>& merged, const std::vector<int>& kept,
                                                    const BigInt& mult) {
        if (merged.empty()) return;
        TautMonomial t{m.genus, m.psi, kept, {}, -m.scalar * Rational(mult)};
        t.kappa.push_back(c + sum_of(merged));
        out.push_back(std::move(t));
    });
    return out;
}

std::vector<TautMonomial> kappa_reduce(const TautMonomial& m) {
    std::vector<TautMonomial> done;
    std::vector<TautMonomial> work{m};
    while (!work.empty()) {
        auto item = std::move(work.back());
        work.pop_back();
        if (item.kappa.empty()) {
            validate(item);
            done.push_back(std::move(item));
            continue;
        }
        for (auto& next : kappa_step(item)) work.push_back(std::move(next));
    }
    return done;
}

// ---- HodgeEngine -------------------------------------------------------------

HodgeEngine::HodgeEngine(std::shared_ptr<PsiEngine> psi, std::shared_ptr<IntegralCache> cache, HodgeOptions options)
    : psi_(std::move(psi)), cache_(std::move(cache)), options_(options) {}

std::size_t HodgeEngine::memo_size() const {
    std::shared_lock lock(memo_mutex_);
    return memo_.size();
}

Rational HodgeEngine::hodge_integral(int genus, std::span<const int> psi, const LambdaMonomial& lambda) {
    const int n = static_cast<int>(psi.size());
    if (n == 0) throw std::invalid_argument("hodge integral: at least one marking is required");
    if (!is_stable(genus, n))
        throw std::invalid_argument("hodge integral: (g, n) = (" + std::to_string(genus) + ", " + std::to_string(n) +
                                    ") is unstable; need 2g - 2 + n > 0");
    for (int d : psi)
        if (d < 0) throw std::invalid_argument("hodge integral: negative psi exponent");

    const std::vector<int> exps(psi.begin(), psi.end());
    if (sum_of(exps) + lambda.degree() != 3 * genus - 3 + n) return Rational();
    for (const auto& [j, mult] : lambda.exponents)
        if (j > genus) return Rational();

    const auto lam = lambda.indices();
    const auto key = hodge_cache_key(genus, n, exps, lam);
    if (auto hit = cache_->find(key)) return *hit;

    Rational value;
    for (const auto& [chs, coeff] : lambda_to_ch(lambda, genus))
        value += integrate(TautMonomial{genus, exps, {}, chs, coeff});
    cache_->insert(key, value);
    return value;
}

Rational HodgeEngine::integrate(const TautMonomial& m) {
    if (m.scalar.is_zero()) return Rational();
    validate(m);
    return m.scalar * evaluate(m);
}

std::size_t HodgeEngine::choose_ch(const TautMonomial& m, const std::string& key) const {
    auto largest = std::max_element(m.ch.begin(), m.ch.end());
    auto smallest = std::min_element(m.ch.begin(), m.ch.end());
    switch (options_.order) {
        case ExpansionOrder::largest_first:
            return static_cast<std::size_t>(largest - m.ch.begin());
        case ExpansionOrder::smallest_first:
            return static_cast<std::size_t>(smallest - m.ch.begin());
        case ExpansionOrder::seeded_random: {
            std::uint64_t h = std::hash<std::string>{}(key) ^ (options_.seed * 0x9e3779b97f4a7c15ULL);
            h ^= h >> 31;
            h *= 0xbf58476d1ce4e5b9ULL;
            h ^= h >> 29;
            return static_cast<std::size_t>(h % m.ch.size());
        }
    }
    return 0;
}

// Value of m ignoring m.scalar.
Rational HodgeEngine::evaluate(const TautMonomial& m) {
    if (m.degree() != m.dimension()) return Rational();
    if (!m.ch.empty() && m.genus == 0) return Rational();
    if (m.ch.empty() && m.kappa.empty()) return psi_->integral(m.genus, m.psi);

    const auto key = memo_key(m);
    {
        std::shared_lock lock(memo_mutex_);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }

    TautMonomial bare = m;
    bare.scalar = Rational(1);

    Rational value;
    if (!bare.ch.empty()) {
        auto expansion = grr_expand(bare, choose_ch(bare, key));
        for (const auto& t : expansion.local) value += integrate(t);
        for (const auto& b : expansion.boundary) {
            Rational part = b.scalar * evaluate(b.first);
            if (part.is_zero()) continue;
            if (b.kind == BoundaryTerm::Kind::separating) part *= evaluate(b.second);
            value += part;
        }
    } else {
        for (const auto& t : kappa_step(bare)) value += integrate(t);
    }

    std::unique_lock lock(memo_mutex_);
    memo_.try_emplace(key, value);
    return value;
}

}  // namespace hodgepoly

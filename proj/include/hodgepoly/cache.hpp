#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "hodgepoly/rational.hpp"

namespace hodgepoly {

struct CacheError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Canonical key spellings. Exponent lists are sorted descending.
//   psi integrals:    "g:d1,d2,..."
//   Hodge integrals:  "H:g:n:psi=d1,...:lam=j1,..."
std::string psi_cache_key(int genus, std::span<const int> exponents);
std::string hodge_cache_key(int genus, int markings, std::span<const int> psi, std::span<const int> lambda_indices);
bool is_canonical_cache_key(std::string_view key);

// Thread-safe table of exact integral values. Insertion is idempotent:
// storing an equal value again is a no-op, storing a different value for an
// existing key throws CacheError.
class IntegralCache {
public:
    static constexpr int format_version = 1;

    struct Stats {
        std::size_t psi = 0;
        std::size_t hodge = 0;
        friend bool operator==(const Stats&, const Stats&) = default;
    };

    std::optional<Rational> find(const std::string& key) const;
    void insert(const std::string& key, const Rational& value);

    Stats stats() const;
    std::size_t size() const;
    void clear();

    // Deterministic dump: header line then one "key value" line per entry in
    // key order.
    void write(std::ostream& os) const;
    // Validates the whole stream against the current contents before
    // touching anything; on any error the cache is left unchanged.
    void import(std::istream& is);

    void load_file(const std::filesystem::path& path);
    void save_file(const std::filesystem::path& path) const;

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, Rational> table_;
};

}  // namespace hodgepoly

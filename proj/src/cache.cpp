#include "hodgepoly/cache.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <vector>

namespace hodgepoly {

namespace {

void append_list(std::string& out, std::span<const int> values) {
    std::vector<int> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(sorted[i]);
    }
}

std::optional<int> parse_natural(std::string_view s) {
    if (s.empty() || (s.size() > 1 && s.front() == '0')) return std::nullopt;
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || v < 0) return std::nullopt;
    return v;
}

std::optional<std::vector<int>> parse_list(std::string_view s) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
        auto comma = s.find(',', start);
        auto v = parse_natural(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start));
        if (!v) return std::nullopt;
        out.push_back(*v);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

}  // namespace

std::string psi_cache_key(int genus, std::span<const int> exponents) {
    std::string key = std::to_string(genus) + ":";
    append_list(key, exponents);
    return key;
}

std::string hodge_cache_key(int genus, int markings, std::span<const int> psi, std::span<const int> lambda_indices) {
    std::string key = "H:" + std::to_string(genus) + ":" + std::to_string(markings) + ":psi=";
    append_list(key, psi);
    key += ":lam=";
    append_list(key, lambda_indices);
    return key;
}

namespace {
bool stable(int g, int n) { return 2 * g - 2 + n > 0; }
}  // namespace

bool is_canonical_cache_key(std::string_view key) {
    auto parts = split(key, ':');
    if (parts.size() == 2) {
        auto g = parse_natural(parts[0]);
        auto exps = parse_list(parts[1]);
        return g && exps && !exps->empty() && stable(*g, static_cast<int>(exps->size())) && psi_cache_key(*g, *exps) == key;
    }
    if (parts.size() == 5 && parts[0] == "H" && parts[3].starts_with("psi=") && parts[4].starts_with("lam=")) {
        auto g = parse_natural(parts[1]);
        auto n = parse_natural(parts[2]);
        auto psi = parse_list(parts[3].substr(4));
        auto lam = parse_list(parts[4].substr(4));
        return g && n && psi && lam && static_cast<int>(psi->size()) == *n && *n > 0 && stable(*g, *n) &&
               hodge_cache_key(*g, *n, *psi, *lam) == key;
    }
    return false;
}

std::optional<Rational> IntegralCache::find(const std::string& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
}

void IntegralCache::insert(const std::string& key, const Rational& value) {
    std::unique_lock lock(mutex_);
    auto [it, inserted] = table_.try_emplace(key, value);
    if (!inserted && it->second != value)
        throw CacheError("conflicting cache value for " + key + ": " + it->second.to_string() + " vs " +
                         value.to_string());
}

IntegralCache::Stats IntegralCache::stats() const {
    std::shared_lock lock(mutex_);
    Stats s;
    for (const auto& [key, value] : table_) (key.starts_with("H:") ? s.hodge : s.psi)++;
    return s;
}

std::size_t IntegralCache::size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
}

void IntegralCache::clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
}

void IntegralCache::write(std::ostream& os) const {
    std::map<std::string, Rational> sorted;
    {
        std::shared_lock lock(mutex_);
        sorted.insert(table_.begin(), table_.end());
    }
    os << "version " << format_version << '\n';
    for (const auto& [key, value] : sorted) os << key << ' ' << value << '\n';
}

void IntegralCache::import(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "version " + std::to_string(format_version))
        throw CacheError("cache file: expected header 'version " + std::to_string(format_version) + "', got '" +
                         line + "'");

    std::map<std::string, Rational> incoming;
    for (std::size_t lineno = 2; std::getline(is, line); ++lineno) {
        if (line.empty()) continue;
        auto where = [&] { return "cache file line " + std::to_string(lineno) + ": "; };
        auto space = line.find(' ');
        if (space == std::string::npos || line.find(' ', space + 1) != std::string::npos)
            throw CacheError(where() + "expected '<key> <p/q>'");
        std::string key = line.substr(0, space);
        if (!is_canonical_cache_key(key)) throw CacheError(where() + "non-canonical key '" + key + "'");
        Rational value;
        try {
            value = Rational::parse(std::string_view(line).substr(space + 1));
        } catch (const std::invalid_argument& e) {
            throw CacheError(where() + e.what());
        }
        auto [it, inserted] = incoming.emplace(key, value);
        if (!inserted && it->second != value) throw CacheError(where() + "duplicate key '" + key + "'");
    }

    std::unique_lock lock(mutex_);
    for (const auto& [key, value] : incoming) {
        auto it = table_.find(key);
        if (it != table_.end() && it->second != value)
            throw CacheError("conflicting cache value for " + key + ": have " + it->second.to_string() +
                             ", file has " + value.to_string());
    }
    table_.insert(incoming.begin(), incoming.end());
}

void IntegralCache::load_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw CacheError("cannot open cache file " + path.string());
    import(in);
}

void IntegralCache::save_file(const std::filesystem::path& path) const {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw CacheError("cannot write cache file " + tmp.string());
        write(out);
        if (!out) throw CacheError("error writing cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace hodgepoly

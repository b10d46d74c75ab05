#pragma once

#include <algorithm>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "hodgepoly/rational.hpp"

namespace hodgepoly {

// A multiset of integers stored as (value, multiplicity) runs.
struct MultisetGroups {
    std::vector<std::pair<int, int>> runs;

    static MultisetGroups from(std::span<const int> values) {
        std::vector<int> sorted(values.begin(), values.end());
        std::sort(sorted.begin(), sorted.end());
        MultisetGroups g;
        for (int v : sorted) {
            if (!g.runs.empty() && g.runs.back().first == v)
                ++g.runs.back().second;
            else
                g.runs.emplace_back(v, 1);
        }
        return g;
    }
};

// Enumerates every way of splitting a multiset into two labelled parts.
// Equal elements are indistinguishable, so each split is visited once along
// with the number of ordered index subsets that produce it (a product of
// binomial coefficients).
inline void for_each_split(const MultisetGroups& groups,
                           const std::function<void(const std::vector<int>& first, const std::vector<int>& second,
                                                    const BigInt& multiplicity)>& visit) {
    std::vector<int> take(groups.runs.size(), 0);
    std::vector<int> first, second;
    while (true) {
        first.clear();
        second.clear();
        BigInt mult = 1;
        for (std::size_t i = 0; i < groups.runs.size(); ++i) {
            auto [value, count] = groups.runs[i];
            first.insert(first.end(), static_cast<std::size_t>(take[i]), value);
            second.insert(second.end(), static_cast<std::size_t>(count - take[i]), value);
            mult *= binomial(static_cast<unsigned>(count), static_cast<unsigned>(take[i]));
        }
        visit(first, second, mult);

        std::size_t i = 0;
        for (; i < take.size(); ++i) {
            if (take[i] < groups.runs[i].second) {
                ++take[i];
                break;
            }
            take[i] = 0;
        }
        if (i == take.size()) return;
    }
}

}  // namespace hodgepoly

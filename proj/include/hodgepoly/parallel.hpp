#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <span>
#include <thread>
#include <type_traits>
#include <vector>

namespace hodgepoly {

// Applies fn to every item on up to `jobs` worker threads and returns the
// results in item order. If any call throws, the exception of the
// lowest-indexed failing item is rethrown after all workers finish.
template <typename T, typename F>
auto parallel_map(std::span<const T> items, int jobs, F&& fn) {
    using R = std::invoke_result_t<F&, const T&>;
    std::vector<std::optional<R>> slots(items.size());
    std::vector<std::exception_ptr> errors(items.size());
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < items.size();) {
            try {
                slots[i].emplace(fn(items[i]));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    const auto width = static_cast<std::size_t>(std::max(1, jobs));
    if (width == 1 || items.size() <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t k = 0; k < std::min(width, items.size()); ++k) pool.emplace_back(worker);
    }

    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<R> out;
    out.reserve(items.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace hodgepoly

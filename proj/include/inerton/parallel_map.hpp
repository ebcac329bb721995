#pragma once

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace inerton {

/// Applies fn to every element, possibly across threads, returning results
/// in input order. Output is sequential-equivalent: each evaluation is
/// pure, and when several fail the lowest-index exception is the one
/// rethrown, exactly as a left-to-right loop would.
template <typename T, typename Fn>
auto parallel_map(const std::vector<T>& items, Fn fn, unsigned thread_limit = 0)
    -> std::vector<decltype(fn(items.front()))> {
    using Result = decltype(fn(items.front()));
    std::vector<Result> results(items.size());
    if (items.empty()) return results;

    unsigned hw = std::thread::hardware_concurrency();
    unsigned workers = thread_limit ? thread_limit : (hw ? hw : 1);
    if (workers > items.size()) workers = static_cast<unsigned>(items.size());

    if (workers <= 1) {
        for (size_t i = 0; i < items.size(); ++i) results[i] = fn(items[i]);
        return results;
    }

    std::vector<std::exception_ptr> errors(items.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < items.size(); i = next.fetch_add(1)) {
            try {
                results[i] = fn(items[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

} // namespace inerton

#pragma once

#include <condition_variable>
#include <cstdint>
#include <deque>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include "affcount/exact_arith.hpp"
#include "affcount/partition.hpp"

namespace affcount {

/// Sum of `term(idx)` over every class index produced by `generate`.
/// With `workers <= 1` the terms are folded inline in generation order.
/// Otherwise the generator runs on the calling thread and hands batches to a
/// worker pool; exact integer addition makes the result schedule-independent.
struct FoldResult {
    ExactInt sum;
    std::uint64_t count = 0;
};

template <class Term>
FoldResult fold_classes(const std::function<void(const ClassVisitor&)>& generate, Term term,
                        unsigned workers, std::size_t batch_size = 64)
{
    FoldResult result;
    if (workers <= 1) {
        generate([&](const ClassIndex& idx) {
            result.sum += term(idx);
            ++result.count;
        });
        return result;
    }

    std::mutex mu;
    std::condition_variable not_empty, not_full;
    std::deque<std::vector<ClassIndex>> queue;
    bool done = false;
    std::exception_ptr failure;
    const std::size_t max_queued = 4 * workers;

    std::vector<ExactInt> partial(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (;;) {
                std::vector<ClassIndex> batch;
                {
                    std::unique_lock<std::mutex> lock(mu);
                    not_empty.wait(lock, [&] { return !queue.empty() || done; });
                    if (queue.empty()) return;
                    batch = std::move(queue.front());
                    queue.pop_front();
                }
                not_full.notify_one();
                try {
                    for (const auto& idx : batch) partial[w] += term(idx);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }

    std::vector<ClassIndex> batch;
    auto flush = [&] {
        std::unique_lock<std::mutex> lock(mu);
        not_full.wait(lock, [&] { return queue.size() < max_queued; });
        queue.push_back(std::move(batch));
        batch.clear();
        lock.unlock();
        not_empty.notify_one();
    };
    try {
        generate([&](const ClassIndex& idx) {
            batch.push_back(idx);
            ++result.count;
            if (batch.size() >= batch_size) flush();
        });
        if (!batch.empty()) flush();
    } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
    }
    {
        std::lock_guard<std::mutex> lock(mu);
        done = true;
    }
    not_empty.notify_all();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    for (const auto& s : partial) result.sum += s;
    return result;
}

} // namespace affcount

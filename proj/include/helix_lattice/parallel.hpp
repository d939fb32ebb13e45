#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace helix_lattice {

/// Worker cap from HELIX_LATTICE_THREADS; unset or 0 means hardware concurrency.
inline unsigned worker_count() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const char* env = std::getenv("HELIX_LATTICE_THREADS");
    if (env == nullptr || *env == '\0') return hw;
    try {
        const long v = std::stol(env);
        if (v <= 0) return hw;
        return static_cast<unsigned>(v);
    } catch (const std::exception&) {
        return hw;
    }
}

/// Splits the inclusive integer range [lo, hi] into contiguous slabs and runs
/// `fn(slab_lo, slab_hi)` on each, one thread per slab. Results come back in
/// slab order so callers can merge deterministically.
template <typename Fn>
auto run_slabs(long long lo, long long hi, Fn&& fn)
    -> std::vector<decltype(fn(lo, hi))> {
    using Result = decltype(fn(lo, hi));
    if (hi < lo) return {};
    const long long span = hi - lo + 1;
    const long long workers = std::min<long long>(worker_count(), span);
    if (workers <= 1) return {fn(lo, hi)};

    std::vector<Result> results(static_cast<std::size_t>(workers));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (long long w = 0; w < workers; ++w) {
        const long long a = lo + span * w / workers;
        const long long b = lo + span * (w + 1) / workers - 1;
        threads.emplace_back([&, w, a, b] {
            try {
                results[static_cast<std::size_t>(w)] = fn(a, b);
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

}  // namespace helix_lattice

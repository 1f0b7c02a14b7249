#ifndef RMC_PARALLEL_HPP
#define RMC_PARALLEL_HPP

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace rmc {

/// Global worker cap for enumeration sweeps (set from the CLI --threads flag).
unsigned& sweep_threads();

/// Runs body(begin, end, slot) over a partition of [0, count); results must be
/// reduced by the caller from the per-slot outputs so that the outcome is
/// schedule-independent.  With one worker this degenerates to a direct call.
template <class Body>
void parallel_ranges(std::uint64_t count, Body body) {
    unsigned t = sweep_threads();
    if (t <= 1 || count < 4096) {
        body(std::uint64_t{0}, count, std::size_t{0});
        return;
    }
    std::uint64_t chunk = (count + t - 1) / t;
    std::vector<std::thread> workers;
    for (unsigned i = 0; i < t; ++i) {
        std::uint64_t b = std::uint64_t{i} * chunk;
        std::uint64_t e = std::min<std::uint64_t>(b + chunk, count);
        if (b >= e) break;
        workers.emplace_back([&body, b, e, i] { body(b, e, std::size_t{i}); });
    }
    for (auto& w : workers) w.join();
}

/// Shared early-exit signal: workers may stop once a hit at a smaller index is
/// known; the reported hit is still the minimum over per-slot results.
struct EarlyExit {
    std::atomic<std::uint64_t> best{UINT64_MAX};
    bool can_skip(std::uint64_t idx) const { return best.load(std::memory_order_relaxed) < idx; }
    void report(std::uint64_t idx) {
        std::uint64_t cur = best.load(std::memory_order_relaxed);
        while (idx < cur && !best.compare_exchange_weak(cur, idx)) {}
    }
};

}  // namespace rmc

#endif

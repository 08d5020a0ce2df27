#ifndef OWDVV_UTIL_HPP
#define OWDVV_UTIL_HPP

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace owdvv {

/// Worker count: OWDVV_THREADS caps it; default min(hardware, 4).
inline unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    unsigned n = hw == 0 ? 1u : std::min(hw, 4u);
    if (const char* env = std::getenv("OWDVV_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) n = static_cast<unsigned>(v);
    }
    return n;
}

/// Runs fn(0..count-1), possibly concurrently; fn writes only to its own
/// slot so the result is order-independent.
inline void parallel_for(size_t count, const std::function<void(size_t)>& fn) {
    unsigned workers = worker_count();
    if (workers <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (unsigned w = 0; w < std::min<size_t>(workers, count); ++w)
        pool.emplace_back([&]() {
            for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

/// FNV-1a 64-bit, used for the report input hash.
inline std::string fnv1a_hex(const std::string& data) {
    unsigned long long h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[19];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return buf;
}

}  // namespace owdvv

#endif

#pragma once

#include <atomic>
#include <cstdint>

namespace ladic {

// Process-wide count of exact-arithmetic field operations, reported by the
// CLI for performance tracking. Relaxed ordering: only the total matters.
namespace detail {
inline std::atomic<std::uint64_t> g_op_count{0};
}

inline void count_op(std::uint64_t n = 1) { detail::g_op_count.fetch_add(n, std::memory_order_relaxed); }
inline std::uint64_t op_count() { return detail::g_op_count.load(std::memory_order_relaxed); }
inline void reset_op_count() { detail::g_op_count.store(0, std::memory_order_relaxed); }

} // namespace ladic

#pragma once

#include <atomic>
#include <string>

namespace ladic {

// Deliberate defects used only by the self-test mutation runs.
enum class Fault { none, phi_sign, ledger_off_by_one, unsaturated_lattice };

namespace detail {
inline std::atomic<Fault> g_fault{Fault::none};
}

inline void set_fault(Fault f) { detail::g_fault.store(f); }
inline Fault active_fault() { return detail::g_fault.load(); }
inline bool fault_active(Fault f) { return detail::g_fault.load() == f; }

Fault parse_fault(const std::string& name);
std::string to_string(Fault f);

} // namespace ladic

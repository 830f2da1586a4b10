#include "ladic/core/faults.hpp"

#include "ladic/core/error.hpp"

namespace ladic {

Fault parse_fault(const std::string& name)
{
    if (name == "none") return Fault::none;
    if (name == "phi-sign") return Fault::phi_sign;
    if (name == "ledger-off-by-one") return Fault::ledger_off_by_one;
    if (name == "unsaturated-lattice") return Fault::unsaturated_lattice;
    fail(ErrorKind::MalformedInput, "unknown mutation: " + name);
}

std::string to_string(Fault f)
{
    switch (f) {
    case Fault::none: return "none";
    case Fault::phi_sign: return "phi-sign";
    case Fault::ledger_off_by_one: return "ledger-off-by-one";
    case Fault::unsaturated_lattice: return "unsaturated-lattice";
    }
    return "none";
}

} // namespace ladic

#include "mubforge/phase.hpp"

#include <ostream>

namespace mubforge {

std::string Phase::str() const {
    Phase r = reduced();
    if (r.exponent() == 0) return "1";
    if (r.is_minus_one()) return "-1";
    return "q^" + std::to_string(r.exponent()) + "[" + std::to_string(r.order()) + "]";
}

std::ostream& operator<<(std::ostream& os, const Phase& p) { return os << p.str(); }

}  // namespace mubforge

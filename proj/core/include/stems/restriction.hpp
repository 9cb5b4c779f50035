#pragma once

#include "stems/virtual_rep.hpp"

namespace stems {

// Result of restricting along SO(3) -> O(2) or SU(2) -> Pin(2). The target
// rep omits trivial summands (they are not representable), so their total
// multiplicity is carried separately; it shifts fixed-point dimensions and
// degrees uniformly.
struct Restriction {
    VirtualRep rep;
    int trivial_mult = 0;

    friend bool operator==(const Restriction&, const Restriction&) = default;
};

// Supported pairs: (SO3, O2) and (SU2, Pin2). Anything else throws.
Restriction restrict_rep(const VirtualRep& u, Group target);

} // namespace stems

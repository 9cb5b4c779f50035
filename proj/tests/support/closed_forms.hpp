#pragma once

#include "stems/virtual_rep.hpp"

namespace testsupport {

using namespace stems;

// Dimension of the C_s fixed points of U, computed directly from the
// multiplicity list of U rather than from the weight multiset. Serves as an
// independent cross-check of dim_cyclic.
inline int fixed_dim_cyclic_direct(const VirtualRep& u, int s) {
    int total = 0;
    for (const auto& [irr, mult] : u.mults()) {
        int d = 0;
        switch (irr.kind) {
            case Irreducible::Kind::Z:
                // z(n) restricted to C_s is trivial iff s | n, else no fixed vectors.
                d = (irr.param % s == 0) ? 2 : 0;
                break;
            case Irreducible::Kind::Delta:
                d = 1;
                break;
            case Irreducible::Kind::Sigma:
                if (u.group() == Group::O2) {
                    d = (irr.param % s == 0) ? 2 : 0;
                } else {
                    // Pin2: sigma(n) pulls back from O(2) along the double
                    // cover, so the weight seen by C_s inside Pin(2) is 2n.
                    d = ((2 * irr.param) % s == 0) ? 2 : 0;
                }
                break;
            case Irreducible::Kind::H:
                // h(m) restricts to the torus as the weight-m plane twice over.
                d = (irr.param % s == 0) ? 4 : 0;
                break;
            case Irreducible::Kind::W: {
                int i = (irr.param - 1) / 2;
                if (u.group() == Group::SO3) {
                    // weights 0, 1..i: fixed dim = 1 + 2*#{1<=w<=i : s|w}
                    d = 1 + 2 * (i / s);
                } else {
                    // SU2: weights 0, 2, 4, .., 2i
                    int cnt = 0;
                    for (int w = 2; w <= 2 * i; w += 2)
                        if (w % s == 0) ++cnt;
                    d = 1 + 2 * cnt;
                }
                break;
            }
            case Irreducible::Kind::V: {
                // weights 1, 3, .., 2i-1 each doubled
                int i = irr.param / 2;
                int cnt = 0;
                for (int w = 1; w <= 2 * i - 1; w += 2)
                    if (w % s == 0) ++cnt;
                d = 4 * cnt;
                break;
            }
        }
        total += mult * d;
    }
    return total;
}

} // namespace testsupport

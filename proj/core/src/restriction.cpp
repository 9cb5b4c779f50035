#include "stems/restriction.hpp"

#include <stdexcept>

namespace stems {

Restriction restrict_rep(const VirtualRep& u, Group target) {
    bool so3_case = u.group() == Group::SO3 && target == Group::O2;
    bool su2_case = u.group() == Group::SU2 && target == Group::Pin2;
    if (!so3_case && !su2_case)
        throw std::invalid_argument(std::string("no restriction rule from ") +
                                    group_name(u.group()) + " to " + group_name(target));

    Restriction r{VirtualRep(target), 0};
    for (const auto& [irr, m] : u.mults()) {
        if (irr.kind == Irreducible::Kind::W) {
            // W(2i+1) decomposes under index-2 restriction as one character
            // (trivial for even i, the sign character for odd i) plus the
            // two-dimensional summands sigma(1..i).
            int i = (irr.param - 1) / 2;
            if (i % 2 == 1)
                r.rep.add(Irreducible::delta(), m);
            else
                r.trivial_mult += m;
            for (int j = 1; j <= i; ++j) r.rep.add(Irreducible::sigma(j), m);
        } else if (irr.kind == Irreducible::Kind::V) {
            // V(2i) restricts to the quaternionic summands of odd weight < 2i.
            int i = irr.param / 2;
            for (int j = 1; j <= i; ++j) r.rep.add(Irreducible::h(2 * j - 1), m);
        } else {
            throw std::invalid_argument("restrict_rep: unexpected summand " + irr.render());
        }
    }
    return r;
}

} // namespace stems

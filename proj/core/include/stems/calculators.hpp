#pragma once

#include <set>

#include "stems/block_answer.hpp"
#include "stems/dim_function.hpp"
#include "stems/line_set.hpp"

namespace stems {

// Stable stems of the representation sphere over SO(2) or Spin(2): a single
// degree-0 class when the dimension function never goes negative, one odd
// class above each exceptional cyclic subgroup, an infinite odd tail, and a
// rank-1 correction in degree -1 when the dimension function dips below its
// tail.
LineSet stems_torus(const VirtualRep& u);

// The cyclic block shared by the four non-torus groups, in terms of the
// cyclic dimension function and the parity of the sign-character
// multiplicity. Exceptional classes land in degrees d(s)+1 or d(s)+3
// depending on (d(s) - tail) mod 4 and that parity; the generic tail
// contributes a step-4 infinite line.
LineSet cyclic_block_from_dim(const DimFunction& d, bool b_odd);

// Cyclic block for a rep of O(2) or Pin(2).
LineSet stems_cyclic_block(const VirtualRep& u);

// Dihedral (or quaternion) block: the infinite degree-0 cluster of sections
// plus one spot per dihedral order 2t where the stalk is modified, present
// only when the stalk carries no sign twist. For SO(3) and SU(2) the orders
// in `omit` correspond to subgroups that are cyclic or exceptional rather
// than dihedral and are excluded.
LineSet stems_dihedral_block(const VirtualRep& u, const std::set<int>& omit = {});

// The five isolated blocks of SO(3) or SU(2), in a fixed order. A block is a
// single spot at the fixed-point dimension when the Weyl group acts with
// trivial determinant there, and empty otherwise.
std::vector<std::pair<IsolatedTag, LineSet>> stems_isolated(const VirtualRep& u);

// Full answer, dispatching on the group.
BlockAnswer stems(const VirtualRep& u);

} // namespace stems

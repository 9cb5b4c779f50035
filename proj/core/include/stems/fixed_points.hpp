#pragma once

#include "stems/class_tables.hpp"
#include "stems/cyclotomic.hpp"
#include "stems/subgroup.hpp"
#include "stems/virtual_rep.hpp"

namespace stems {

// Character of W(2i+1) at a rotation of angle 2pi*k/n, as the exact sum
// zeta^{-ik} + ... + zeta^{ik} of roots of unity (zeta = zeta_n).
CyclotomicInt char_value(int i, int n, int k);

// dim of the fixed subspace of W(2i+1) under the given rotation group,
// computed by exact character averaging.
long long fixed_dim(int i, const RotationClassTable& table);
long long fixed_dim(int i, RotationGroup g);

// Fixed-point dimension of a virtual rep of SO(3) at one of the plain
// isolated subgroup classes, or of SU(2) at one of the binary ones. The
// binary groups reduce to their rotation images: W-summands restrict through
// the cover, V-summands have no fixed vectors under any subgroup containing
// the center.
long long fixed_dim_virtual(const VirtualRep& u, IsolatedTag h);

// Whether the Weyl group of the subgroup class acts with trivial determinant
// on the fixed subspace of u. Only meaningful for the classes with a
// nontrivial finite Weyl group: A4 and the Klein group, plus their binary
// counterparts. The determinant of the order-2 (resp. order-6) action is
// read off by comparing fixed dimensions against the extension by the
// relevant outer element.
bool weyl_det_trivial(const VirtualRep& u, IsolatedTag h);

} // namespace stems

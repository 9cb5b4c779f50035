#pragma once

#include <compare>
#include <stdexcept>
#include <string>

#include "stems/group.hpp"

namespace stems {

// Conjugacy classes of closed subgroups with finite index in their
// normalizer, i.e. the points that can carry provenance labels in an answer.
// For SO(3) and SU(2) the five exceptional classes are listed explicitly;
// the SU(2) ones are the binary (double cover) counterparts.
enum class IsolatedTag {
    SO3Full,
    A5,
    S4,
    A4,
    KleinD4,
    SU2Full,
    BinI, // binary icosahedral, covers A5
    BinO, // binary octahedral, covers S4
    BinT, // binary tetrahedral, covers A4
    Q8,   // quaternion group, covers the Klein group
};

bool is_tilde(IsolatedTag t);
std::string isolated_name(IsolatedTag t);

// Order of the (finite) Weyl group N(H)/H acting on the stalk at H, for the
// subgroup classes where that group is finite.
int weyl_order(IsolatedTag t);

struct SubgroupDescriptor {
    enum class Kind {
        Cyclic,    // rotation subgroup of order param
        FullTorus, // SO(2), or Spin(2) inside the double covers
        Dihedral,  // dihedral subgroup of order param (param = 2t)
        FullO2,
        Quaternion, // binary dihedral subgroup of order param (param = 4t)
        FullPin2,
        Isolated,
    };

    Kind kind;
    int param = 0;
    IsolatedTag tag = IsolatedTag::SO3Full; // meaningful only for Isolated

    friend auto operator<=>(const SubgroupDescriptor&, const SubgroupDescriptor&) = default;

    static SubgroupDescriptor cyclic(int s) { return {Kind::Cyclic, s}; }
    static SubgroupDescriptor full_torus() { return {Kind::FullTorus, 0}; }
    static SubgroupDescriptor dihedral(int order) { return {Kind::Dihedral, order}; }
    static SubgroupDescriptor full_o2() { return {Kind::FullO2, 0}; }
    static SubgroupDescriptor quaternion(int order) { return {Kind::Quaternion, order}; }
    static SubgroupDescriptor full_pin2() { return {Kind::FullPin2, 0}; }
    static SubgroupDescriptor isolated(IsolatedTag t) {
        return {Kind::Isolated, 0, t};
    }

    std::string render() const;
};

} // namespace stems

#pragma once

#include <string>
#include <vector>

namespace stems {

// The five finite rotation groups whose character data the calculator needs:
// the three exceptional rotation groups and the two dihedral-type groups
// entering the Weyl determinant tests.
enum class RotationGroup { A4, S4, A5, KleinD4, D8 };

std::string rotation_group_name(RotationGroup g);

// One conjugacy class of rotations: how many elements, the rotation order n,
// and which primitive power k of a fixed 2pi/n rotation the class contains.
// All class members rotate by the same angle 2pi*k/n, which determines the
// character value of every W(2i+1).
struct RotationClass {
    int size;
    int order;
    int exponent;
};

struct RotationClassTable {
    RotationGroup tag;
    int group_order;
    std::vector<RotationClass> classes;
};

const RotationClassTable& class_table(RotationGroup g);

} // namespace stems

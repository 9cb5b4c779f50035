#include "stems/class_tables.hpp"

#include <stdexcept>

namespace stems {

std::string rotation_group_name(RotationGroup g) {
    switch (g) {
        case RotationGroup::A4: return "A4";
        case RotationGroup::S4: return "S4";
        case RotationGroup::A5: return "A5";
        case RotationGroup::KleinD4: return "D4";
        case RotationGroup::D8: return "D8";
    }
    throw std::logic_error("rotation_group_name: bad enum");
}

namespace {

RotationClassTable make_table(RotationGroup tag, int order, std::vector<RotationClass> classes) {
    int total = 0;
    bool has_identity = false;
    for (const auto& c : classes) {
        total += c.size;
        if (c.order == 1) has_identity = true;
    }
    if (total != order || !has_identity)
        throw std::logic_error("class table inconsistent for " + rotation_group_name(tag));
    return {tag, order, std::move(classes)};
}

// Axis/angle census of the five rotation groups. Characters of rotations
// depend only on the angle, so classes with equal angle are merged.
//
//   Klein group: identity and the three half-turns about coordinate axes.
//   D8 (symmetries of a square in SO(3)): identity, two quarter-turns about
//     the main axis, the half-turn about it, four half-turns about
//     horizontal axes.
//   A4: identity, three half-turns (edge midpoints), eight third-turns
//     (4 body diagonals, two directions each).
//   S4: identity, six quarter-turns (3 face axes, two directions), three
//     half-turns about face axes, eight third-turns, six half-turns about
//     edge axes.
//   A5: identity, fifteen half-turns (edge axes), twenty third-turns (10
//     face axes of the icosahedron), twelve fifth-turns and twelve
//     double-fifth-turns (6 vertex axes, two directions each).
const RotationClassTable kKlein = make_table(RotationGroup::KleinD4, 4,
                                             {{1, 1, 0}, {3, 2, 1}});
const RotationClassTable kD8 = make_table(RotationGroup::D8, 8,
                                          {{1, 1, 0}, {2, 4, 1}, {1, 2, 1}, {4, 2, 1}});
const RotationClassTable kA4 = make_table(RotationGroup::A4, 12,
                                          {{1, 1, 0}, {3, 2, 1}, {8, 3, 1}});
const RotationClassTable kS4 = make_table(RotationGroup::S4, 24,
                                          {{1, 1, 0}, {6, 4, 1}, {3, 2, 1}, {8, 3, 1}, {6, 2, 1}});
const RotationClassTable kA5 = make_table(RotationGroup::A5, 60,
                                          {{1, 1, 0}, {15, 2, 1}, {20, 3, 1}, {12, 5, 1}, {12, 5, 2}});

} // namespace

const RotationClassTable& class_table(RotationGroup g) {
    switch (g) {
        case RotationGroup::A4: return kA4;
        case RotationGroup::S4: return kS4;
        case RotationGroup::A5: return kA5;
        case RotationGroup::KleinD4: return kKlein;
        case RotationGroup::D8: return kD8;
    }
    throw std::logic_error("class_table: bad enum");
}

} // namespace stems

#pragma once

#include <stdexcept>
#include <string>

namespace stems {

// The six rank-1 compact Lie groups handled by the calculator.
enum class Group { SO2, Spin2, O2, SO3, Pin2, SU2 };

inline bool is_torus(Group g) { return g == Group::SO2 || g == Group::Spin2; }
inline bool has_dihedral_part(Group g) {
    return g == Group::O2 || g == Group::SO3 || g == Group::Pin2 || g == Group::SU2;
}
inline bool has_isolated_part(Group g) { return g == Group::SO3 || g == Group::SU2; }
inline bool is_double_cover_family(Group g) {
    return g == Group::Spin2 || g == Group::Pin2 || g == Group::SU2;
}

// Number of blocks in the full answer: one for the torus groups, cyclic plus
// dihedral (or quaternion) for O(2) and Pin(2), and those plus the five
// isolated subgroup classes for SO(3) and SU(2).
inline int block_count(Group g) {
    if (is_torus(g)) return 1;
    if (g == Group::O2 || g == Group::Pin2) return 2;
    return 7;
}

inline const char* group_name(Group g) {
    switch (g) {
        case Group::SO2: return "so2";
        case Group::Spin2: return "spin2";
        case Group::O2: return "o2";
        case Group::SO3: return "so3";
        case Group::Pin2: return "pin2";
        case Group::SU2: return "su2";
    }
    throw std::logic_error("group_name: bad enum");
}

inline Group group_from_name(const std::string& s) {
    if (s == "so2") return Group::SO2;
    if (s == "spin2") return Group::Spin2;
    if (s == "o2") return Group::O2;
    if (s == "so3") return Group::SO3;
    if (s == "pin2") return Group::Pin2;
    if (s == "su2") return Group::SU2;
    throw std::invalid_argument("unknown group: " + s);
}

} // namespace stems

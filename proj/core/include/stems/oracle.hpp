#pragma once

#include <array>
#include <map>
#include <vector>

#include "stems/class_tables.hpp"
#include "stems/extended_nat.hpp"
#include "stems/virtual_rep.hpp"

namespace stems::oracle {

// Degreewise truncation of the torsion injective resolution: for each cyclic
// order s <= s_max, the piece above s occupies homotopy degrees
// k >= d(s) + 1 with k = d(s) + 1 (mod 2). For the sign-twisted variants the
// Weyl weight in module degree m alternates as (-1)^((m + b)/2).
//
// The oracle recounts dimensions degree by degree from this table, with no
// line arithmetic, and flags degrees fed by the generic tail as infinite.
// s_max must exceed every torus weight of the input or the truncation drops
// exceptional pieces; that case throws.
struct TruncatedTorsionModule {
    int s_max = 0;
    int lo = 0;
    int hi = 0;
    // occupied[s-1][k-lo] for 1 <= s <= s_max, lo <= k <= hi
    std::vector<std::vector<bool>> occupied;

    bool piece_at(int s, int k) const { return occupied[s - 1][k - lo]; }
};

std::map<int, ExtendedNat> oracle_torus(const VirtualRep& u, int lo, int hi, int s_max = 64);

// Cyclic block of O(2) or Pin(2), recounted degreewise with the alternating
// Weyl weights.
std::map<int, ExtendedNat> oracle_o2_cyclic(const VirtualRep& u, int lo, int hi, int s_max = 64);

using Mat3 = std::array<double, 9>;

// The elements of a finite rotation group, enumerated by closing a generator
// set under multiplication of explicit 3x3 matrices.
const std::vector<Mat3>& rotation_group_elements(RotationGroup g);

// Floating-point recount of fixed_dim(i, g): average over the enumerated
// elements of the character of W(2i+1), evaluated through traces of
// symmetric powers of the actual matrices. Rounds to the nearest integer and
// requires agreement within 1e-6.
long long oracle_char_matrix(RotationGroup g, int i);

} // namespace stems::oracle

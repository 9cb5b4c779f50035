#pragma once

#include <map>
#include <utility>

#include "stems/virtual_rep.hpp"
#include "stems/weights.hpp"

namespace stems {

// An eventually constant function on positive integers: finitely many
// exceptional arguments, a tail value everywhere else. Fixed-point dimensions
// of virtual representations along the cyclic or dihedral families take this
// shape.
class DimFunction {
public:
    DimFunction() = default;
    DimFunction(std::map<int, int> exceptions, int tail);

    int value(int s) const {
        auto it = exceptions_.find(s);
        return it == exceptions_.end() ? tail_ : it->second;
    }
    int tail() const { return tail_; }
    const std::map<int, int>& exceptions() const { return exceptions_; }

    int min() const;
    int max() const;
    std::pair<int, int> range() const { return {min(), max()}; }

    friend bool operator==(const DimFunction&, const DimFunction&) = default;

private:
    std::map<int, int> exceptions_; // entries always differ from tail_
    int tail_ = 0;
};

// Fixed-point dimension of u at the cyclic subgroup of order s (the subgroup
// generated by a rotation of order s; for the double covers, the preimage of
// that rotation subgroup meets each weight the same way, so the same weight
// count applies).
int dim_cyclic(const VirtualRep& u, int s);

// dim_cyclic as a function of s, exceptions collected up to the largest
// torus weight of u.
DimFunction dim_function_cyclic(const VirtualRep& u);

// Fixed-point dimension at the dihedral subgroup of order 2t (for O(2) and
// SO(3)) or its binary double cover of order 4t (for Pin(2) and SU(2)).
int dim_dihedral(const VirtualRep& u, int t);

// dim_dihedral as a function of t.
DimFunction dim_function_dihedral(const VirtualRep& u);

enum class Parity { Even, Odd };

// Parity of the multiplicity sum over the 2-dimensional summands sigma(n)
// (after restriction to O(2) or Pin(2) when needed) with t | n but 2t !| n.
// Detects the sign twist on the dihedral stalk at order 2t.
Parity dihedral_sign(const VirtualRep& u, int t);

} // namespace stems

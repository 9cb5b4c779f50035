#pragma once

#include <map>
#include <string>

#include "stems/group.hpp"
#include "stems/irreducible.hpp"

namespace stems {

// A finitely supported formal integer combination of nontrivial irreducibles
// of a fixed group. The trivial representation is not representable, so every
// value has zero G-fixed part. Zero multiplicities are never stored.
class VirtualRep {
public:
    explicit VirtualRep(Group g) : group_(g) {}

    Group group() const { return group_; }
    const std::map<Irreducible, int>& mults() const { return mults_; }
    int mult_of(const Irreducible& irr) const {
        auto it = mults_.find(irr);
        return it == mults_.end() ? 0 : it->second;
    }
    bool is_zero() const { return mults_.empty(); }

    VirtualRep& add(const Irreducible& irr, int mult);

    VirtualRep& operator+=(const VirtualRep& o);
    VirtualRep& operator-=(const VirtualRep& o);
    friend VirtualRep operator+(VirtualRep a, const VirtualRep& b) { return a += b; }
    friend VirtualRep operator-(VirtualRep a, const VirtualRep& b) { return a -= b; }
    VirtualRep operator-() const;
    VirtualRep scaled(int k) const;

    friend bool operator==(const VirtualRep&, const VirtualRep&) = default;

    std::string render() const;

private:
    Group group_;
    std::map<Irreducible, int> mults_;
};

// Multiplicity of the sign character Delta. Defined for O(2) and Pin(2).
int b_of(const VirtualRep& u);

} // namespace stems

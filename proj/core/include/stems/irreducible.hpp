#pragma once

#include <compare>
#include <string>

#include "stems/group.hpp"

namespace stems {

// A nontrivial irreducible real representation of one of the six groups.
//
//   Z(n)     rotation weight n of SO(2) or Spin(2), n >= 1 (real dim 2)
//   Delta    the sign character of O(2) or Pin(2) (real dim 1)
//   Sigma(n) the 2-dimensional rep of O(2) pulled from weight n, n >= 1;
//            for Pin(2) the underlying Spin(2)-weight is 2n
//   H(m)     the quaternionic irreducible of Pin(2) with odd weight m (real dim 4)
//   W(d)     the odd-dimensional irreducible of SO(3) or SU(2), d = 2i+1 >= 3
//   V(d)     the even symplectic irreducible of SU(2), d even >= 2 (real dim 2d)
struct Irreducible {
    enum class Kind { Z, Delta, Sigma, H, W, V };

    Kind kind;
    int param; // weight or dimension label; 0 for Delta

    friend auto operator<=>(const Irreducible&, const Irreducible&) = default;

    bool valid_for(Group g) const;
    int real_dim() const;
    std::string render() const;

    static Irreducible z(int n) { return {Kind::Z, n}; }
    static Irreducible delta() { return {Kind::Delta, 0}; }
    static Irreducible sigma(int n) { return {Kind::Sigma, n}; }
    static Irreducible h(int m) { return {Kind::H, m}; }
    static Irreducible w(int d) { return {Kind::W, d}; }
    static Irreducible v(int d) { return {Kind::V, d}; }
};

} // namespace stems

#pragma once

#include <map>

#include "stems/virtual_rep.hpp"

namespace stems {

// Restriction of a virtual representation to the maximal torus, recorded as
// the multiplicity of the zero weight plus multiplicities of the positive
// weights (weights come in +/- pairs; one entry stands for the pair).
// Multiplicities may be negative for virtual representations.
struct WeightMultiset {
    int zero_mult = 0;
    std::map<int, int> pairs; // positive weight -> multiplicity, zeros pruned

    void add_zero(int mult) { zero_mult += mult; }
    void add_pair(int weight, int mult);
    int pair_mult(int weight) const {
        auto it = pairs.find(weight);
        return it == pairs.end() ? 0 : it->second;
    }
    int max_weight() const { return pairs.empty() ? 0 : pairs.rbegin()->first; }
    int real_dim() const;

    friend bool operator==(const WeightMultiset&, const WeightMultiset&) = default;
};

WeightMultiset restrict_to_torus(const VirtualRep& u);

} // namespace stems

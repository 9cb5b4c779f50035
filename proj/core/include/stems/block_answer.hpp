#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stems/line_set.hpp"
#include "stems/virtual_rep.hpp"

namespace stems {

// Identifies one block of the answer: the cyclic part, the dihedral (or
// quaternion) part, or one of the isolated subgroup classes.
struct BlockId {
    enum class Kind { Cyclic, Dihedral, Quaternion, Isolated };

    Kind kind;
    IsolatedTag tag = IsolatedTag::SO3Full; // meaningful only for Isolated

    friend auto operator<=>(const BlockId&, const BlockId&) = default;

    static BlockId cyclic() { return {Kind::Cyclic}; }
    static BlockId dihedral() { return {Kind::Dihedral}; }
    static BlockId quaternion() { return {Kind::Quaternion}; }
    static BlockId isolated(IsolatedTag t) { return {Kind::Isolated, t}; }

    std::string render() const;
};

// The complete graded answer for one virtual representation, split by block.
// Every block the group owns is present, possibly with an empty line set.
struct BlockAnswer {
    Group group;
    VirtualRep rep;
    std::vector<std::pair<BlockId, LineSet>> blocks;
    std::pair<int, int> range; // min and max of the cyclic dimension function

    explicit BlockAnswer(VirtualRep r)
        : group(r.group()), rep(std::move(r)), range{0, 0} {}

    ExtendedNat query(int degree) const;
    std::map<int, ExtendedNat> window(int lo, int hi) const;
    const LineSet* find(const BlockId& id) const;

    BlockAnswer shifted(int d) const;
};

} // namespace stems

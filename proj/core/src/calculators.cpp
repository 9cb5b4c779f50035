#include "stems/calculators.hpp"

#include <algorithm>
#include <stdexcept>

#include "stems/fixed_points.hpp"
#include "stems/restriction.hpp"

namespace stems {

namespace {

int mod4(int x) { return ((x % 4) + 4) % 4; }

Line spot(int degree, ExtendedNat mult, LineLabel label) { return {degree, 0, mult, label}; }

const LineLabel kTail = LineLabel::generic_tail();
const LineLabel kTorusPoint = LineLabel::of(SubgroupDescriptor::full_torus());

} // namespace

ExtendedNat BlockAnswer::query(int degree) const {
    ExtendedNat total;
    for (const auto& [id, ls] : blocks) {
        (void)id;
        total += ls.query(degree);
    }
    return total;
}

std::map<int, ExtendedNat> BlockAnswer::window(int lo, int hi) const {
    if (lo > hi) throw std::invalid_argument("BlockAnswer::window: empty range");
    std::map<int, ExtendedNat> w;
    for (int k = lo; k <= hi; ++k) w.emplace(k, query(k));
    return w;
}

const LineSet* BlockAnswer::find(const BlockId& id) const {
    for (const auto& [bid, ls] : blocks)
        if (bid == id) return &ls;
    return nullptr;
}

BlockAnswer BlockAnswer::shifted(int d) const {
    BlockAnswer out = *this;
    for (auto& [id, ls] : out.blocks) {
        (void)id;
        ls = ls.shifted(d);
    }
    out.range = {range.first + d, range.second + d};
    return out;
}

std::string BlockId::render() const {
    switch (kind) {
        case Kind::Cyclic: return "cyclic";
        case Kind::Dihedral: return "dihedral";
        case Kind::Quaternion: return "quaternion";
        case Kind::Isolated: return "isolated:" + isolated_name(tag);
    }
    throw std::logic_error("BlockId::render: bad kind");
}

LineSet stems_torus(const VirtualRep& u) {
    if (!is_torus(u.group()))
        throw std::invalid_argument("stems_torus: group must be SO(2) or Spin(2)");
    DimFunction d = dim_function_cyclic(u);
    if (d.tail() != 0) throw std::logic_error("stems_torus: nonzero fixed part");

    std::vector<Line> lines;
    std::vector<Correction> corrections;
    if (d.min() >= 0) lines.push_back(spot(0, ExtendedNat(1), kTorusPoint));
    for (const auto& [s, v] : d.exceptions())
        lines.push_back({v + 1, 2, ExtendedNat(1), LineLabel::of(SubgroupDescriptor::cyclic(s))});
    lines.push_back({1, 2, ExtendedNat::infinity(), kTail});
    if (d.min() < 0) corrections.push_back({-1, 1});
    return LineSet(std::move(lines), std::move(corrections));
}

LineSet cyclic_block_from_dim(const DimFunction& d, bool b_odd) {
    int tail = d.tail();
    int min_rel = d.min() - tail;

    std::vector<Line> lines;
    std::vector<Correction> corrections;
    if (!b_odd && min_rel >= 0) lines.push_back(spot(tail, ExtendedNat(1), kTorusPoint));
    for (const auto& [s, v] : d.exceptions()) {
        int r = mod4(v - tail);
        if (r % 2 != 0)
            throw std::logic_error("cyclic_block_from_dim: dimension parity broken");
        // The class above an exceptional subgroup lands one or three degrees
        // above the fixed dimension; which one flips with (v - tail) mod 4
        // and with the sign-character parity.
        int offset = (r == 0) == b_odd ? 1 : 3;
        lines.push_back({v + offset, 4, ExtendedNat(1), LineLabel::of(SubgroupDescriptor::cyclic(s))});
    }
    lines.push_back({tail + (b_odd ? 1 : 3), 4, ExtendedNat::infinity(), kTail});
    if (!b_odd && min_rel < 0) corrections.push_back({tail - 1, 1});
    return LineSet(std::move(lines), std::move(corrections));
}

LineSet stems_cyclic_block(const VirtualRep& u) {
    if (u.group() != Group::O2 && u.group() != Group::Pin2)
        throw std::invalid_argument("stems_cyclic_block: group must be O(2) or Pin(2)");
    DimFunction d = dim_function_cyclic(u);
    int b = b_of(u);
    if (d.tail() != b) throw std::logic_error("stems_cyclic_block: tail differs from b");
    return cyclic_block_from_dim(d, b % 2 != 0);
}

LineSet stems_dihedral_block(const VirtualRep& u, const std::set<int>& omit) {
    if (!has_dihedral_part(u.group()))
        throw std::invalid_argument("stems_dihedral_block: group has no dihedral subgroups");
    for (int t : omit)
        if (t != 1 && t != 2)
            throw std::invalid_argument("stems_dihedral_block: omit may only contain 1 and 2");

    bool binary = is_double_cover_family(u.group());
    DimFunction dp = dim_function_dihedral(u);

    std::vector<Line> lines;
    // Every unmodified stalk contributes its sections in one degree; there
    // are infinitely many dihedral subgroups, so this cluster is infinite.
    lines.push_back(spot(dp.tail(), ExtendedNat::infinity(), LineLabel::degree_zero_sections()));

    int bound = dp.exceptions().empty() ? 0 : dp.exceptions().rbegin()->first;
    bound = std::max(bound, restrict_to_torus(u).max_weight());
    for (int t = 1; t <= bound; ++t) {
        if (omit.count(t)) continue;
        bool twisted = dihedral_sign(u, t) == Parity::Odd;
        if (dp.value(t) == dp.tail() && !twisted) continue;
        if (twisted) continue; // sign-twisted stalks have no invariant sections
        SubgroupDescriptor sub = binary ? SubgroupDescriptor::quaternion(4 * t)
                                        : SubgroupDescriptor::dihedral(2 * t);
        lines.push_back(spot(dp.value(t), ExtendedNat(1), LineLabel::of(sub)));
    }
    return LineSet(std::move(lines), {});
}

std::vector<std::pair<IsolatedTag, LineSet>> stems_isolated(const VirtualRep& u) {
    if (!has_isolated_part(u.group()))
        throw std::invalid_argument("stems_isolated: group must be SO(3) or SU(2)");
    bool tilde = u.group() == Group::SU2;
    std::vector<IsolatedTag> tags =
        tilde ? std::vector<IsolatedTag>{IsolatedTag::SU2Full, IsolatedTag::BinI, IsolatedTag::BinO,
                                         IsolatedTag::BinT, IsolatedTag::Q8}
              : std::vector<IsolatedTag>{IsolatedTag::SO3Full, IsolatedTag::A5, IsolatedTag::S4,
                                         IsolatedTag::A4, IsolatedTag::KleinD4};

    std::vector<std::pair<IsolatedTag, LineSet>> out;
    for (IsolatedTag tag : tags) {
        long long fd = fixed_dim_virtual(u, tag);
        bool keep = weyl_order(tag) == 1 || weyl_det_trivial(u, tag);
        LineSet ls;
        if (keep) {
            ls = LineSet({spot(static_cast<int>(fd), ExtendedNat(1),
                               LineLabel::of(SubgroupDescriptor::isolated(tag)))},
                         {});
        }
        out.emplace_back(tag, std::move(ls));
    }
    return out;
}

BlockAnswer stems(const VirtualRep& u) {
    BlockAnswer ans(u);
    ans.range = dim_function_cyclic(u).range();
    switch (u.group()) {
        case Group::SO2:
        case Group::Spin2:
            ans.blocks.emplace_back(BlockId::cyclic(), stems_torus(u));
            break;
        case Group::O2:
            ans.blocks.emplace_back(BlockId::cyclic(), stems_cyclic_block(u));
            ans.blocks.emplace_back(BlockId::dihedral(), stems_dihedral_block(u));
            break;
        case Group::Pin2:
            ans.blocks.emplace_back(BlockId::cyclic(), stems_cyclic_block(u));
            ans.blocks.emplace_back(BlockId::quaternion(), stems_dihedral_block(u));
            break;
        case Group::SO3:
        case Group::SU2: {
            Group target = u.group() == Group::SO3 ? Group::O2 : Group::Pin2;
            Restriction r = restrict_rep(u, target);
            bool b_odd = r.rep.mult_of(Irreducible::delta()) % 2 != 0;
            ans.blocks.emplace_back(BlockId::cyclic(),
                                    cyclic_block_from_dim(dim_function_cyclic(u), b_odd));
            BlockId family = u.group() == Group::SO3 ? BlockId::dihedral() : BlockId::quaternion();
            ans.blocks.emplace_back(family, stems_dihedral_block(u, {1, 2}));
            for (auto& [tag, ls] : stems_isolated(u))
                ans.blocks.emplace_back(BlockId::isolated(tag), std::move(ls));
            break;
        }
    }
    if (static_cast<int>(ans.blocks.size()) != block_count(u.group()))
        throw std::logic_error("stems: block census mismatch");
    return ans;
}

} // namespace stems

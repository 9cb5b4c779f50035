#include "stems/fixed_points.hpp"

#include <stdexcept>

namespace stems {

namespace {

constexpr int kRootModulus = 60; // lcm of the rotation orders that occur

RotationGroup rotation_image(IsolatedTag t) {
    switch (t) {
        case IsolatedTag::A5:
        case IsolatedTag::BinI:
            return RotationGroup::A5;
        case IsolatedTag::S4:
        case IsolatedTag::BinO:
            return RotationGroup::S4;
        case IsolatedTag::A4:
        case IsolatedTag::BinT:
            return RotationGroup::A4;
        case IsolatedTag::KleinD4:
        case IsolatedTag::Q8:
            return RotationGroup::KleinD4;
        default:
            throw std::invalid_argument("no rotation image for " + isolated_name(t));
    }
}

// Sum of m * fixed_dim(i, g) over the W(2i+1)-summands of u. V-summands
// contribute nothing: the center acts by -1 on them, and every relevant
// subgroup contains the center.
long long fixed_dim_table(const VirtualRep& u, RotationGroup g) {
    long long total = 0;
    for (const auto& [irr, m] : u.mults()) {
        if (irr.kind == Irreducible::Kind::W)
            total += static_cast<long long>(m) * fixed_dim((irr.param - 1) / 2, g);
        else if (irr.kind != Irreducible::Kind::V)
            throw std::invalid_argument("fixed_dim_virtual: unexpected summand " + irr.render());
    }
    return total;
}

void check_family(const VirtualRep& u, IsolatedTag h) {
    if (u.group() == Group::SO3 && !is_tilde(h)) return;
    if (u.group() == Group::SU2 && is_tilde(h)) return;
    throw std::invalid_argument("isolated subgroup " + isolated_name(h) + " does not live in " +
                                group_name(u.group()));
}

} // namespace

CyclotomicInt char_value(int i, int n, int k) {
    if (i < 0) throw std::invalid_argument("char_value: index must be >= 0");
    if (n < 1 || kRootModulus % n != 0)
        throw std::invalid_argument("char_value: rotation order must divide 60");
    CyclotomicInt sum(kRootModulus);
    long long stride = static_cast<long long>(k) * (kRootModulus / n);
    for (int j = -i; j <= i; ++j) sum += CyclotomicInt::root_power(kRootModulus, j * stride);
    return sum;
}

long long fixed_dim(int i, const RotationClassTable& table) {
    CyclotomicInt sum(kRootModulus);
    for (const auto& c : table.classes) {
        CyclotomicInt v = char_value(i, c.order, c.exponent);
        v.scale(c.size);
        sum += v;
    }
    long long total = sum.to_integer();
    if (total % table.group_order != 0)
        throw std::logic_error("fixed_dim: character average is not integral");
    long long d = total / table.group_order;
    if (d < 0) throw std::logic_error("fixed_dim: negative dimension");
    return d;
}

long long fixed_dim(int i, RotationGroup g) { return fixed_dim(i, class_table(g)); }

long long fixed_dim_virtual(const VirtualRep& u, IsolatedTag h) {
    check_family(u, h);
    if (h == IsolatedTag::SO3Full || h == IsolatedTag::SU2Full) return 0;
    return fixed_dim_table(u, rotation_image(h));
}

bool weyl_det_trivial(const VirtualRep& u, IsolatedTag h) {
    check_family(u, h);
    switch (h) {
        case IsolatedTag::A4:
        case IsolatedTag::BinT: {
            // Order-2 Weyl group; its generator extends A4 to S4, and the
            // determinant on the fixed space is read from the drop in fixed
            // dimension.
            long long diff = fixed_dim_table(u, RotationGroup::A4) -
                             fixed_dim_table(u, RotationGroup::S4);
            return diff % 2 == 0;
        }
        case IsolatedTag::KleinD4:
        case IsolatedTag::Q8: {
            // Weyl group S3 permuting the three half-turn axes. Its 3-cycles
            // act with determinant +1 (real order-3 elements always do), so
            // the determinant character is trivial exactly when a
            // transposition acts with determinant +1; the transposition
            // extends the Klein group to D8.
            long long diff = fixed_dim_table(u, RotationGroup::KleinD4) -
                             fixed_dim_table(u, RotationGroup::D8);
            return diff % 2 == 0;
        }
        default:
            throw std::invalid_argument("weyl_det_trivial: " + isolated_name(h) +
                                        " has no nontrivial Weyl action");
    }
}

} // namespace stems

#include "stems/dim_function.hpp"

#include <algorithm>
#include <stdexcept>

#include "stems/restriction.hpp"

namespace stems {

DimFunction::DimFunction(std::map<int, int> exceptions, int tail)
    : exceptions_(std::move(exceptions)), tail_(tail) {
    for (auto it = exceptions_.begin(); it != exceptions_.end();) {
        if (it->first < 1) throw std::invalid_argument("DimFunction: argument must be >= 1");
        it = it->second == tail_ ? exceptions_.erase(it) : std::next(it);
    }
}

int DimFunction::min() const {
    int m = tail_;
    for (const auto& [s, v] : exceptions_) {
        (void)s;
        m = std::min(m, v);
    }
    return m;
}

int DimFunction::max() const {
    int m = tail_;
    for (const auto& [s, v] : exceptions_) {
        (void)s;
        m = std::max(m, v);
    }
    return m;
}

int dim_cyclic(const VirtualRep& u, int s) {
    if (s < 1) throw std::invalid_argument("dim_cyclic: order must be >= 1");
    WeightMultiset ws = restrict_to_torus(u);
    int d = ws.zero_mult;
    for (const auto& [w, m] : ws.pairs)
        if (w % s == 0) d += 2 * m;
    return d;
}

DimFunction dim_function_cyclic(const VirtualRep& u) {
    WeightMultiset ws = restrict_to_torus(u);
    int tail = ws.zero_mult;
    std::map<int, int> exceptions;
    for (int s = 1; s <= ws.max_weight(); ++s) {
        int d = tail;
        for (const auto& [w, m] : ws.pairs)
            if (w % s == 0) d += 2 * m;
        if (d != tail) exceptions.emplace(s, d);
    }
    return DimFunction(std::move(exceptions), tail);
}

namespace {

// The dihedral data of a rep: multiplicities of the two-dimensional
// summands by index, plus the multiplicity of trivial summands picked up
// when restricting from SO(3) or SU(2).
struct DihedralProfile {
    std::map<int, int> sigma; // sigma index -> multiplicity
    int trivial_mult = 0;
};

DihedralProfile dihedral_profile(const VirtualRep& u) {
    const VirtualRep* rep = &u;
    Restriction restricted{VirtualRep(Group::O2), 0};
    DihedralProfile p;
    switch (u.group()) {
        case Group::O2:
        case Group::Pin2:
            break;
        case Group::SO3:
            restricted = restrict_rep(u, Group::O2);
            rep = &restricted.rep;
            p.trivial_mult = restricted.trivial_mult;
            break;
        case Group::SU2:
            restricted = restrict_rep(u, Group::Pin2);
            rep = &restricted.rep;
            p.trivial_mult = restricted.trivial_mult;
            break;
        default:
            throw std::invalid_argument("no dihedral subgroups for " + std::string(group_name(u.group())));
    }
    for (const auto& [irr, m] : rep->mults())
        if (irr.kind == Irreducible::Kind::Sigma) p.sigma.emplace(irr.param, m);
    return p;
}

} // namespace

int dim_dihedral(const VirtualRep& u, int t) {
    if (t < 1) throw std::invalid_argument("dim_dihedral: order parameter must be >= 1");
    DihedralProfile p = dihedral_profile(u);
    int d = p.trivial_mult;
    for (const auto& [n, m] : p.sigma)
        if (n % t == 0) d += m;
    return d;
}

DimFunction dim_function_dihedral(const VirtualRep& u) {
    DihedralProfile p = dihedral_profile(u);
    int max_index = p.sigma.empty() ? 0 : p.sigma.rbegin()->first;
    std::map<int, int> exceptions;
    for (int t = 1; t <= max_index; ++t) {
        int d = p.trivial_mult;
        for (const auto& [n, m] : p.sigma)
            if (n % t == 0) d += m;
        if (d != p.trivial_mult) exceptions.emplace(t, d);
    }
    return DimFunction(std::move(exceptions), p.trivial_mult);
}

Parity dihedral_sign(const VirtualRep& u, int t) {
    if (t < 1) throw std::invalid_argument("dihedral_sign: order parameter must be >= 1");
    DihedralProfile p = dihedral_profile(u);
    int sum = 0;
    for (const auto& [n, m] : p.sigma)
        if (n % t == 0 && n % (2 * t) != 0) sum += m;
    return sum % 2 == 0 ? Parity::Even : Parity::Odd;
}

} // namespace stems

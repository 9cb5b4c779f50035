#include "stems/virtual_rep.hpp"

#include <stdexcept>

namespace stems {

VirtualRep& VirtualRep::add(const Irreducible& irr, int mult) {
    if (!irr.valid_for(group_)) {
        throw std::invalid_argument(irr.render() + " is not an irreducible of " +
                                    group_name(group_));
    }
    if (mult == 0) return *this;
    auto [it, inserted] = mults_.emplace(irr, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0) mults_.erase(it);
    }
    return *this;
}

VirtualRep& VirtualRep::operator+=(const VirtualRep& o) {
    if (o.group_ != group_) throw std::invalid_argument("VirtualRep: group mismatch");
    for (const auto& [irr, m] : o.mults_) add(irr, m);
    return *this;
}

VirtualRep& VirtualRep::operator-=(const VirtualRep& o) {
    if (o.group_ != group_) throw std::invalid_argument("VirtualRep: group mismatch");
    for (const auto& [irr, m] : o.mults_) add(irr, -m);
    return *this;
}

VirtualRep VirtualRep::operator-() const { return scaled(-1); }

VirtualRep VirtualRep::scaled(int k) const {
    VirtualRep r(group_);
    if (k != 0)
        for (const auto& [irr, m] : mults_) r.add(irr, k * m);
    return r;
}

std::string VirtualRep::render() const {
    if (mults_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [irr, m] : mults_) {
        int a = m;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
            first = false;
        } else {
            out += a < 0 ? " - " : " + ";
            a = a < 0 ? -a : a;
        }
        if (a != 1) out += std::to_string(a) + "*";
        out += irr.render();
    }
    return out;
}

int b_of(const VirtualRep& u) {
    if (u.group() != Group::O2 && u.group() != Group::Pin2)
        throw std::invalid_argument("b_of: only defined over O(2) and Pin(2)");
    return u.mult_of(Irreducible::delta());
}

} // namespace stems

#include "stems/weights.hpp"

#include <stdexcept>

namespace stems {

void WeightMultiset::add_pair(int weight, int mult) {
    if (weight <= 0) throw std::invalid_argument("WeightMultiset: weight must be positive");
    if (mult == 0) return;
    auto [it, inserted] = pairs.emplace(weight, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0) pairs.erase(it);
    }
}

int WeightMultiset::real_dim() const {
    int d = zero_mult;
    for (const auto& [w, m] : pairs) {
        (void)w;
        d += 2 * m;
    }
    return d;
}

WeightMultiset restrict_to_torus(const VirtualRep& u) {
    WeightMultiset ws;
    for (const auto& [irr, m] : u.mults()) {
        switch (irr.kind) {
            case Irreducible::Kind::Z:
                ws.add_pair(irr.param, m);
                break;
            case Irreducible::Kind::Delta:
                ws.add_zero(m);
                break;
            case Irreducible::Kind::Sigma:
                // Pin(2) indexes sigma by half the underlying weight.
                ws.add_pair(u.group() == Group::Pin2 ? 2 * irr.param : irr.param, m);
                break;
            case Irreducible::Kind::H:
                ws.add_pair(irr.param, 2 * m);
                break;
            case Irreducible::Kind::W: {
                int i = (irr.param - 1) / 2;
                ws.add_zero(m);
                int stride = u.group() == Group::SU2 ? 2 : 1;
                for (int j = 1; j <= i; ++j) ws.add_pair(stride * j, m);
                break;
            }
            case Irreducible::Kind::V: {
                int i = irr.param / 2;
                for (int j = 1; j <= i; ++j) ws.add_pair(2 * j - 1, 2 * m);
                break;
            }
        }
    }
    return ws;
}

} // namespace stems

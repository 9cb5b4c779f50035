#include "stems/irreducible.hpp"

#include <stdexcept>

namespace stems {

bool Irreducible::valid_for(Group g) const {
    switch (kind) {
        case Kind::Z:
            return is_torus(g) && param >= 1;
        case Kind::Delta:
            return (g == Group::O2 || g == Group::Pin2) && param == 0;
        case Kind::Sigma:
            return (g == Group::O2 || g == Group::Pin2) && param >= 1;
        case Kind::H:
            return g == Group::Pin2 && param >= 1 && param % 2 == 1;
        case Kind::W:
            return (g == Group::SO3 || g == Group::SU2) && param >= 3 && param % 2 == 1;
        case Kind::V:
            return g == Group::SU2 && param >= 2 && param % 2 == 0;
    }
    return false;
}

int Irreducible::real_dim() const {
    switch (kind) {
        case Kind::Z: return 2;
        case Kind::Delta: return 1;
        case Kind::Sigma: return 2;
        case Kind::H: return 4;
        case Kind::W: return param;
        case Kind::V: return 2 * param;
    }
    throw std::logic_error("Irreducible::real_dim: bad kind");
}

std::string Irreducible::render() const {
    switch (kind) {
        case Kind::Z: return "z(" + std::to_string(param) + ")";
        case Kind::Delta: return "delta";
        case Kind::Sigma: return "sigma(" + std::to_string(param) + ")";
        case Kind::H: return "h(" + std::to_string(param) + ")";
        case Kind::W: return "W(" + std::to_string(param) + ")";
        case Kind::V: return "V(" + std::to_string(param) + ")";
    }
    throw std::logic_error("Irreducible::render: bad kind");
}

} // namespace stems

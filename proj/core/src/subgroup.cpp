#include "stems/subgroup.hpp"

namespace stems {

bool is_tilde(IsolatedTag t) {
    switch (t) {
        case IsolatedTag::SU2Full:
        case IsolatedTag::BinI:
        case IsolatedTag::BinO:
        case IsolatedTag::BinT:
        case IsolatedTag::Q8:
            return true;
        default:
            return false;
    }
}

std::string isolated_name(IsolatedTag t) {
    switch (t) {
        case IsolatedTag::SO3Full: return "SO3";
        case IsolatedTag::A5: return "A5";
        case IsolatedTag::S4: return "S4";
        case IsolatedTag::A4: return "A4";
        case IsolatedTag::KleinD4: return "D4";
        case IsolatedTag::SU2Full: return "SU2";
        case IsolatedTag::BinI: return "2I";
        case IsolatedTag::BinO: return "2O";
        case IsolatedTag::BinT: return "2T";
        case IsolatedTag::Q8: return "Q8";
    }
    throw std::logic_error("isolated_name: bad enum");
}

int weyl_order(IsolatedTag t) {
    switch (t) {
        case IsolatedTag::A4:
        case IsolatedTag::BinT:
            return 2;
        case IsolatedTag::KleinD4:
        case IsolatedTag::Q8:
            return 6;
        default:
            return 1;
    }
}

std::string SubgroupDescriptor::render() const {
    switch (kind) {
        case Kind::Cyclic: return "C_" + std::to_string(param);
        case Kind::FullTorus: return "torus";
        case Kind::Dihedral: return "D_" + std::to_string(param);
        case Kind::FullO2: return "O2";
        case Kind::Quaternion: return "Q_" + std::to_string(param);
        case Kind::FullPin2: return "Pin2";
        case Kind::Isolated: return isolated_name(tag);
    }
    throw std::logic_error("SubgroupDescriptor::render: bad kind");
}

} // namespace stems

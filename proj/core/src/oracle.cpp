#include "stems/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "stems/weights.hpp"

namespace stems::oracle {

namespace {

int mod4(int x) { return ((x % 4) + 4) % 4; }

struct Truncation {
    TruncatedTorsionModule module;
    std::vector<int> dim; // dim[s-1] for 1 <= s <= s_max
    int tail = 0;
    int min_dim = 0;
};

Truncation truncate_resolution(const VirtualRep& u, int lo, int hi, int s_max) {
    if (lo > hi) throw std::invalid_argument("oracle: empty degree window");
    WeightMultiset ws = restrict_to_torus(u);
    if (s_max <= ws.max_weight())
        throw std::invalid_argument("truncation unsound: s_max must exceed every torus weight");

    Truncation tr;
    tr.tail = ws.zero_mult;
    tr.module.s_max = s_max;
    tr.module.lo = lo;
    tr.module.hi = hi;
    tr.module.occupied.assign(s_max, std::vector<bool>(hi - lo + 1, false));
    tr.dim.resize(s_max);
    tr.min_dim = tr.tail;
    for (int s = 1; s <= s_max; ++s) {
        int d = ws.zero_mult;
        for (const auto& [w, m] : ws.pairs)
            if (w % s == 0) d += 2 * m;
        tr.dim[s - 1] = d;
        tr.min_dim = std::min(tr.min_dim, d);
        for (int k = std::max(lo, d + 1); k <= hi; ++k)
            if ((k - d - 1) % 2 == 0) tr.module.occupied[s - 1][k - lo] = true;
    }
    return tr;
}

// Recount the homotopy of the truncated resolution degree by degree. The
// torsion pieces give one class per occupied slot (only the Weyl-invariant
// ones when `weighted`); a degree fed by the generic tail piece is
// countably infinite. On top of that sits the single degree-`tail` class
// when the dimension function never dips below its tail, or a rank-1
// cancellation just below the tail when it does.
std::map<int, ExtendedNat> recount(const VirtualRep& u, int lo, int hi, int s_max, bool weighted) {
    Truncation tr = truncate_resolution(u, lo, hi, s_max);
    int b = tr.tail;

    std::map<int, ExtendedNat> table;
    for (int k = lo; k <= hi; ++k) {
        bool invariant_ok = !weighted || mod4(k + 1 + b) == 0;
        bool tail_piece = k >= tr.tail + 1 && (k - tr.tail - 1) % 2 == 0;
        if (invariant_ok && tail_piece) {
            table.emplace(k, ExtendedNat::infinity());
            continue;
        }
        std::int64_t count = 0;
        if (invariant_ok) {
            for (int s = 1; s <= s_max; ++s)
                if (tr.dim[s - 1] != tr.tail && tr.module.piece_at(s, k)) ++count;
        }
        ExtendedNat v(count);
        bool b_even = b % 2 == 0;
        if (b_even && k == tr.tail && tr.min_dim >= tr.tail) v += ExtendedNat(1);
        if (b_even && k == tr.tail - 1 && tr.min_dim < tr.tail) v = v.minus(1);
        table.emplace(k, v);
    }
    return table;
}

} // namespace

std::map<int, ExtendedNat> oracle_torus(const VirtualRep& u, int lo, int hi, int s_max) {
    if (!is_torus(u.group()))
        throw std::invalid_argument("oracle_torus: group must be SO(2) or Spin(2)");
    return recount(u, lo, hi, s_max, false);
}

std::map<int, ExtendedNat> oracle_o2_cyclic(const VirtualRep& u, int lo, int hi, int s_max) {
    if (u.group() != Group::O2 && u.group() != Group::Pin2)
        throw std::invalid_argument("oracle_o2_cyclic: group must be O(2) or Pin(2)");
    return recount(u, lo, hi, s_max, true);
}

} // namespace stems::oracle

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stems/extended_nat.hpp"
#include "stems/subgroup.hpp"

namespace stems {

// Provenance label of a line: a specific subgroup class, the generic tail
// (classes contributed uniformly by all large cyclic subgroups), or the
// degree-zero sections of the dihedral sheaf (the infinite cluster).
struct LineLabel {
    enum class Kind { Subgroup, GenericTail, DegreeZeroSections };

    Kind kind = Kind::GenericTail;
    SubgroupDescriptor subgroup{SubgroupDescriptor::Kind::FullTorus, 0};

    friend auto operator<=>(const LineLabel&, const LineLabel&) = default;

    static LineLabel of(SubgroupDescriptor s) { return {Kind::Subgroup, s}; }
    static LineLabel generic_tail() { return {Kind::GenericTail, {}}; }
    static LineLabel degree_zero_sections() { return {Kind::DegreeZeroSections, {}}; }

    std::string render() const;
};

// An arithmetic progression of degrees carrying a constant dimension:
// start, start+step, start+2*step, ... A step of 0 is a single spot.
struct Line {
    int start;
    int step; // 0, 2 or 4
    ExtendedNat mult;
    LineLabel label;

    bool covers(int degree) const {
        if (step == 0) return degree == start;
        return degree >= start && (degree - start) % step == 0;
    }

    friend bool operator==(const Line&, const Line&) = default;
};

struct Correction {
    int degree;
    std::int64_t amount; // > 0, subtracted from the covering lines

    friend bool operator==(const Correction&, const Correction&) = default;
};

// A graded dimension table in closed form: finitely many lines minus
// finitely many pointwise corrections. Corrections must land on degrees
// where the covering lines are all finite and at least as large, so queries
// never go negative; this is checked at construction.
class LineSet {
public:
    LineSet() = default;
    LineSet(std::vector<Line> lines, std::vector<Correction> corrections);

    const std::vector<Line>& lines() const { return lines_; }
    const std::vector<Correction>& corrections() const { return corrections_; }
    bool empty() const { return lines_.empty() && corrections_.empty(); }

    ExtendedNat query(int degree) const;
    std::map<int, ExtendedNat> window(int lo, int hi) const;
    std::optional<int> min_nonzero_degree() const;

    LineSet shifted(int d) const;
    friend LineSet operator+(const LineSet& a, const LineSet& b);

    friend bool operator==(const LineSet&, const LineSet&) = default;

private:
    void validate() const;

    std::vector<Line> lines_;
    std::vector<Correction> corrections_;
};

} // namespace stems

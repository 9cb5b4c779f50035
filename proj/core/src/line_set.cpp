#include "stems/line_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace stems {

std::string LineLabel::render() const {
    switch (kind) {
        case Kind::Subgroup: return subgroup.render();
        case Kind::GenericTail: return "generic_tail";
        case Kind::DegreeZeroSections: return "degree_zero_sections";
    }
    throw std::logic_error("LineLabel::render: bad kind");
}

LineSet::LineSet(std::vector<Line> lines, std::vector<Correction> corrections)
    : lines_(std::move(lines)), corrections_(std::move(corrections)) {
    validate();
}

void LineSet::validate() const {
    for (const auto& ln : lines_) {
        if (ln.step != 0 && ln.step != 2 && ln.step != 4)
            throw std::invalid_argument("LineSet: step must be 0, 2 or 4");
        if (ln.mult.is_zero()) throw std::invalid_argument("LineSet: zero-multiplicity line");
    }
    for (const auto& c : corrections_) {
        if (c.amount <= 0) throw std::invalid_argument("LineSet: correction amount must be > 0");
        ExtendedNat covered;
        for (const auto& ln : lines_)
            if (ln.covers(c.degree)) covered += ln.mult;
        if (covered.is_infinite())
            throw std::invalid_argument("LineSet: correction under an infinite line");
        std::int64_t claimed = 0;
        for (const auto& o : corrections_)
            if (o.degree == c.degree) claimed += o.amount;
        if (covered.value() < claimed)
            throw std::invalid_argument("LineSet: correction exceeds covered dimension");
    }
}

ExtendedNat LineSet::query(int degree) const {
    ExtendedNat total;
    for (const auto& ln : lines_)
        if (ln.covers(degree)) total += ln.mult;
    for (const auto& c : corrections_)
        if (c.degree == degree) total = total.minus(c.amount);
    return total;
}

std::map<int, ExtendedNat> LineSet::window(int lo, int hi) const {
    if (lo > hi) throw std::invalid_argument("LineSet::window: empty range");
    std::map<int, ExtendedNat> w;
    for (int k = lo; k <= hi; ++k) w.emplace(k, query(k));
    return w;
}

std::optional<int> LineSet::min_nonzero_degree() const {
    if (lines_.empty()) return std::nullopt;
    int lo = lines_.front().start;
    int hi = lines_.front().start;
    for (const auto& ln : lines_) {
        lo = std::min(lo, ln.start);
        hi = std::max(hi, ln.start);
    }
    for (const auto& c : corrections_) hi = std::max(hi, c.degree);
    // Past every correction and every start, any line with positive step is
    // uncancelled within one period, so scanning four degrees beyond is
    // enough to find the first nonzero value if one exists at all.
    for (int k = lo; k <= hi + 4; ++k)
        if (!query(k).is_zero()) return k;
    return std::nullopt;
}

LineSet LineSet::shifted(int d) const {
    LineSet out;
    out.lines_ = lines_;
    out.corrections_ = corrections_;
    for (auto& ln : out.lines_) ln.start += d;
    for (auto& c : out.corrections_) c.degree += d;
    return out;
}

LineSet operator+(const LineSet& a, const LineSet& b) {
    std::vector<Line> lines = a.lines_;
    lines.insert(lines.end(), b.lines_.begin(), b.lines_.end());
    std::vector<Correction> corrections = a.corrections_;
    corrections.insert(corrections.end(), b.corrections_.begin(), b.corrections_.end());
    return LineSet(std::move(lines), std::move(corrections));
}

} // namespace stems

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "csurf/interval.hpp"
#include "csurf/seqspec.hpp"

namespace csurf {

// One construction level: 2^n closed intervals left to right inside [0,1],
// all of the same true length, plus the widths of the removed open gaps
// between consecutive intervals. gap_after[i-1] separates interval i from
// interval i+1 and belongs to the level where their ancestors split, so the
// stored widths mix levels by design.
//
// A level is degenerate when its q_n is representable only in log scale:
// endpoint enclosures then carry the full parent span (sound but wide) and
// certified disjointness is lost; length and gap enclosures remain valid.
struct CantorLevel {
    long n = 0;
    std::vector<Interval> left;
    std::vector<Interval> right;
    std::vector<Interval> gap_after;
    Interval length;
    bool degenerate = false;
};

struct CantorTree {
    SequenceSpec spec;
    Prec precision = kDefaultPrec;
    std::vector<CantorLevel> levels;          // levels[k] has 2^k intervals; levels[0] = [0,1]
    std::optional<long> first_degenerate;

    long depth() const { return static_cast<long>(levels.size()) - 1; }
    const CantorLevel& level(long n) const;
};

// Builds levels 0..max_level. Each step removes the central open interval of
// relative length q_n from every level-(n-1) interval. Throws
// RepresentationError when a nondegenerate level's endpoint enclosures blow
// up past the configured width bound (precision exhausted).
CantorTree build_levels(const SequenceSpec& spec, long max_level, Prec prec);

// Endpoint enclosures of I_n^i, 1 <= i <= 2^n.
std::pair<Interval, Interval> interval_endpoints(const CantorTree& tree, long n, long i);

// Widths of the nearest removed gaps adjacent to I_n^i, at whatever level
// they were removed. Absent on the outward side of the extreme intervals.
struct GapPair {
    std::optional<Interval> left;
    std::optional<Interval> right;
};
GapPair gaps(const CantorTree& tree, long n, long i);

} // namespace csurf

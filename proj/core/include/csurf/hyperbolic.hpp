#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csurf/cantor.hpp"
#include "csurf/conformal.hpp"
#include "csurf/logscale.hpp"
#include "csurf/seqspec.hpp"

namespace csurf {

// Curve gamma_n^i separates the construction interval I_n^i from the rest of
// the Cantor set; 1 <= i <= 2^n.
struct CurveId {
    long n = 1;
    long i = 1;
};

// Collar function eta(x) = asinh(1/sinh(x/2)), decreasing on (0, inf).
// Accepts enclosures whose lower endpoint dips to 0 (upper endpoint of the
// result is then +inf); certainly nonpositive input is a domain error.
Interval collar_eta(const Interval& x);

// pi^2 / atanh(q), an upper bound on the length of gamma_n^1 (and of every
// gamma_n^i when the sequence is certified nonincreasing).
Interval upper_bound_atanh(const Interval& q);

// Same bound through the log channels: when q is representable only in log
// scale, ln(bound) = ln(pi^2) - ln(atanh(q)) with atanh(q) banded between q
// and q/(1-q^2).
ScaledValue upper_bound_atanh_channels(const LogChannels& ch, Prec prec);

// 2*eta(pi^2 / L) with L = ln((1+q)/(2q)) = lambda - ln 2 + ln(1+q), a lower
// bound on the length of every gamma_n^i. When L > 0 cannot be certified the
// bound degrades to 0 with the trivial flag set.
struct CollarLowerBound {
    Interval value;
    bool trivial = false;
};
CollarLowerBound lower_bound_collar(const LogChannels& ch, Prec prec);

// Upper length bounds from rings realized in the complement geometry:
// the round annulus around I_n^i reaching the nearest removed gap, and for
// the extreme indices the two-slit ring (I_n^i against the hull of the rest).
// Absent when the level geometry is degenerate (or the index is interior,
// for the two-slit ring).
std::optional<Interval> round_annulus_upper_bound(const CantorTree& tree, CurveId curve);
std::optional<Interval> two_slit_upper_bound(const CantorTree& tree, CurveId curve);

struct MethodBound {
    std::string method;
    ScaledValue bound;
};

struct LengthBounds {
    CurveId curve;
    Interval lower;                       // collar bound ([0,0] when trivial)
    bool lower_trivial = false;
    std::string lower_method;             // always "collar"
    std::optional<ScaledValue> upper;     // min over applicable methods
    std::string upper_method;             // winning method; empty when absent
    std::vector<MethodBound> upper_candidates;
};

// Combines the collar lower bound with every applicable upper bound.
// The atanh bound is attached for i = 1 always and for all i only under a
// certified nonincreasing sequence; ring bounds whenever geometry exists.
LengthBounds curve_bounds(const SequenceSpec& spec, const CantorTree& tree,
                          CurveId curve, Prec prec);

// Right-angled hexagon with alternating sides (a/2, ., b/2, ., c/2, .):
// length s of the side joining the b- and c-sides, from
// cosh s = (cosh(a/2) + cosh(b/2) cosh(c/2)) / (sinh(b/2) sinh(c/2)).
// Inputs are interval boxes; the result is the hull over box corners
// (s is increasing in a and decreasing in b and c: the b-derivative of
// cosh s has the sign of -(cosh(c/2) + cosh(a/2) cosh(b/2))).
Interval hexagon_seam(const Interval& a, const Interval& b, const Interval& c);

// Complete geodesic in the upper half-plane, named by its two boundary
// endpoints on R u {inf}; nullopt encodes the point at infinity.
struct Geodesic {
    std::optional<Interval> p;
    std::optional<Interval> q;
};

// Hyperbolic distance between two complete geodesics via the endpoint
// cross-ratio: chi < 0 means they cross (distance 0); otherwise
// d = 2 atanh(sqrt(min(chi, 1/chi))). Enclosures straddling the crossing
// case return [0, hi]. Certainly coincident geodesics are a domain error.
Interval geodesic_distance(const Geodesic& g1, const Geodesic& g2, Prec prec);

// Distance, inside the pants with boundary lengths (a,b,c), between the
// boundary-a geodesic and the seam joining boundaries b and c. The hexagon
// is realized explicitly in the half-plane (alternate translations along the
// axis and quarter turns at i) and the distance is read off the two side
// geodesics; interval boxes are handled by corner hull (decreasing in a,
// increasing in b and c; verified on grids by the tests).
Interval pants_seam_distance(const Interval& a, const Interval& b, const Interval& c);

// Pair of pants P_n^i with boundary curves gamma_n^i, gamma_{n+1}^{2i-1},
// gamma_{n+1}^{2i}. Boundary enclosures come from curve_bounds; seam and
// boundary-to-seam distance are corner hulls over the boundary box.
struct PantsGeometry {
    CurveId pants;
    Interval a, b, c;
    Interval seam;
    Interval boundary_to_seam;
};
PantsGeometry pants_geometry(const SequenceSpec& spec, const CantorTree& tree,
                             CurveId pants, Prec prec);

} // namespace csurf

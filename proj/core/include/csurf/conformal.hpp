#pragma once

#include "csurf/interval.hpp"

namespace csurf {

// Conformal modulus of a doubly connected domain, normalized so the round
// annulus {1 < |z| < R} has modulus ln(R)/(2*pi) and the core geodesic of a
// ring of modulus m has hyperbolic length pi/m.
struct RingModulus {
    Interval value;
};

// Complete elliptic integral of the first kind, via the AGM:
// K(k) = pi / (2 * AGM(1, sqrt(1 - k^2))). Requires 0 <= k, hi < 1.
Interval elliptic_K(const Interval& k);

// Grötzsch ring function mu(r) = (pi/2) * K(sqrt(1-r^2)) / K(r), 0 < r < 1.
Interval grotzsch_mu(const Interval& r);

// Requires 0 < r1 < r2 certified.
RingModulus round_annulus_modulus(const Interval& r1, const Interval& r2);

// Modulus of the complement of [a,b] u [c,d] in the sphere, a < b < c < d
// certified. Route: the cross-ratio invariant rho - 1 = ((b-a)(d-c)) /
// (((c-b)(d-a)) is positive in cancellation-free form; the four endpoints
// normalize to the slits [-1,-k] u [k,1] with (1+k)^2/(4k) = rho, solved
// stably as k = 1/(2*rho - 1 + 2*sqrt(rho*(rho-1))), and the doubled
// rectangle of the slit-plane map gives modulus K(k)/K(sqrt(1-k^2)).
RingModulus two_slit_modulus(const Interval& a, const Interval& b,
                             const Interval& c, const Interval& d);

// pi / modulus: length of the ring's core geodesic, an upper bound for the
// geodesic in any surface containing the ring essentially.
Interval core_length(const RingModulus& m);

} // namespace csurf

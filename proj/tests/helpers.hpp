#pragma once

#include <string>

#include "csurf/interval.hpp"

// Reference digits in the tests were produced by an independent 256-bit
// evaluation (series/identity routes, not the library code paths) and are
// correctly rounded to the printed length.
namespace tst {

using csurf::Interval;
using csurf::Prec;

inline Interval iv(const std::string& s, Prec prec = csurf::kDefaultPrec) {
    return Interval::from_string(s, prec);
}

// v contains the reference value (boxed at 256 bits).
inline bool encloses(const Interval& v, const std::string& ref) {
    return v.contains(iv(ref, 256));
}

// v certified inside ref*(1 +- tol).
inline bool within_rel(const Interval& v, const std::string& ref, const std::string& tol) {
    Interval r = iv(ref, 256);
    Interval t = iv(tol, 256) * csurf::abs(r);
    Interval band = Interval::hull(r - t, r + t);
    return band.contains(v);
}

// v certified inside ref +- tol.
inline bool within_abs(const Interval& v, const std::string& ref, const std::string& tol) {
    Interval r = iv(ref, 256);
    Interval t = iv(tol, 256);
    Interval band = Interval::hull(r - t, r + t);
    return band.contains(v);
}

inline bool width_below(const Interval& v, const std::string& tol) {
    return v.width().certainly_less(iv(tol, 256));
}

} // namespace tst

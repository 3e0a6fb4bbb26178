#pragma once

#include "csurf/interval.hpp"

namespace csurf {

// A positive quantity that may be too extreme for direct floating-point
// representation. When log_scale is set, `value` encloses the natural log
// of the quantity instead of the quantity itself; consumers must check the
// flag before interpreting the endpoints.
struct ScaledValue {
    Interval value;
    bool log_scale = false;
};

inline ScaledValue make_direct(Interval v) { return {std::move(v), false}; }
inline ScaledValue make_log(Interval ln_v) { return {std::move(ln_v), true}; }

// Exponentiates when the result stays strictly inside the finite positive
// range; otherwise keeps the logarithmic representation, which stays
// informative where exp would collapse to [0, minpos] or [maxreal, +inf].
inline ScaledValue exp_or_log(const Interval& ln_v) {
    Interval direct = exp(ln_v);
    if (direct.is_finite() && direct.is_certainly_positive()) {
        return make_direct(std::move(direct));
    }
    return make_log(ln_v);
}

} // namespace csurf

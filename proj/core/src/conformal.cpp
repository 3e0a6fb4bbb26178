#include "csurf/conformal.hpp"

#include <algorithm>
#include <utility>

namespace csurf {

namespace {

// hi - lo rounded up, as a fresh mpfr value the caller owns.
void width_of(mpfr_ptr out, const Interval& x) {
    mpfr_sub(out, x.hi(), x.lo(), MPFR_RNDU);
}

} // namespace

Interval elliptic_K(const Interval& k) {
    if (mpfr_sgn(k.lo()) < 0) {
        throw DomainError("elliptic_K needs k >= 0, lo = " + k.lo_string(12));
    }
    if (mpfr_cmp_ui(k.hi(), 1) >= 0) {
        throw DomainError("elliptic_K needs k < 1, hi = " + k.hi_string(12));
    }
    Prec prec = k.precision();
    Interval one = Interval::from_long(1, prec);
    Interval half = Interval::from_ratio(1, 2, prec);

    Interval a = one;
    Interval b = sqrt(one - square(k));
    // The true iterates satisfy b_n <= AGM <= a_n, so [b.lo, a.hi] encloses
    // the limit at every step; successive enclosures are intersected, and the
    // iteration stops when the width stops shrinking.
    Interval best = Interval::from_endpoints(b.lo(), a.hi(), prec);

    mpfr_t w_best, w_cand;
    mpfr_init2(w_best, 64);
    mpfr_init2(w_cand, 64);
    width_of(w_best, best);

    for (int iter = 0; iter < 200; ++iter) {
        Interval a_next = (a + b) * half;
        Interval b_next = sqrt(a * b);
        a = std::move(a_next);
        b = std::move(b_next);
        Interval cand = Interval::intersect(
            best, Interval::from_endpoints(b.lo(), a.hi(), prec));
        width_of(w_cand, cand);
        if (!mpfr_less_p(w_cand, w_best)) break;
        mpfr_set(w_best, w_cand, MPFR_RNDU);
        best = std::move(cand);
    }
    mpfr_clear(w_best);
    mpfr_clear(w_cand);

    return Interval::pi(prec) / (Interval::from_long(2, prec) * best);
}

Interval grotzsch_mu(const Interval& r) {
    if (!r.is_certainly_positive()) {
        throw DomainError("grotzsch_mu needs r > 0, lo = " + r.lo_string(12));
    }
    if (mpfr_cmp_ui(r.hi(), 1) >= 0) {
        throw DomainError("grotzsch_mu needs r < 1, hi = " + r.hi_string(12));
    }
    Prec prec = r.precision();
    Interval one = Interval::from_long(1, prec);
    Interval rp = sqrt(one - square(r));
    return Interval::pi(prec) * Interval::from_ratio(1, 2, prec) *
           (elliptic_K(rp) / elliptic_K(r));
}

RingModulus round_annulus_modulus(const Interval& r1, const Interval& r2) {
    if (!r1.is_certainly_positive()) {
        throw DomainError("annulus needs r1 > 0, lo = " + r1.lo_string(12));
    }
    if (!r1.certainly_less(r2)) {
        throw DomainError("annulus needs certified r1 < r2, got r1 = " +
                          r1.to_string(12) + ", r2 = " + r2.to_string(12));
    }
    Prec prec = std::max(r1.precision(), r2.precision());
    Interval two_pi = Interval::from_long(2, prec) * Interval::pi(prec);
    return RingModulus{log(r2 / r1) / two_pi};
}

RingModulus two_slit_modulus(const Interval& a, const Interval& b,
                             const Interval& c, const Interval& d) {
    if (!a.certainly_less(b) || !b.certainly_less(c) || !c.certainly_less(d)) {
        throw DomainError("two_slit_modulus needs certified a < b < c < d");
    }
    Prec prec = std::max(std::max(a.precision(), b.precision()),
                         std::max(c.precision(), d.precision()));
    Interval one = Interval::from_long(1, prec);
    Interval t = ((b - a) * (d - c)) / ((c - b) * (d - a));  // rho - 1 > 0
    Interval rho = one + t;
    Interval denom = Interval::from_long(2, prec) * t + one +
                     Interval::from_long(2, prec) * sqrt(rho * t);
    Interval k = one / denom;
    Interval kp = sqrt(one - square(k));
    return RingModulus{elliptic_K(k) / elliptic_K(kp)};
}

Interval core_length(const RingModulus& m) {
    if (!m.value.is_certainly_positive()) {
        throw DomainError("core_length needs a certainly positive modulus, got " +
                          m.value.to_string(12));
    }
    return Interval::pi(m.value.precision()) / m.value;
}

} // namespace csurf

#pragma once

#include <gmp.h>
#include <mpfr.h>

#include <optional>
#include <string>
#include <string_view>

#include "csurf/errors.hpp"

namespace csurf {

using Prec = mpfr_prec_t;

inline constexpr Prec kDefaultPrec = 128;
inline constexpr Prec kMinPrec = 53;

// Closed interval [lo, hi] of extended reals with outward-rounded endpoints.
// Every operation returns an interval guaranteed to contain the exact result
// set; endpoints are rounded toward -inf (lo) and +inf (hi). Infinite
// endpoints encode unbounded-but-sound enclosures; the enclosed true value
// is always a finite real. Invariants: lo <= hi, lo < +inf, hi > -inf,
// no NaN endpoints.
//
// Raising the working precision tightens enclosures: an expression evaluated
// at precision p' > p yields an interval contained in the precision-p result,
// because the p-representable numbers are a subset of the p'-representable
// ones and every endpoint operation is correctly rounded.
class Interval {
public:
    Interval();                                         // [0, 0] at kDefaultPrec
    explicit Interval(Prec prec);                       // [0, 0]
    Interval(const Interval& other);
    Interval(Interval&& other) noexcept;
    Interval& operator=(const Interval& other);
    Interval& operator=(Interval&& other) noexcept;
    ~Interval();

    // Parses "p/q" (exact rational, enclosed by one ulp each side) or a
    // decimal literal, optionally with exponent. Rejects anything else.
    static Interval from_string(std::string_view text, Prec prec);
    static Interval from_long(long value, Prec prec);
    static Interval from_ratio(long num, long den, Prec prec);
    static Interval from_mpq(mpq_srcptr value, Prec prec);
    // Endpoints are adopted as given (no rounding); checks invariants.
    static Interval from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, Prec prec);
    static Interval pi(Prec prec);
    static Interval pi_squared(Prec prec);
    static Interval entire(Prec prec);                  // [-inf, +inf]

    Prec precision() const { return mpfr_get_prec(lo_); }
    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }

    bool is_point() const;                              // lo == hi, finite
    bool is_finite() const;
    bool contains_zero() const;
    bool is_certainly_positive() const;                 // lo > 0
    bool is_certainly_negative() const;                 // hi < 0
    bool certainly_less(const Interval& other) const;   // hi < other.lo
    bool certainly_greater(const Interval& other) const;
    bool contains(const Interval& other) const;         // other subseteq this
    bool contains_mpq(mpq_srcptr value) const;
    bool intersects(const Interval& other) const;
    bool same_endpoints(const Interval& other) const;

    static Interval hull(const Interval& a, const Interval& b);
    // Intersection; throws InternalError when empty (two sound enclosures of
    // one value always intersect).
    static Interval intersect(const Interval& a, const Interval& b);
    static Interval min_enclosure(const Interval& a, const Interval& b);
    static Interval max_enclosure(const Interval& a, const Interval& b);

    // Upper bound on hi - lo, rounded up; +inf for unbounded intervals.
    Interval width() const;
    double width_double() const;                        // convenience, rounded up
    double approx() const;                              // midpoint estimate, diagnostics only

    // Decimal endpoint images, rounded outward, 'digits' significant digits.
    // Printing then re-parsing yields an enclosure of this interval.
    std::string lo_string(int digits = 25) const;
    std::string hi_string(int digits = 25) const;
    std::string to_string(int digits = 25) const;       // "[lo, hi]"

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator/(const Interval& a, const Interval& b);
    Interval operator-() const;

private:
    void init(Prec prec);
    void check() const;

    mpfr_t lo_;
    mpfr_t hi_;
};

Interval sqrt(const Interval& x);
Interval log(const Interval& x);
Interval exp(const Interval& x);
Interval sinh(const Interval& x);
Interval cosh(const Interval& x);
Interval asinh(const Interval& x);
Interval acosh(const Interval& x);
Interval atanh(const Interval& x);
Interval abs(const Interval& x);
Interval pow_si(const Interval& x, long n);
Interval square(const Interval& x);

} // namespace csurf

#include "csurf/interval.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstring>

namespace csurf {

namespace {

void require_prec(Prec prec) {
    if (prec < kMinPrec) {
        throw RepresentationError("precision_bits must be at least 53, got " +
                                  std::to_string(static_cast<long>(prec)));
    }
}

// NaN can only arise from 0*inf or inf/inf candidate products. The exact
// result set of such a corner degenerates to 0 (the zero factor is an exact
// endpoint, and x*0 = 0 for every finite x in the box), so 0 is the sound
// replacement.
void nan_to_zero(mpfr_ptr x) {
    if (mpfr_nan_p(x)) mpfr_set_zero(x, 1);
}

std::string format_mpfr(mpfr_srcptr x, int digits, mpfr_rnd_t rnd) {
    if (mpfr_nan_p(x)) throw InternalError("NaN endpoint in format_mpfr");
    if (mpfr_inf_p(x)) return mpfr_sgn(x) > 0 ? "inf" : "-inf";
    if (mpfr_zero_p(x)) return "0";
    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), x, rnd);
    if (s == nullptr) throw InternalError("mpfr_get_str failed");
    std::string digits_str(s);
    mpfr_free_str(s);
    std::string sign;
    if (!digits_str.empty() && digits_str[0] == '-') {
        sign = "-";
        digits_str.erase(0, 1);
    }
    // digits_str is "d1d2..dn" for 0.d1d2..dn * 10^e; emit d1.d2..dn e(e-1)
    std::string out = sign;
    out += digits_str.substr(0, 1);
    if (digits_str.size() > 1) {
        out += ".";
        out += digits_str.substr(1);
    }
    long printed_exp = static_cast<long>(e) - 1;
    out += "e";
    if (printed_exp >= 0) out += "+";
    out += std::to_string(printed_exp);
    return out;
}

} // namespace

// Re-targets an already-constructed interval; the value becomes unspecified
// and must be overwritten before escaping.
void Interval::init(Prec prec) {
    require_prec(prec);
    mpfr_set_prec(lo_, prec);
    mpfr_set_prec(hi_, prec);
}

void Interval::check() const {
    if (mpfr_nan_p(lo_) || mpfr_nan_p(hi_)) {
        throw InternalError("interval endpoint is NaN");
    }
    if (mpfr_greater_p(lo_, hi_)) {
        throw InternalError("interval invariant lo <= hi violated: [" +
                            format_mpfr(lo_, 10, MPFR_RNDD) + ", " +
                            format_mpfr(hi_, 10, MPFR_RNDU) + "]");
    }
    if (mpfr_inf_p(lo_) && mpfr_sgn(lo_) > 0) {
        throw InternalError("interval lower endpoint is +inf");
    }
    if (mpfr_inf_p(hi_) && mpfr_sgn(hi_) < 0) {
        throw InternalError("interval upper endpoint is -inf");
    }
}

Interval::Interval() : Interval(kDefaultPrec) {}

Interval::Interval(Prec prec) {
    require_prec(prec);
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) {
    mpfr_init2(lo_, other.precision());
    mpfr_init2(hi_, other.precision());
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept {
    memcpy(lo_, other.lo_, sizeof(mpfr_t));
    memcpy(hi_, other.hi_, sizeof(mpfr_t));
    mpfr_init2(other.lo_, kMinPrec);
    mpfr_init2(other.hi_, kMinPrec);
    mpfr_set_zero(other.lo_, 1);
    mpfr_set_zero(other.hi_, 1);
}

Interval& Interval::operator=(const Interval& other) {
    if (this != &other) {
        mpfr_set_prec(lo_, other.precision());
        mpfr_set_prec(hi_, other.precision());
        mpfr_set(lo_, other.lo_, MPFR_RNDD);
        mpfr_set(hi_, other.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
    if (this != &other) {
        mpfr_swap(lo_, other.lo_);
        mpfr_swap(hi_, other.hi_);
    }
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::from_string(std::string_view text, Prec prec) {
    require_prec(prec);
    std::string s(text);
    // trim
    auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
    while (!s.empty() && is_space(s.front())) s.erase(s.begin());
    while (!s.empty() && is_space(s.back())) s.pop_back();
    if (s.empty()) throw ParseError("empty numeric literal");

    Interval r;
    r.init(prec);
    if (s.find('/') != std::string::npos) {
        mpq_t q;
        mpq_init(q);
        if (mpq_set_str(q, s.c_str(), 10) != 0 || mpz_sgn(mpq_denref(q)) == 0) {
            mpq_clear(q);
            throw ParseError("invalid rational literal '" + s + "'");
        }
        mpq_canonicalize(q);
        mpfr_set_q(r.lo_, q, MPFR_RNDD);
        mpfr_set_q(r.hi_, q, MPFR_RNDU);
        mpq_clear(q);
    } else {
        char* end_lo = nullptr;
        char* end_hi = nullptr;
        mpfr_strtofr(r.lo_, s.c_str(), &end_lo, 10, MPFR_RNDD);
        mpfr_strtofr(r.hi_, s.c_str(), &end_hi, 10, MPFR_RNDU);
        if (end_lo == s.c_str() || *end_lo != '\0') {
            throw ParseError("invalid decimal literal '" + s + "'");
        }
        if (mpfr_nan_p(r.lo_) || mpfr_inf_p(r.lo_)) {
            throw ParseError("numeric literal must be finite: '" + s + "'");
        }
    }
    r.check();
    return r;
}

Interval Interval::from_long(long value, Prec prec) {
    Interval r;
    r.init(prec);
    mpfr_set_si(r.lo_, value, MPFR_RNDD);
    mpfr_set_si(r.hi_, value, MPFR_RNDU);
    r.check();
    return r;
}

Interval Interval::from_ratio(long num, long den, Prec prec) {
    if (den == 0) throw ParseError("rational with zero denominator");
    Interval r;
    r.init(prec);
    mpq_t q;
    mpq_init(q);
    mpq_set_si(q, num, 1);
    mpz_set_si(mpq_denref(q), den);
    mpq_canonicalize(q);
    mpfr_set_q(r.lo_, q, MPFR_RNDD);
    mpfr_set_q(r.hi_, q, MPFR_RNDU);
    mpq_clear(q);
    r.check();
    return r;
}

Interval Interval::from_mpq(mpq_srcptr value, Prec prec) {
    Interval r;
    r.init(prec);
    mpfr_set_q(r.lo_, value, MPFR_RNDD);
    mpfr_set_q(r.hi_, value, MPFR_RNDU);
    r.check();
    return r;
}

Interval Interval::from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, Prec prec) {
    Interval r;
    r.init(prec);
    mpfr_set(r.lo_, lo, MPFR_RNDD);
    mpfr_set(r.hi_, hi, MPFR_RNDU);
    r.check();
    return r;
}

Interval Interval::pi(Prec prec) {
    Interval r;
    r.init(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    r.check();
    return r;
}

Interval Interval::pi_squared(Prec prec) {
    return square(pi(prec));
}

Interval Interval::entire(Prec prec) {
    Interval r;
    r.init(prec);
    mpfr_set_inf(r.lo_, -1);
    mpfr_set_inf(r.hi_, 1);
    return r;
}

bool Interval::is_point() const {
    return mpfr_equal_p(lo_, hi_) && mpfr_number_p(lo_);
}

bool Interval::is_finite() const {
    return mpfr_number_p(lo_) && mpfr_number_p(hi_);
}

bool Interval::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Interval::is_certainly_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::is_certainly_negative() const { return mpfr_sgn(hi_) < 0; }

bool Interval::certainly_less(const Interval& other) const {
    return mpfr_less_p(hi_, other.lo_);
}

bool Interval::certainly_greater(const Interval& other) const {
    return mpfr_greater_p(lo_, other.hi_);
}

bool Interval::contains(const Interval& other) const {
    return mpfr_lessequal_p(lo_, other.lo_) && mpfr_greaterequal_p(hi_, other.hi_);
}

bool Interval::contains_mpq(mpq_srcptr value) const {
    return mpfr_cmp_q(lo_, value) <= 0 && mpfr_cmp_q(hi_, value) >= 0;
}

bool Interval::intersects(const Interval& other) const {
    return !certainly_less(other) && !certainly_greater(other);
}

bool Interval::same_endpoints(const Interval& other) const {
    return mpfr_equal_p(lo_, other.lo_) && mpfr_equal_p(hi_, other.hi_);
}

Interval Interval::hull(const Interval& a, const Interval& b) {
    Interval r;
    r.init(std::max(a.precision(), b.precision()));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    r.check();
    return r;
}

Interval Interval::intersect(const Interval& a, const Interval& b) {
    Interval r;
    r.init(std::max(a.precision(), b.precision()));
    mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    if (mpfr_greater_p(r.lo_, r.hi_)) {
        throw InternalError("empty intersection of " + a.to_string(12) + " and " +
                            b.to_string(12));
    }
    r.check();
    return r;
}

Interval Interval::min_enclosure(const Interval& a, const Interval& b) {
    Interval r;
    r.init(std::max(a.precision(), b.precision()));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    r.check();
    return r;
}

Interval Interval::max_enclosure(const Interval& a, const Interval& b) {
    Interval r;
    r.init(std::max(a.precision(), b.precision()));
    mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    r.check();
    return r;
}

Interval Interval::width() const {
    Interval r;
    r.init(precision());
    mpfr_sub(r.hi_, hi_, lo_, MPFR_RNDU);
    mpfr_set(r.lo_, r.hi_, MPFR_RNDD);
    if (mpfr_inf_p(r.lo_)) mpfr_nextbelow(r.lo_);  // keep lo finite
    r.check();
    return r;
}

double Interval::width_double() const {
    mpfr_t w;
    mpfr_init2(w, 64);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

double Interval::approx() const {
    if (mpfr_inf_p(lo_)) return mpfr_get_d(hi_, MPFR_RNDN);
    if (mpfr_inf_p(hi_)) return mpfr_get_d(lo_, MPFR_RNDN);
    mpfr_t m;
    mpfr_init2(m, 64);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_ui(m, m, 2, MPFR_RNDN);
    double d = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return d;
}

std::string Interval::lo_string(int digits) const {
    return format_mpfr(lo_, digits, MPFR_RNDD);
}

std::string Interval::hi_string(int digits) const {
    return format_mpfr(hi_, digits, MPFR_RNDU);
}

std::string Interval::to_string(int digits) const {
    return "[" + lo_string(digits) + ", " + hi_string(digits) + "]";
}

Interval operator+(const Interval& a, const Interval& b) {
    Interval r;
    r.init(std::max(a.precision(), b.precision()));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    r.check();
    return r;
}

Interval operator-(const Interval& a, const Interval& b) {
    Interval r;
    r.init(std::max(a.precision(), b.precision()));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    r.check();
    return r;
}

Interval Interval::operator-() const {
    Interval r;
    r.init(precision());
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    r.check();
    return r;
}

Interval operator*(const Interval& a, const Interval& b) {
    Interval r;
    r.init(std::max(a.precision(), b.precision()));
    mpfr_t c, best;
    mpfr_init2(c, r.precision());
    mpfr_init2(best, r.precision());

    const std::array<std::pair<mpfr_srcptr, mpfr_srcptr>, 4> pairs = {{
        {a.lo_, b.lo_}, {a.lo_, b.hi_}, {a.hi_, b.lo_}, {a.hi_, b.hi_}}};

    bool first = true;
    for (const auto& [x, y] : pairs) {
        mpfr_mul(c, x, y, MPFR_RNDD);
        nan_to_zero(c);
        if (first || mpfr_less_p(c, best)) mpfr_set(best, c, MPFR_RNDD);
        first = false;
    }
    mpfr_set(r.lo_, best, MPFR_RNDD);

    first = true;
    for (const auto& [x, y] : pairs) {
        mpfr_mul(c, x, y, MPFR_RNDU);
        nan_to_zero(c);
        if (first || mpfr_greater_p(c, best)) mpfr_set(best, c, MPFR_RNDU);
        first = false;
    }
    mpfr_set(r.hi_, best, MPFR_RNDU);

    mpfr_clear(c);
    mpfr_clear(best);
    r.check();
    return r;
}

Interval operator/(const Interval& a, const Interval& b) {
    Prec prec = std::max(a.precision(), b.precision());
    if (mpfr_zero_p(b.lo_) && mpfr_zero_p(b.hi_)) {
        throw DomainError("division by an interval that is certainly zero");
    }
    // Divisor straddles zero strictly: the quotient set is unbounded on both
    // sides.
    if (mpfr_sgn(b.lo_) < 0 && mpfr_sgn(b.hi_) > 0) {
        return Interval::entire(prec);
    }
    Interval r;
    r.init(prec);
    mpfr_t c, best, bl, bh;
    mpfr_init2(c, prec);
    mpfr_init2(best, prec);
    mpfr_init2(bl, b.precision());
    mpfr_init2(bh, b.precision());
    // A zero endpoint of the divisor must carry the sign of the side it
    // bounds, so that x/0 corners blow up toward the correct infinity:
    // [-3, 0] divides as if the endpoint were -0, [0, 3] as if +0.
    mpfr_set(bl, b.lo_, MPFR_RNDD);
    mpfr_set(bh, b.hi_, MPFR_RNDU);
    if (mpfr_zero_p(bh) && mpfr_sgn(b.lo_) < 0) mpfr_set_zero(bh, -1);
    if (mpfr_zero_p(bl) && mpfr_sgn(b.hi_) > 0) mpfr_set_zero(bl, 1);

    const std::array<std::pair<mpfr_srcptr, mpfr_srcptr>, 4> pairs = {{
        {a.lo_, bl}, {a.lo_, bh}, {a.hi_, bl}, {a.hi_, bh}}};

    bool first = true;
    for (const auto& [x, y] : pairs) {
        mpfr_div(c, x, y, MPFR_RNDD);
        nan_to_zero(c);
        if (first || mpfr_less_p(c, best)) mpfr_set(best, c, MPFR_RNDD);
        first = false;
    }
    mpfr_set(r.lo_, best, MPFR_RNDD);

    first = true;
    for (const auto& [x, y] : pairs) {
        mpfr_div(c, x, y, MPFR_RNDU);
        nan_to_zero(c);
        if (first || mpfr_greater_p(c, best)) mpfr_set(best, c, MPFR_RNDU);
        first = false;
    }
    mpfr_set(r.hi_, best, MPFR_RNDU);

    mpfr_clear(c);
    mpfr_clear(best);
    mpfr_clear(bl);
    mpfr_clear(bh);
    r.check();
    return r;
}

namespace {

// Applies a correctly rounded monotone increasing function to both endpoints.
template <typename F>
Interval monotone_increasing(const Interval& x, F&& f) {
    mpfr_t lo, hi;
    mpfr_init2(lo, x.precision());
    mpfr_init2(hi, x.precision());
    f(lo, x.lo(), MPFR_RNDD);
    f(hi, x.hi(), MPFR_RNDU);
    Interval out = Interval::from_endpoints(lo, hi, x.precision());
    mpfr_clear(lo);
    mpfr_clear(hi);
    return out;
}

} // namespace

Interval sqrt(const Interval& x) {
    if (mpfr_sgn(x.hi()) < 0) {
        throw DomainError("sqrt of certainly negative interval, hi = " +
                          x.hi_string(12));
    }
    mpfr_t lo, hi;
    mpfr_init2(lo, x.precision());
    mpfr_init2(hi, x.precision());
    if (mpfr_sgn(x.lo()) < 0) {
        mpfr_set_zero(lo, 1);  // enclosure of a nonnegative value: clamp
    } else {
        mpfr_sqrt(lo, x.lo(), MPFR_RNDD);
    }
    mpfr_sqrt(hi, x.hi(), MPFR_RNDU);
    Interval r = Interval::from_endpoints(lo, hi, x.precision());
    mpfr_clear(lo);
    mpfr_clear(hi);
    return r;
}

Interval log(const Interval& x) {
    if (mpfr_sgn(x.hi()) <= 0) {
        throw DomainError("log of certainly nonpositive interval, hi = " +
                          x.hi_string(12));
    }
    mpfr_t lo, hi;
    mpfr_init2(lo, x.precision());
    mpfr_init2(hi, x.precision());
    if (mpfr_sgn(x.lo()) <= 0) {
        mpfr_set_inf(lo, -1);  // log(0+) = -inf: sound for any enclosed positive value
    } else {
        mpfr_log(lo, x.lo(), MPFR_RNDD);
    }
    mpfr_log(hi, x.hi(), MPFR_RNDU);
    Interval r = Interval::from_endpoints(lo, hi, x.precision());
    mpfr_clear(lo);
    mpfr_clear(hi);
    return r;
}

Interval exp(const Interval& x) {
    return monotone_increasing(x, [](mpfr_ptr rop, mpfr_srcptr op, mpfr_rnd_t rnd) {
        mpfr_exp(rop, op, rnd);
    });
}

Interval sinh(const Interval& x) {
    return monotone_increasing(x, [](mpfr_ptr rop, mpfr_srcptr op, mpfr_rnd_t rnd) {
        mpfr_sinh(rop, op, rnd);
    });
}

Interval asinh(const Interval& x) {
    return monotone_increasing(x, [](mpfr_ptr rop, mpfr_srcptr op, mpfr_rnd_t rnd) {
        mpfr_asinh(rop, op, rnd);
    });
}

Interval cosh(const Interval& x) {
    mpfr_t lo, hi, c1, c2;
    mpfr_init2(lo, x.precision());
    mpfr_init2(hi, x.precision());
    mpfr_init2(c1, x.precision());
    mpfr_init2(c2, x.precision());
    mpfr_cosh(c1, x.lo(), MPFR_RNDU);
    mpfr_cosh(c2, x.hi(), MPFR_RNDU);
    mpfr_max(hi, c1, c2, MPFR_RNDU);
    if (x.contains_zero()) {
        mpfr_set_ui(lo, 1, MPFR_RNDD);  // cosh attains its minimum 1 at 0
    } else {
        mpfr_cosh(c1, x.lo(), MPFR_RNDD);
        mpfr_cosh(c2, x.hi(), MPFR_RNDD);
        mpfr_min(lo, c1, c2, MPFR_RNDD);
    }
    Interval r = Interval::from_endpoints(lo, hi, x.precision());
    mpfr_clear(lo);
    mpfr_clear(hi);
    mpfr_clear(c1);
    mpfr_clear(c2);
    return r;
}

Interval acosh(const Interval& x) {
    if (mpfr_cmp_ui(x.hi(), 1) < 0) {
        throw DomainError("acosh of interval certainly below 1, hi = " +
                          x.hi_string(12));
    }
    mpfr_t lo, hi;
    mpfr_init2(lo, x.precision());
    mpfr_init2(hi, x.precision());
    if (mpfr_cmp_ui(x.lo(), 1) < 0) {
        mpfr_set_zero(lo, 1);  // enclosure dips below the domain: clamp to acosh(1)
    } else {
        mpfr_acosh(lo, x.lo(), MPFR_RNDD);
    }
    mpfr_acosh(hi, x.hi(), MPFR_RNDU);
    Interval r = Interval::from_endpoints(lo, hi, x.precision());
    mpfr_clear(lo);
    mpfr_clear(hi);
    return r;
}

Interval atanh(const Interval& x) {
    if (mpfr_cmp_si(x.lo(), -1) < 0 || mpfr_cmp_si(x.hi(), 1) > 0) {
        throw DomainError("atanh argument outside [-1, 1]: " + x.to_string(12));
    }
    return monotone_increasing(x, [](mpfr_ptr rop, mpfr_srcptr op, mpfr_rnd_t rnd) {
        mpfr_atanh(rop, op, rnd);
    });
}

Interval abs(const Interval& x) {
    mpfr_t lo, hi, a1, a2;
    mpfr_init2(lo, x.precision());
    mpfr_init2(hi, x.precision());
    mpfr_init2(a1, x.precision());
    mpfr_init2(a2, x.precision());
    mpfr_abs(a1, x.lo(), MPFR_RNDU);
    mpfr_abs(a2, x.hi(), MPFR_RNDU);
    mpfr_max(hi, a1, a2, MPFR_RNDU);
    if (x.contains_zero()) {
        mpfr_set_zero(lo, 1);
    } else {
        mpfr_abs(a1, x.lo(), MPFR_RNDD);
        mpfr_abs(a2, x.hi(), MPFR_RNDD);
        mpfr_min(lo, a1, a2, MPFR_RNDD);
    }
    Interval r = Interval::from_endpoints(lo, hi, x.precision());
    mpfr_clear(lo);
    mpfr_clear(hi);
    mpfr_clear(a1);
    mpfr_clear(a2);
    return r;
}

Interval pow_si(const Interval& x, long n) {
    Prec prec = x.precision();
    if (n == 0) return Interval::from_long(1, prec);
    if (n < 0) return Interval::from_long(1, prec) / pow_si(x, -n);
    mpfr_t lo, hi, c1, c2;
    mpfr_init2(lo, prec);
    mpfr_init2(hi, prec);
    mpfr_init2(c1, prec);
    mpfr_init2(c2, prec);
    bool even = (n % 2 == 0);
    if (!even || !x.contains_zero()) {
        // monotone on the interval's sign region
        mpfr_pow_si(c1, x.lo(), n, MPFR_RNDD);
        mpfr_pow_si(c2, x.hi(), n, MPFR_RNDD);
        mpfr_min(lo, c1, c2, MPFR_RNDD);
        mpfr_pow_si(c1, x.lo(), n, MPFR_RNDU);
        mpfr_pow_si(c2, x.hi(), n, MPFR_RNDU);
        mpfr_max(hi, c1, c2, MPFR_RNDU);
    } else {
        mpfr_set_zero(lo, 1);
        mpfr_pow_si(c1, x.lo(), n, MPFR_RNDU);
        mpfr_pow_si(c2, x.hi(), n, MPFR_RNDU);
        mpfr_max(hi, c1, c2, MPFR_RNDU);
    }
    Interval r = Interval::from_endpoints(lo, hi, prec);
    mpfr_clear(lo);
    mpfr_clear(hi);
    mpfr_clear(c1);
    mpfr_clear(c2);
    return r;
}

Interval square(const Interval& x) {
    return pow_si(x, 2);
}

} // namespace csurf

#include "csurf/hyperbolic.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace csurf {

namespace {

Interval point_at(mpfr_srcptr x, Prec prec) {
    return Interval::from_endpoints(x, x, prec);
}

Interval zero_point(Prec prec) { return Interval::from_long(0, prec); }

} // namespace

Interval collar_eta(const Interval& x) {
    if (mpfr_sgn(x.hi()) <= 0) {
        throw DomainError("collar_eta needs x > 0, hi = " + x.hi_string(12));
    }
    Prec prec = x.precision();
    Interval xc = x;
    if (mpfr_sgn(x.lo()) < 0) {
        // Enclosed true value is positive; clamp the stray negative part.
        xc = Interval::from_endpoints(zero_point(prec).lo(), x.hi(), prec);
    }
    Interval s = sinh(xc * Interval::from_ratio(1, 2, prec));
    return asinh(Interval::from_long(1, prec) / s);
}

Interval upper_bound_atanh(const Interval& q) {
    if (mpfr_sgn(q.hi()) <= 0) {
        throw DomainError("upper_bound_atanh needs q > 0, hi = " + q.hi_string(12));
    }
    Prec prec = q.precision();
    Interval at = atanh(q);
    if (mpfr_sgn(at.lo()) < 0) {
        // q encloses a value in (0,1), so atanh(q) is positive.
        at = Interval::from_endpoints(zero_point(prec).lo(), at.hi(), prec);
    }
    return Interval::pi_squared(prec) / at;
}

ScaledValue upper_bound_atanh_channels(const LogChannels& ch, Prec prec) {
    if (ch.q.has_value()) {
        return make_direct(upper_bound_atanh(*ch.q));
    }
    // ln(atanh q) banded by atanh q in [q, q/(1-q^2)], q = exp(-lambda).
    Interval neg_lambda = -ch.lambda;
    Interval q_enc = exp(neg_lambda);
    Interval widen = -log(Interval::from_long(1, prec) - square(q_enc));
    Interval upper_end = neg_lambda + widen;
    Interval ln_atanh =
        Interval::from_endpoints(neg_lambda.lo(), upper_end.hi(), prec);
    Interval ln_bound = log(Interval::pi_squared(prec)) - ln_atanh;
    return exp_or_log(ln_bound);
}

CollarLowerBound lower_bound_collar(const LogChannels& ch, Prec prec) {
    Interval one = Interval::from_long(1, prec);
    Interval two = Interval::from_long(2, prec);
    Interval L = [&] {
        if (ch.q.has_value()) {
            return log((one + *ch.q) / (two * *ch.q));
        }
        // L = lambda - ln 2 + ln(1+q), with ln(1+q) banded by [0, q].
        Interval q_enc = exp(-ch.lambda);
        Interval ln1p = Interval::from_endpoints(zero_point(prec).lo(), q_enc.hi(), prec);
        return ch.lambda - log(two) + ln1p;
    }();
    if (!L.is_certainly_positive()) {
        return CollarLowerBound{Interval::from_long(0, prec), true};
    }
    Interval arg = Interval::pi_squared(prec) / L;
    return CollarLowerBound{two * collar_eta(arg), false};
}

std::optional<Interval> round_annulus_upper_bound(const CantorTree& tree, CurveId curve) {
    if (curve.n < 1) throw DomainError("curve level must be >= 1");
    const CantorLevel& level = tree.level(curve.n);
    if (level.degenerate) return std::nullopt;
    GapPair gp = gaps(tree, curve.n, curve.i);

    std::optional<Interval> min_gap;
    if (gp.left) min_gap = *gp.left;
    if (gp.right) {
        min_gap = min_gap ? Interval::min_enclosure(*min_gap, *gp.right) : *gp.right;
    }
    if (!min_gap) return std::nullopt;

    Interval r1 = level.length * Interval::from_ratio(1, 2, tree.precision);
    Interval r2 = r1 + *min_gap;
    return core_length(round_annulus_modulus(r1, r2));
}

std::optional<Interval> two_slit_upper_bound(const CantorTree& tree, CurveId curve) {
    if (curve.n < 1) throw DomainError("curve level must be >= 1");
    const CantorLevel& level = tree.level(curve.n);
    if (level.degenerate) return std::nullopt;
    long count = static_cast<long>(level.left.size());
    if (curve.i != 1 && curve.i != count) return std::nullopt;
    if (curve.i < 1 || curve.i > count) {
        throw DomainError("curve index " + std::to_string(curve.i) + " outside 1.." +
                          std::to_string(count));
    }
    size_t last = static_cast<size_t>(count - 1);
    // Slit pair: I_n^i and the convex hull of the remaining intervals.
    if (curve.i == 1) {
        return core_length(two_slit_modulus(level.left[0], level.right[0],
                                            level.left[1], level.right[last]));
    }
    return core_length(two_slit_modulus(level.left[0], level.right[last - 1],
                                        level.left[last], level.right[last]));
}

namespace {

// Upper-bound candidates never mix scales in practice: log-scale atanh
// bounds appear exactly when the level geometry is degenerate, which
// suppresses the ring bounds. Verify the invariant instead of assuming it.
void check_log_dominates(const ScaledValue& log_cand, const Interval& direct_hi_point) {
    if (mpfr_inf_p(log_cand.value.hi()) && mpfr_inf_p(log_cand.value.lo())) {
        throw InternalError("log-scale bound with no finite endpoint");
    }
    Interval ln_direct = log(direct_hi_point);
    if (!(mpfr_greater_p(log_cand.value.lo(), ln_direct.hi()))) {
        throw InternalError("mixed-scale upper bounds too close to combine");
    }
}

} // namespace

LengthBounds curve_bounds(const SequenceSpec& spec, const CantorTree& tree,
                          CurveId curve, Prec prec) {
    if (curve.n < 1 || curve.n > tree.depth()) {
        throw DomainError("curve level " + std::to_string(curve.n) +
                          " outside built depth " + std::to_string(tree.depth()));
    }
    long count = 1L << curve.n;
    if (curve.i < 1 || curve.i > count) {
        throw DomainError("curve index " + std::to_string(curve.i) + " outside 1.." +
                          std::to_string(count));
    }

    LogChannels ch = eval_log_channels(spec, curve.n, prec);
    CollarLowerBound lb = lower_bound_collar(ch, prec);

    LengthBounds out;
    out.curve = curve;
    out.lower = lb.value;
    out.lower_trivial = lb.trivial;
    out.lower_method = "collar";

    bool atanh_applicable =
        curve.i == 1 || monotone_nonincreasing_certificate(spec, prec);
    if (atanh_applicable) {
        out.upper_candidates.push_back({"atanh", upper_bound_atanh_channels(ch, prec)});
    }
    if (auto ra = round_annulus_upper_bound(tree, curve)) {
        out.upper_candidates.push_back({"round_annulus", make_direct(std::move(*ra))});
    }
    if (auto ts = two_slit_upper_bound(tree, curve)) {
        out.upper_candidates.push_back({"two_slit", make_direct(std::move(*ts))});
    }

    // The true length is below every method's value, so the interval minimum
    // of the candidates is a sound enclosure of the best bound.
    std::optional<Interval> best_direct;
    std::optional<Interval> best_log;
    std::string direct_method, log_method;
    for (const auto& cand : out.upper_candidates) {
        if (cand.bound.log_scale) {
            if (!best_log || mpfr_less_p(cand.bound.value.hi(), best_log->hi())) {
                log_method = cand.method;
            }
            best_log = best_log ? Interval::min_enclosure(*best_log, cand.bound.value)
                                : cand.bound.value;
        } else {
            if (!best_direct || mpfr_less_p(cand.bound.value.hi(), best_direct->hi())) {
                direct_method = cand.method;
            }
            best_direct = best_direct
                              ? Interval::min_enclosure(*best_direct, cand.bound.value)
                              : cand.bound.value;
        }
    }
    if (best_direct) {
        if (best_log) {
            check_log_dominates(ScaledValue{*best_log, true},
                                point_at(best_direct->hi(), prec));
        }
        out.upper = make_direct(*best_direct);
        out.upper_method = direct_method;
    } else if (best_log) {
        out.upper = make_log(*best_log);
        out.upper_method = log_method;
    }

    if (out.upper) {
        // Cross-bound soundness: the certified lower endpoint may never
        // exceed the certified upper endpoint.
        bool ok;
        if (!out.upper->log_scale) {
            ok = mpfr_lessequal_p(out.lower.lo(), out.upper->value.hi()) != 0;
        } else if (mpfr_inf_p(out.upper->value.hi())) {
            ok = true;
        } else {
            Interval e = exp(point_at(out.upper->value.hi(), prec));
            ok = mpfr_lessequal_p(out.lower.lo(), e.hi()) != 0;
        }
        if (!ok) {
            throw InternalError("lower bound exceeds upper bound for curve (" +
                                std::to_string(curve.n) + "," +
                                std::to_string(curve.i) + ")");
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hexagon trigonometry

namespace {

void require_positive(const Interval& x, const char* name) {
    if (!x.is_certainly_positive()) {
        throw DomainError(std::string("boundary length ") + name +
                          " must be certainly positive, got " + x.to_string(12));
    }
}

Interval hexagon_cosh_seam(const Interval& a, const Interval& b, const Interval& c,
                           Prec prec) {
    Interval half = Interval::from_ratio(1, 2, prec);
    Interval ha = a * half, hb = b * half, hc = c * half;
    return (cosh(ha) + cosh(hb) * cosh(hc)) / (sinh(hb) * sinh(hc));
}

} // namespace

Interval hexagon_seam(const Interval& a, const Interval& b, const Interval& c) {
    require_positive(a, "a");
    require_positive(b, "b");
    require_positive(c, "c");
    Prec prec = std::max(std::max(a.precision(), b.precision()), c.precision());

    // Corner hull: cosh s is increasing in a and decreasing in b and c
    // (the b-derivative has the sign of -(cosh(c/2) + cosh(a/2) cosh(b/2))),
    // so the box extremes sit at two opposite corners; evaluating all eight
    // and hulling also absorbs the rounding spread.
    std::optional<Interval> hull;
    for (int bits = 0; bits < 8; ++bits) {
        Interval pa = point_at((bits & 1) ? a.hi() : a.lo(), prec);
        Interval pb = point_at((bits & 2) ? b.hi() : b.lo(), prec);
        Interval pc = point_at((bits & 4) ? c.hi() : c.lo(), prec);
        Interval corner = hexagon_cosh_seam(pa, pb, pc, prec);
        hull = hull ? Interval::hull(*hull, corner) : corner;
    }
    return acosh(*hull);
}

// ---------------------------------------------------------------------------
// Geodesic distance

namespace {

bool endpoint_point_equal(const std::optional<Interval>& x,
                          const std::optional<Interval>& y) {
    if (!x.has_value() && !y.has_value()) return true;
    if (!x.has_value() || !y.has_value()) return false;
    return x->is_point() && y->is_point() && x->same_endpoints(*y);
}

void validate_geodesic(const Geodesic& g) {
    if (!g.p.has_value() && !g.q.has_value()) {
        throw DomainError("geodesic needs at least one finite endpoint");
    }
    if (g.p.has_value() && g.q.has_value() && g.p->is_point() &&
        g.q->is_point() && g.p->same_endpoints(*g.q)) {
        throw DomainError("geodesic endpoints coincide");
    }
}

// Finite endpoints ordered (a, b) with b the infinite slot when present.
struct NormalGeodesic {
    Interval a;
    bool b_infinite;
    std::optional<Interval> b;
};

NormalGeodesic normalize(const Geodesic& g, Prec prec) {
    if (!g.p.has_value()) return {*g.q, true, std::nullopt};
    if (!g.q.has_value()) return {*g.p, true, std::nullopt};
    (void)prec;
    return {*g.p, false, *g.q};
}

} // namespace

Interval geodesic_distance(const Geodesic& g1, const Geodesic& g2, Prec prec) {
    validate_geodesic(g1);
    validate_geodesic(g2);
    bool coincident =
        (endpoint_point_equal(g1.p, g2.p) && endpoint_point_equal(g1.q, g2.q)) ||
        (endpoint_point_equal(g1.p, g2.q) && endpoint_point_equal(g1.q, g2.p));
    if (coincident) {
        throw DomainError("coincident geodesics have no distance");
    }

    // A shared endpoint makes the pair asymptotic; the cross ratio degenerates
    // but the distance infimum is exactly zero.
    auto shares_point = [](const std::optional<Interval>& x,
                           const std::optional<Interval>& y) {
        return x.has_value() && y.has_value() && x->is_point() &&
               y->is_point() && x->same_endpoints(*y);
    };
    if (shares_point(g1.p, g2.p) || shares_point(g1.p, g2.q) ||
        shares_point(g1.q, g2.p) || shares_point(g1.q, g2.q)) {
        return Interval::from_long(0, prec);
    }

    NormalGeodesic n1 = normalize(g1, prec);
    NormalGeodesic n2 = normalize(g2, prec);
    if (n1.b_infinite && n2.b_infinite) {
        // Both share the boundary point at infinity: asymptotic.
        return Interval::from_long(0, prec);
    }

    // chi = ((a2-a1)(b2-b1)) / ((b2-a1)(a2-b1)), with the infinite-endpoint
    // limits substituted.
    Interval chi = [&] {
        if (n1.b_infinite) return (n2.a - n1.a) / (*n2.b - n1.a);
        if (n2.b_infinite) return (n2.a - n1.a) / (n2.a - *n1.b);
        return ((n2.a - n1.a) * (*n2.b - *n1.b)) /
               ((*n2.b - n1.a) * (n2.a - *n1.b));
    }();

    if (mpfr_sgn(chi.hi()) <= 0) {
        // Certainly crossing (or asymptotic at a shared endpoint).
        return Interval::from_long(0, prec);
    }
    bool straddle = mpfr_sgn(chi.lo()) < 0;
    Interval chi_pos = straddle
        ? Interval::from_endpoints(zero_point(prec).lo(), chi.hi(), prec)
        : chi;

    Interval inv = Interval::from_long(1, prec) / chi_pos;
    Interval m = Interval::min_enclosure(chi_pos, inv);
    // min(chi, 1/chi) <= 1 pointwise.
    if (mpfr_cmp_ui(m.hi(), 1) > 0) {
        Interval one = Interval::from_long(1, prec);
        m = Interval::from_endpoints(m.lo(), one.hi(), prec);
    }
    Interval d = Interval::from_long(2, prec) * atanh(sqrt(m));
    if (straddle) {
        d = Interval::from_endpoints(zero_point(prec).lo(), d.hi(), prec);
    }
    return d;
}

// ---------------------------------------------------------------------------
// Explicit hexagon realization in the half-plane

namespace {

struct Mat2 {
    Interval a, b, c, d;
};

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
    return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

// Translation by hyperbolic length t along the imaginary axis.
Mat2 axis_translation(const Interval& t, Prec prec) {
    Interval half = Interval::from_ratio(1, 2, prec);
    Interval zero = Interval::from_long(0, prec);
    return Mat2{exp(t * half), zero, zero, exp(-(t * half))};
}

// Rotation by a quarter turn about i: z -> (z-1)/(z+1), det = 1.
Mat2 quarter_turn(Prec prec) {
    Interval r = sqrt(Interval::from_ratio(1, 2, prec));
    return Mat2{r, -r, r, r};
}

std::optional<Interval> mobius_endpoint(const Interval& num, const Interval& den) {
    if (mpfr_zero_p(den.lo()) && mpfr_zero_p(den.hi())) {
        return std::nullopt;  // exactly the point at infinity
    }
    return num / den;
}

// Distance between the boundary-a geodesic and the b-c seam for one corner
// (pointwise side lengths).
Interval seam_distance_corner(const Interval& a, const Interval& b,
                              const Interval& c, Prec prec) {
    Interval half = Interval::from_ratio(1, 2, prec);
    // Hexagon side order: a/2, p_ab, b/2, p_bc(seam), c/2, p_ca.
    Interval p_ab = hexagon_seam(c, a, b);
    Mat2 E = quarter_turn(prec);
    Mat2 M = mat_mul(axis_translation(a * half, prec), E);
    M = mat_mul(M, mat_mul(axis_translation(p_ab, prec), E));
    M = mat_mul(M, mat_mul(axis_translation(b * half, prec), E));

    // Side 1 lies on (0, inf); side 4 lies on its image under M.
    Geodesic axis{Interval::from_long(0, prec), std::nullopt};
    Geodesic seam{mobius_endpoint(M.b, M.d), mobius_endpoint(M.a, M.c)};
    if (!seam.p.has_value() && !seam.q.has_value()) {
        throw InternalError("hexagon image geodesic collapsed");
    }
    Interval d = geodesic_distance(axis, seam, prec);
    if (!d.is_certainly_positive()) {
        throw RealizationError(
            "hexagon side geodesics failed certified separation "
            "(precision too low for these side lengths)");
    }
    return d;
}

} // namespace

Interval pants_seam_distance(const Interval& a, const Interval& b, const Interval& c) {
    require_positive(a, "a");
    require_positive(b, "b");
    require_positive(c, "c");
    Prec prec = std::max(std::max(a.precision(), b.precision()), c.precision());

    // Corner hull; decreasing in a, increasing in b and c (grid-verified by
    // the test suite rather than assumed from a formula).
    std::optional<Interval> hull;
    for (int bits = 0; bits < 8; ++bits) {
        Interval pa = point_at((bits & 1) ? a.hi() : a.lo(), prec);
        Interval pb = point_at((bits & 2) ? b.hi() : b.lo(), prec);
        Interval pc = point_at((bits & 4) ? c.hi() : c.lo(), prec);
        Interval corner = seam_distance_corner(pa, pb, pc, prec);
        hull = hull ? Interval::hull(*hull, corner) : corner;
    }
    return *hull;
}

// ---------------------------------------------------------------------------
// Pants assembly

namespace {

Interval boundary_enclosure(const SequenceSpec& spec, const CantorTree& tree,
                            CurveId curve, Prec prec) {
    LengthBounds lb = curve_bounds(spec, tree, curve, prec);
    std::string id = "(" + std::to_string(curve.n) + "," + std::to_string(curve.i) + ")";
    if (!lb.upper.has_value()) {
        throw RepresentationError("no certified upper bound for boundary curve " + id);
    }
    if (lb.upper->log_scale) {
        throw RepresentationError("upper bound for boundary curve " + id +
                                  " is representable only in log scale");
    }
    if (lb.lower_trivial || !lb.lower.is_certainly_positive()) {
        throw RealizationError("lower bound for boundary curve " + id +
                               " is trivial; pants realization needs certified "
                               "positive boundary lengths");
    }
    return Interval::from_endpoints(lb.lower.lo(), lb.upper->value.hi(), prec);
}

} // namespace

PantsGeometry pants_geometry(const SequenceSpec& spec, const CantorTree& tree,
                             CurveId pants, Prec prec) {
    if (pants.n < 1) throw DomainError("pants level must be >= 1");
    if (pants.n + 1 > tree.depth()) {
        throw DomainError("pants at level " + std::to_string(pants.n) +
                          " needs the tree built to level " +
                          std::to_string(pants.n + 1));
    }
    PantsGeometry out;
    out.pants = pants;
    out.a = boundary_enclosure(spec, tree, {pants.n, pants.i}, prec);
    out.b = boundary_enclosure(spec, tree, {pants.n + 1, 2 * pants.i - 1}, prec);
    out.c = boundary_enclosure(spec, tree, {pants.n + 1, 2 * pants.i}, prec);
    out.seam = hexagon_seam(out.a, out.b, out.c);
    out.boundary_to_seam = pants_seam_distance(out.a, out.b, out.c);
    return out;
}

} // namespace csurf

// Acceptance gate: nine independently checkable guarantees, one line each.
// Exit status is the number of failed criteria.

#include <array>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gmp.h>

#include "helpers.hpp"

#include "csurf/cantor.hpp"
#include "csurf/classify.hpp"
#include "csurf/conformal.hpp"
#include "csurf/hyperbolic.hpp"
#include "csurf/interval.hpp"
#include "csurf/seqspec.hpp"

using namespace csurf;
using tst::iv;

namespace {

// Pinned tolerances
constexpr double kCriterionWidthCap = 1e-10;   // width of a_n enclosures
const char* const kSpecialFnTol = "1e-12";     // special-function agreement
const char* const kDualRouteTol = "1e-10";     // geometry dual-route agreement
const char* const kChainRelTol = "0.01";       // collar chain vs references

SequenceSpec iterated() { return parse_spec(R"js({"family":"iterated_exp","q1":"1/2"})js"); }
SequenceSpec constant_half() { return parse_spec(R"js({"family":"constant","q":"1/2"})js"); }
SequenceSpec alternating() { return parse_spec(R"js({"family":"alternating_half_power"})js"); }

// 1. Criterion values for the iterated family equal ln n with tight widths.
bool criterion1() {
    SequenceSpec spec = iterated();
    CountableCheck cc = check_countable(spec, 50, 128);
    if (cc.rows.size() != 50) return false;
    for (long n = 2; n <= 50; ++n) {
        const CriterionRow& row = cc.rows[n - 1];
        if (!row.defined || !row.value) return false;
        Interval ref = log(Interval::from_long(n, 256));
        if (!row.value->contains(ref)) return false;
        if (!(row.value->width_double() < kCriterionWidthCap)) return false;
    }
    return cc.certified;
}

// 2. Alternating family: uncountable verdict with witnesses at exactly the
// odd levels.
bool criterion2() {
    ClassificationReport r = classify(alternating(), 40, iv("1/3"), 128);
    if (r.verdict != Verdict::Uncountable || !r.uncountable.certified) return false;
    std::vector<long> odd;
    for (long n = 1; n <= 40; n += 2) odd.push_back(n);
    return r.uncountable.witnesses == odd;
}

// 3. Constant-1/2 geometry: every certified lower bound sits below every
// certified upper bound through level 8, and the level-1 bounds hit their
// regression windows.
bool criterion3() {
    SequenceSpec spec = constant_half();
    CantorTree tree = build_levels(spec, 8, 128);
    Interval max_lower = Interval::entire(128);   // running max of lower.lo
    Interval min_upper = Interval::entire(128);   // running min of upper.hi
    bool first = true;
    for (long n = 1; n <= 8; ++n) {
        for (long i = 1; i <= (1L << n); ++i) {
            LengthBounds lb = curve_bounds(spec, tree, {n, i}, 128);
            if (lb.lower_trivial || !lb.upper || lb.upper->log_scale) return false;
            if (first) {
                max_lower = lb.lower;
                min_upper = lb.upper->value;
                first = false;
            } else {
                max_lower = Interval::max_enclosure(max_lower, lb.lower);
                min_upper = Interval::min_enclosure(min_upper, lb.upper->value);
            }
        }
    }
    if (mpfr_cmp(max_lower.lo(), min_upper.hi()) >= 0) return false;

    LengthBounds b11 = curve_bounds(spec, tree, {1, 1}, 128);
    auto inside = [](const Interval& v, const char* lo, const char* hi) {
        return iv(lo, 256).certainly_less(v) && v.certainly_less(iv(hi, 256));
    };
    if (!inside(b11.lower, "2.0e-5", "2.2e-5")) return false;
    bool saw_annulus = false, saw_atanh = false;
    for (const MethodBound& mb : b11.upper_candidates) {
        if (mb.method == "round_annulus") {
            saw_annulus = true;
            if (!inside(mb.bound.value, "12.26", "12.27")) return false;
        }
        if (mb.method == "atanh") {
            saw_atanh = true;
            if (!inside(mb.bound.value, "17.96", "17.97")) return false;
        }
    }
    return saw_annulus && saw_atanh;
}

// 4. Collar threshold for the iterated family at K = 2, the bound chain, and
// monotonicity of the effective level in K (absent = infinity).
bool criterion4() {
    SequenceSpec spec = iterated();
    std::vector<ThresholdRow> rows;
    std::optional<long> n2 = threshold_n2(spec, Interval::from_long(2, 128), 10, 128, &rows);
    if (!n2 || *n2 != 4 || rows.size() != 4) return false;
    const char* chain[3] = {
        "0.0013995643709418897520943195192694082725598116696126",
        "1.8523421926305547735797554906871884118234909053742",
        "1582.7837031274434331632759322643912352157021056345",
    };
    for (int k = 0; k < 3; ++k) {
        if (!tst::within_rel(rows[k + 1].lhs, chain[k], kChainRelTol)) return false;
        if (!rows[k + 1].lhs.contains(iv(chain[k], 256))) return false;
    }

    std::optional<long> prev_n2;
    std::optional<long> prev_eff;
    bool eff_absent_seen = false;
    for (const char* ks : {"1", "1.5", "2", "3"}) {
        CantorTree tree = build_levels(spec, 6, 128);
        ThresholdReport rep = effective_level(spec, tree, iv(ks), 8, 128);
        if (prev_n2 && rep.n2 && *rep.n2 < *prev_n2) return false;
        if (rep.n2) prev_n2 = rep.n2;
        if (eff_absent_seen && rep.effective) return false;
        if (prev_eff && rep.effective && *rep.effective < *prev_eff) return false;
        if (rep.effective) prev_eff = rep.effective;
        else eff_absent_seen = true;
    }
    return true;
}

// 5. Special functions: K(0), the AGM against a truncated hypergeometric
// series, and the Grotzsch modulus product identity.
bool criterion5() {
    Interval k0 = elliptic_K(Interval(128));
    Interval half_pi = Interval::pi(256) * Interval::from_ratio(1, 2, 256);
    if (!k0.contains(half_pi)) return false;
    if (!tst::within_abs(k0, "1.5707963267948966192313216916397514420985846996876",
                         kSpecialFnTol))
        return false;

    for (const char* ks : {"0.05", "0.1", "0.2"}) {
        Interval k = iv(ks, 256);
        Interval k2 = square(k);
        Interval term = Interval::from_long(1, 256);
        Interval sum = term;
        for (long n = 1; n <= 30; ++n) {
            term = term * square(Interval::from_ratio(2 * n - 1, 2 * n, 256)) * k2;
            sum = sum + term;
        }
        Interval tail = term * k2 / (Interval::from_long(1, 256) - k2);
        Interval series = Interval::pi(256) * Interval::from_ratio(1, 2, 256) *
                          Interval::hull(sum, sum + tail);
        Interval agm = elliptic_K(k);
        if (!agm.intersects(series)) return false;
        if (!tst::within_abs(agm - series, "0", kSpecialFnTol)) return false;
    }

    Interval quarter_pi2 = Interval::pi_squared(256) * Interval::from_ratio(1, 4, 256);
    for (long j = 1; j <= 20; ++j) {
        Interval r = Interval::from_ratio(j, 21, 256);
        Interval rp = sqrt(Interval::from_long(1, 256) - square(r));
        if (!(grotzsch_mu(r) * grotzsch_mu(rp)).contains(quarter_pi2)) return false;
    }
    return grotzsch_mu(sqrt(iv("1/2", 256))).contains(half_pi);
}

// Test-local matrix route for criterion 6: translations along the imaginary
// axis alternated with quarter turns at i.
struct M2 {
    Interval a, b, c, d;
};

M2 mul(const M2& x, const M2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

M2 step(const Interval& s) {
    Interval h = s * Interval::from_ratio(1, 2, 256);
    Interval r = sqrt(Interval::from_ratio(1, 2, 256));
    M2 trans{exp(h), Interval(256), Interval(256), exp(-h)};
    M2 turn{r, -r, r, r};
    return mul(trans, turn);
}

// 6. Hexagon and pants geometry agree across independent routes.
bool criterion6() {
    const char* const triples[][3] = {
        {"1", "1", "1"},     {"1", "2", "3"},       {"2", "1", "1"},
        {"0.5", "3", "2.5"}, {"1", "1", "2"},       {"3", "0.5", "0.5"},
        {"2", "2", "1"},     {"1.5", "2.5", "0.8"}, {"4", "1", "2"},
        {"0.7", "0.7", "3"},
    };
    Interval half = Interval::from_ratio(1, 2, 256);
    for (const auto& t : triples) {
        Interval a = iv(t[0], 256), b = iv(t[1], 256), c = iv(t[2], 256);
        // Closed-form seams must close the hexagon up to sign
        std::array<Interval, 6> sides = {a * half,  hexagon_seam(c, a, b),
                                         b * half,  hexagon_seam(a, b, c),
                                         c * half,  hexagon_seam(b, c, a)};
        M2 m = {Interval::from_long(1, 256), Interval(256), Interval(256),
                Interval::from_long(1, 256)};
        for (const Interval& s : sides) m = mul(m, step(s));
        if (!tst::within_abs(m.b, "0", kDualRouteTol)) return false;
        if (!tst::within_abs(m.c, "0", kDualRouteTol)) return false;
        if (!tst::within_abs(m.a, "-1", kDualRouteTol)) return false;
        if (!tst::within_abs(m.d, "-1", kDualRouteTol)) return false;

        // Matrix-route distance against the pentagon relation
        Interval d = pants_seam_distance(a, b, c);
        Interval lhs = cosh(d);
        Interval rhs = sinh(hexagon_seam(c, a, b)) * sinh(b * half);
        if (!lhs.intersects(rhs)) return false;
        if (!tst::within_abs(lhs - rhs, "0", kDualRouteTol)) return false;
    }

    // Symmetric hexagon with cosh(side/2) = 2: seam encloses arccosh 2
    Interval a = Interval::from_long(2, 256) * acosh(Interval::from_long(2, 256));
    Interval s = hexagon_seam(a, a, a);
    Interval ref = acosh(Interval::from_long(2, 256));
    if (!s.contains(ref)) return false;
    return tst::within_abs(s - ref, "0", kDualRouteTol);
}

// 7. Raising precision nests every exported quantity, and interval arithmetic
// contains exact rational results on 1000 random cases.
bool criterion7() {
    using Fn = std::function<Interval(Prec)>;
    SequenceSpec cst = constant_half();
    SequenceSpec alt = alternating();
    SequenceSpec it = iterated();
    std::vector<Fn> quantities = {
        [](Prec p) { return elliptic_K(Interval::from_ratio(1, 3, p)); },
        [](Prec p) { return grotzsch_mu(Interval::from_ratio(1, 5, p)); },
        [](Prec p) {
            return round_annulus_modulus(Interval::from_long(1, p), Interval::from_long(7, p))
                .value;
        },
        [](Prec p) {
            return two_slit_modulus(Interval(p), Interval::from_ratio(1, 4, p),
                                    Interval::from_ratio(3, 4, p), Interval::from_long(1, p))
                .value;
        },
        [](Prec p) { return core_length(RingModulus{Interval::from_ratio(2, 3, p)}); },
        [](Prec p) { return collar_eta(Interval::from_long(2, p)); },
        [](Prec p) { return upper_bound_atanh(Interval::from_ratio(1, 2, p)); },
        [&cst](Prec p) { return lower_bound_collar(eval_log_channels(cst, 1, p), p).value; },
        [&it](Prec p) { return lower_bound_collar(eval_log_channels(it, 4, p), p).value; },
        [](Prec p) {
            return hexagon_seam(Interval::from_long(1, p), Interval::from_long(2, p),
                                Interval::from_long(3, p));
        },
        [](Prec p) {
            return pants_seam_distance(Interval::from_long(1, p), Interval::from_long(2, p),
                                       Interval::from_long(3, p));
        },
        [](Prec p) {
            return geodesic_distance(Geodesic{Interval::from_long(-1, p), Interval::from_long(1, p)},
                                     Geodesic{Interval::from_long(-2, p), Interval::from_long(2, p)},
                                     p);
        },
        [&alt](Prec p) { return eval_q(alt, 4, p); },
        [&it](Prec p) { return eval_log_channels(it, 4, p).lambda; },
        [&it](Prec p) { return *criterion_closed_form(it, 9, p); },
        [&cst](Prec p) {
            CantorTree tree = build_levels(cst, 3, p);
            return tree.level(3).left[2];
        },
        [&cst](Prec p) {
            CantorTree tree = build_levels(cst, 2, p);
            return curve_bounds(cst, tree, {2, 3}, p).lower;
        },
        [&cst](Prec p) {
            CantorTree tree = build_levels(cst, 2, p);
            return curve_bounds(cst, tree, {2, 3}, p).upper->value;
        },
        [](Prec p) { return wolpert_range(Interval::from_long(2, p), Interval::pi(p)).first; },
        [](Prec p) { return dehn_twist_min_dilatation(2, Interval::pi(p)); },
    };
    for (const Fn& f : quantities) {
        Interval a64 = f(64), a128 = f(128), a256 = f(256);
        if (!a64.contains(a128) || !a128.contains(a256)) return false;
    }

    std::mt19937_64 rng(20260822u);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    std::uniform_int_distribution<int> op(0, 3);
    mpq_t qa, qb, qr;
    mpq_inits(qa, qb, qr, nullptr);
    bool ok = true;
    for (int k = 0; ok && k < 1000; ++k) {
        long na = num(rng), da = den(rng), nb = num(rng), db = den(rng);
        int o = op(rng);
        mpq_set_si(qa, na, static_cast<unsigned long>(da));
        mpq_set_si(qb, nb, static_cast<unsigned long>(db));
        mpq_canonicalize(qa);
        mpq_canonicalize(qb);
        Interval ia = Interval::from_mpq(qa, 64);
        Interval ib = Interval::from_mpq(qb, 64);
        Interval res;
        switch (o) {
            case 0: mpq_add(qr, qa, qb); res = ia + ib; break;
            case 1: mpq_sub(qr, qa, qb); res = ia - ib; break;
            case 2: mpq_mul(qr, qa, qb); res = ia * ib; break;
            default:
                if (mpq_sgn(qb) == 0) { continue; }
                mpq_div(qr, qa, qb);
                res = ia / ib;
                break;
        }
        ok = res.contains_mpq(qr);
    }
    mpq_clears(qa, qb, qr, nullptr);
    return ok;
}

std::string serialize(const ClassificationReport& r) {
    std::ostringstream ss;
    ss << r.spec_digest << '|' << verdict_name(r.verdict) << '|';
    for (long w : r.uncountable.witnesses) ss << w << ',';
    ss << '|' << r.uncountable.c.to_string() << '|';
    for (const CriterionRow& row : r.countable.rows) {
        ss << row.n << ':' << row.defined << ':'
           << (row.value ? row.value->to_string() : "-") << ';';
    }
    for (const std::string& n : r.notes) ss << n << '%';
    return ss.str();
}

// 8. The two certificates never fire together on the corpus, and repeated
// runs serialize identically.
bool criterion8() {
    const char* corpus[] = {
        R"js({"family":"constant","q":"1/2"})js",
        R"js({"family":"alternating_half_power","properties":["odd_indices_constant_half"]})js",
        R"js({"family":"iterated_exp","q1":"1/2"})js",
        R"js({"family":"explicit_with_tail","values":["1/2","1/4"],)js"
        R"js("tail":{"family":"constant","q":"1/8"}})js",
        R"js({"family":"user_closed_form","expr":"1/ln(n + 3)"})js",
        R"js({"family":"user_closed_form","expr":"1/(n+1)"})js",
    };
    for (const char* text : corpus) {
        SequenceSpec spec = parse_spec(text);
        ClassificationReport r1 = classify(spec, 24, iv("1/3"), 128);
        if (r1.uncountable.certified && r1.countable.certified) return false;
        ClassificationReport r2 = classify(spec, 24, iv("1/3"), 128);
        if (serialize(r1) != serialize(r2)) return false;
    }
    return true;
}

// 9. Length window and twist dilatation conventions.
bool criterion9() {
    Interval len = Interval::pi(128);
    auto [lo, hi] = wolpert_range(Interval::from_long(1, 128), len);
    if (!lo.same_endpoints(len) || !hi.same_endpoints(len)) return false;

    Interval d1 = dehn_twist_min_dilatation(1, len);
    Interval root2 = sqrt(Interval::from_long(2, 256));
    if (!d1.contains(root2)) return false;
    if (!tst::within_abs(d1 - root2, "0", kDualRouteTol)) return false;

    for (const char* ks : {"1.1", "2", "10"}) {
        Interval K = iv(ks, 128);
        if (!sqrt(pow_si(K, 4) + Interval::from_long(1, 128)).certainly_greater(square(K)))
            return false;
    }
    return true;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* what;
        bool (*run)();
    };
    const Criterion criteria[] = {
        {1, "growth criterion equals ln n for the iterated family", criterion1},
        {2, "alternating family certifies uncountable with odd witnesses", criterion2},
        {3, "constant-1/2 bounds are consistent and hit regression windows", criterion3},
        {4, "collar threshold chain and monotone effective level", criterion4},
        {5, "special functions match independent series and identities", criterion5},
        {6, "hexagon and pants geometry agree across dual routes", criterion6},
        {7, "precision nesting and exact rational containment", criterion7},
        {8, "verdict exclusivity and run-to-run determinism", criterion8},
        {9, "length window and twist dilatation conventions", criterion9},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        bool pass = false;
        std::string extra;
        try {
            pass = c.run();
        } catch (const std::exception& e) {
            extra = std::string(" (") + e.what() + ")";
        }
        std::printf("CRITERION %d: %s - %s%s\n", c.id, pass ? "PASS" : "FAIL", c.what,
                    extra.c_str());
        if (!pass) ++failures;
    }
    return failures;
}

#include "csurf/classify.hpp"

#include <algorithm>
#include <cstdlib>

namespace csurf {

namespace {

Interval point_at(mpfr_srcptr x, Prec prec) {
    return Interval::from_endpoints(x, x, prec);
}

Interval zero_iv(Prec prec) { return Interval::from_long(0, prec); }

// [0, +inf): the honest enclosure for a quantity a level failed to pin down.
Interval nonneg_unknown(Prec prec) {
    Interval e = Interval::entire(prec);
    return Interval::from_endpoints(zero_iv(prec).lo(), e.hi(), prec);
}

void require_unit_constant(const Interval& c) {
    if (!c.is_certainly_positive() || mpfr_cmp_ui(c.hi(), 1) >= 0) {
        throw DomainError("constant c must be certified inside (0,1), got " +
                          c.to_string(12));
    }
}

void require_quasiconformal(const Interval& K) {
    if (mpfr_cmp_ui(K.lo(), 1) < 0) {
        throw DomainError("quasiconformal constant must be certified >= 1, got " +
                          K.to_string(12));
    }
}

} // namespace

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Uncountable: return "uncountable";
        case Verdict::CountableEvidence: return "countable_evidence";
        case Verdict::Unknown: return "unknown";
    }
    throw InternalError("unreachable verdict");
}

WitnessCheck check_uncountable(const SequenceSpec& spec, long horizon,
                               const Interval& c, Prec prec) {
    if (horizon < 1) throw DomainError("horizon must be >= 1");
    require_unit_constant(c);

    WitnessCheck out;
    out.c = c;
    out.short_geodesic_bound = upper_bound_atanh(c);
    for (long n = 1; n <= horizon; ++n) {
        LogChannels ch = eval_log_channels(spec, n, prec);
        // A level witnesses only when q_n is representable and certified > c.
        if (ch.q.has_value() && mpfr_greater_p(ch.q->lo(), c.hi())) {
            out.witnesses.push_back(n);
        }
    }
    if (auto qs = liminf_positive_witness(spec, prec)) {
        out.infinite_certificate = mpfr_greater_p(qs->lo(), c.hi()) != 0;
    }
    out.certified = out.infinite_certificate && !out.witnesses.empty();
    if (out.certified) {
        out.notes.push_back(
            "each witness level carries a closed geodesic below the length bound");
    } else if (!out.witnesses.empty()) {
        out.notes.push_back(
            "finite witness evidence only; no structural certificate that "
            "infinitely many levels exceed c");
    } else {
        out.notes.push_back("no witness levels within the horizon");
    }
    return out;
}

CountableCheck check_countable(const SequenceSpec& spec, long horizon, Prec prec) {
    if (horizon < 2) throw DomainError("horizon must be >= 2");

    CountableCheck out;
    bool any_closed = false;
    for (long n = 1; n <= horizon; ++n) {
        CriterionRow row;
        row.n = n;
        if (auto cf = criterion_closed_form(spec, n, prec)) {
            row.defined = true;
            row.closed_form = true;
            row.value = std::move(*cf);
            any_closed = true;
        } else {
            LogChannels next = eval_log_channels(spec, n + 1, prec);
            if (next.mu.has_value()) {
                LogChannels cur = eval_log_channels(spec, n, prec);
                Interval q_enc = cur.q.has_value() ? *cur.q : exp(-cur.lambda);
                row.defined = true;
                row.value = q_enc * (*next.mu);
            }
        }
        row.negative = row.value.has_value() && mpfr_sgn(row.value->hi()) < 0;
        out.rows.push_back(std::move(row));
    }
    if (any_closed) {
        out.notes.push_back("criterion values use the family closed form");
    }

    // Longest run of certified strict increases that reaches the horizon.
    long candidate = -1;
    for (size_t k = 0; k + 1 < out.rows.size(); ++k) {
        const CriterionRow& r0 = out.rows[k];
        const CriterionRow& r1 = out.rows[k + 1];
        bool step = r0.defined && r1.defined &&
                    mpfr_greater_p(r1.value->lo(), r0.value->hi());
        if (step) {
            if (candidate < 0) candidate = r0.n;
        } else {
            candidate = -1;
        }
    }
    if (candidate > 0) out.increasing_from = candidate;

    out.divergence_certificate = divergence_certificate(spec);
    out.certified = out.increasing_from.has_value() && out.divergence_certificate;
    if (out.increasing_from && !out.divergence_certificate) {
        out.notes.push_back(
            "strict increase observed to the horizon, but the family carries "
            "no divergence certificate");
    }
    if (!out.increasing_from) {
        out.notes.push_back(
            "no certified strictly increasing run reaches the horizon");
    }
    return out;
}

ClassificationReport classify(const SequenceSpec& spec, long horizon,
                              const Interval& c, Prec prec) {
    ClassificationReport rep;
    rep.spec_digest = spec_digest_hex(spec, prec);
    rep.horizon = horizon;
    rep.uncountable = check_uncountable(spec, horizon, c, prec);

    if (!rep.uncountable.certified) {
        // The structural witness level may sit below the requested constant;
        // retry with a constant the witness certainly clears.
        if (auto qs = liminf_positive_witness(spec, prec)) {
            Interval lowered = *qs * Interval::from_ratio(8, 9, prec);
            if (lowered.is_certainly_positive() &&
                mpfr_cmp_ui(lowered.hi(), 1) < 0 &&
                mpfr_greater_p(qs->lo(), lowered.hi())) {
                WitnessCheck retry = check_uncountable(spec, horizon, lowered, prec);
                if (retry.certified) {
                    retry.notes.push_back("constant lowered from " + c.to_string(10) +
                                          " to sit below the structural witness level");
                    rep.uncountable = std::move(retry);
                }
            }
        }
    }

    rep.countable = check_countable(spec, horizon, prec);
    if (rep.uncountable.certified && rep.countable.certified) {
        throw InternalError("mutually exclusive classifications both certified");
    }
    if (rep.uncountable.certified) {
        rep.verdict = Verdict::Uncountable;
    } else if (rep.countable.certified) {
        rep.verdict = Verdict::CountableEvidence;
    } else {
        rep.verdict = Verdict::Unknown;
        rep.notes.push_back("neither certificate closed within the horizon");
    }
    return rep;
}

std::pair<Interval, Interval> wolpert_range(const Interval& K, const Interval& length) {
    require_quasiconformal(K);
    if (!length.is_certainly_positive()) {
        throw DomainError("length must be certainly positive");
    }
    return {length / K, K * length};
}

Interval dehn_twist_min_dilatation(long twists, const Interval& length) {
    if (twists == 0) throw DomainError("twist count must be nonzero");
    if (!length.is_certainly_positive()) {
        throw DomainError("length must be certainly positive");
    }
    Prec prec = length.precision();
    long t = std::labs(twists);
    Interval v = Interval::from_long(2 * t - 1, prec) * length / Interval::pi(prec);
    return sqrt(square(v) + Interval::from_long(1, prec));
}

// ---------------------------------------------------------------------------
// Threshold levels

namespace {

std::optional<Interval> corner_distance(const Interval& a, const Interval& b,
                                        const Interval& c) {
    try {
        return pants_seam_distance(a, b, c);
    } catch (const RealizationError&) {
        return std::nullopt;
    }
}

void finish_row(ThresholdRow& row, const Interval& rhs) {
    row.certified = mpfr_greater_p(row.lhs.lo(), rhs.hi()) != 0;
    row.straddles = !row.certified && mpfr_greater_p(row.lhs.hi(), rhs.lo()) != 0;
    if (row.straddles && row.note.empty()) {
        row.note = "enclosure straddles the cutoff; undecided at this precision";
    }
}

} // namespace

std::optional<long> threshold_n2(const SequenceSpec& spec, const Interval& K,
                                 long horizon, Prec prec,
                                 std::vector<ThresholdRow>* rows) {
    require_quasiconformal(K);
    if (horizon < 1) throw DomainError("horizon must be >= 1");
    Interval rhs = Interval::pi(prec) * square(K);
    for (long n = 1; n <= horizon; ++n) {
        ThresholdRow row;
        row.n = n;
        row.rhs = rhs;
        CollarLowerBound lb = lower_bound_collar(eval_log_channels(spec, n, prec), prec);
        if (lb.trivial) {
            row.lhs = zero_iv(prec);
            row.note = "collar lower bound trivial at this level";
        } else {
            row.lhs = lb.value;
        }
        finish_row(row, rhs);
        bool hit = row.certified;
        if (rows) rows->push_back(std::move(row));
        if (hit) return n;
    }
    return std::nullopt;
}

std::optional<long> threshold_n1(const SequenceSpec& spec, const CantorTree& tree,
                                 const Interval& K, long horizon, Prec prec,
                                 std::vector<ThresholdRow>* rows) {
    require_quasiconformal(K);
    if (horizon < 1) throw DomainError("horizon must be >= 1");
    bool monotone = monotone_nonincreasing_certificate(spec, prec);

    for (long n = 1; n <= horizon; ++n) {
        ThresholdRow row;
        row.n = n;
        row.rhs = K;
        row.lhs = nonneg_unknown(prec);

        LogChannels chn = eval_log_channels(spec, n, prec);
        LogChannels chn1 = eval_log_channels(spec, n + 1, prec);
        CollarLowerBound low_next = lower_bound_collar(chn1, prec);
        if (low_next.trivial || !low_next.value.is_certainly_positive()) {
            row.lhs = zero_iv(prec);
            row.note = "next-level collar bound trivial; no seam geometry";
            finish_row(row, K);
            if (rows) rows->push_back(std::move(row));
            continue;
        }
        Interval b_lo = point_at(low_next.value.lo(), prec);

        if (monotone) {
            // One certified check covers every index at this level.
            ScaledValue up = upper_bound_atanh_channels(chn, prec);
            if (up.log_scale) {
                row.lhs = zero_iv(prec);
                row.note = "boundary upper bound representable only in log "
                           "scale; matrix route unavailable";
                finish_row(row, K);
                if (rows) rows->push_back(std::move(row));
                continue;
            }
            auto d_worst = corner_distance(point_at(up.value.hi(), prec), b_lo, b_lo);
            if (!d_worst) {
                row.lhs = zero_iv(prec);
                row.note = "seam separation not certified at this precision";
                finish_row(row, K);
                if (rows) rows->push_back(std::move(row));
                continue;
            }
            // Reporting enclosure; certification only uses the low end.
            Interval d_hi_src = nonneg_unknown(prec);
            CollarLowerBound low_n = lower_bound_collar(chn, prec);
            ScaledValue up_next = upper_bound_atanh_channels(chn1, prec);
            if (!low_n.trivial && low_n.value.is_certainly_positive() &&
                !up_next.log_scale) {
                auto d_best = corner_distance(point_at(low_n.value.lo(), prec),
                                              point_at(up_next.value.hi(), prec),
                                              point_at(up_next.value.hi(), prec));
                if (d_best) d_hi_src = *d_best;
            }
            Interval d_enc = Interval::from_endpoints(d_worst->lo(), d_hi_src.hi(), prec);
            Interval len_enc = Interval::from_endpoints(
                low_n.trivial ? zero_iv(prec).lo() : low_n.value.lo(),
                up.value.hi(), prec);
            row.lhs = d_enc / len_enc;
            finish_row(row, K);
            bool hit = row.certified;
            if (rows) rows->push_back(std::move(row));
            if (hit) return n;
            continue;
        }

        // Per-index path needs the level geometry.
        if (n > tree.depth()) {
            row.lhs = zero_iv(prec);
            row.note = "tree depth exhausted before a certified level";
            finish_row(row, K);
            if (rows) rows->push_back(std::move(row));
            break;
        }
        long count = 1L << n;
        bool all_ok = true;
        std::optional<Interval> worst_ratio;
        long worst_index = 0;
        for (long i = 1; i <= count && all_ok; ++i) {
            CurveId curve{n, i};
            std::optional<Interval> best_upper;
            if (auto ra = round_annulus_upper_bound(tree, curve)) {
                best_upper = std::move(*ra);
            }
            if (auto ts = two_slit_upper_bound(tree, curve)) {
                best_upper = best_upper ? Interval::min_enclosure(*best_upper, *ts)
                                        : std::move(*ts);
            }
            if (i == 1) {
                ScaledValue at = upper_bound_atanh_channels(chn, prec);
                if (!at.log_scale) {
                    best_upper = best_upper
                                     ? Interval::min_enclosure(*best_upper, at.value)
                                     : at.value;
                }
            }
            if (!best_upper) {
                row.note = "no direct upper bound for index " + std::to_string(i);
                all_ok = false;
                break;
            }
            auto d = corner_distance(point_at(best_upper->hi(), prec), b_lo, b_lo);
            if (!d) {
                row.note = "seam separation not certified at index " + std::to_string(i);
                all_ok = false;
                break;
            }
            Interval ratio = *d / point_at(best_upper->hi(), prec);
            if (!worst_ratio || mpfr_less_p(ratio.lo(), worst_ratio->lo())) {
                worst_ratio = ratio;
                worst_index = i;
            }
        }
        if (all_ok && worst_ratio) {
            row.lhs = Interval::from_endpoints(worst_ratio->lo(),
                                               nonneg_unknown(prec).hi(), prec);
            row.note = "worst index " + std::to_string(worst_index);
        } else {
            row.lhs = zero_iv(prec);
        }
        finish_row(row, K);
        bool hit = row.certified;
        if (rows) rows->push_back(std::move(row));
        if (hit) return n;
    }
    return std::nullopt;
}

ThresholdReport effective_level(const SequenceSpec& spec, const CantorTree& tree,
                                const Interval& K, long horizon, Prec prec) {
    ThresholdReport rep;
    rep.K = K;
    rep.n2 = threshold_n2(spec, K, horizon, prec, &rep.n2_rows);
    rep.n1 = threshold_n1(spec, tree, K, horizon, prec, &rep.n1_rows);
    if (!rep.n2) {
        rep.notes.push_back("collar criterion not certified within the horizon");
    }
    if (!rep.n1) {
        rep.notes.push_back("seam-ratio criterion not certified within the horizon");
    }
    if (rep.n1 && rep.n2) {
        rep.effective = std::max(*rep.n1, *rep.n2);
    } else {
        rep.notes.push_back("effective level undefined until both criteria certify");
    }
    return rep;
}

} // namespace csurf

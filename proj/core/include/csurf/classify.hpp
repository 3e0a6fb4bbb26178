#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "csurf/hyperbolic.hpp"

namespace csurf {

enum class Verdict { Uncountable, CountableEvidence, Unknown };

std::string_view verdict_name(Verdict v);

// Evidence that infinitely many generation scales stay above a constant c,
// which pins short geodesics at every witness level.
struct WitnessCheck {
    Interval c;                     // the constant actually used
    std::vector<long> witnesses;    // levels n <= horizon with q_n > c certified
    bool infinite_certificate = false;  // structural liminf witness exceeds c
    bool certified = false;
    std::optional<Interval> short_geodesic_bound;  // pi^2 / atanh(c)
    std::vector<std::string> notes;
};

WitnessCheck check_uncountable(const SequenceSpec& spec, long horizon,
                               const Interval& c, Prec prec);

// Per-level values a_n = q_n * mu_{n+1} of the growth criterion.
struct CriterionRow {
    long n = 0;
    bool defined = false;           // mu_{n+1} exists
    std::optional<Interval> value;
    bool negative = false;          // value certainly negative
    bool closed_form = false;       // evaluated via a family closed form
};

struct CountableCheck {
    std::vector<CriterionRow> rows;
    std::optional<long> increasing_from;  // certified strict increase to horizon
    bool divergence_certificate = false;
    bool certified = false;
    std::vector<std::string> notes;
};

CountableCheck check_countable(const SequenceSpec& spec, long horizon, Prec prec);

struct ClassificationReport {
    std::string spec_digest;
    long horizon = 0;
    Verdict verdict = Verdict::Unknown;
    WitnessCheck uncountable;
    CountableCheck countable;
    std::vector<std::string> notes;
};

// Runs both checks; the two certificates are mutually exclusive and a spec
// certifying both is a hard internal error.
ClassificationReport classify(const SequenceSpec& spec, long horizon,
                              const Interval& c, Prec prec);

// Length window [len/K, K*len] reachable under a K-quasiconformal move.
std::pair<Interval, Interval> wolpert_range(const Interval& K, const Interval& length);

// Lower bound sqrt(((2|t|-1) len / pi)^2 + 1) for the dilatation of a
// |t|-fold twist about a curve of the given length.
Interval dehn_twist_min_dilatation(long twists, const Interval& length);

struct ThresholdRow {
    long n = 0;
    Interval lhs;           // certified enclosure of the tested quantity
    Interval rhs;           // cutoff enclosure
    bool certified = false;
    bool straddles = false;  // enclosures overlap: precision, not refutation
    std::string note;
};

struct ThresholdReport {
    Interval K;
    std::optional<long> n1;
    std::optional<long> n2;
    std::optional<long> effective;  // max(n1, n2) when both exist
    std::vector<ThresholdRow> n1_rows;
    std::vector<ThresholdRow> n2_rows;
    std::vector<std::string> notes;
};

// Least level where every curve's certified length lower bound clears pi*K^2.
std::optional<long> threshold_n2(const SequenceSpec& spec, const Interval& K,
                                 long horizon, Prec prec,
                                 std::vector<ThresholdRow>* rows = nullptr);

// Least level where the seam-distance to boundary-length ratio clears K for
// every curve at that level.
std::optional<long> threshold_n1(const SequenceSpec& spec, const CantorTree& tree,
                                 const Interval& K, long horizon, Prec prec,
                                 std::vector<ThresholdRow>* rows = nullptr);

ThresholdReport effective_level(const SequenceSpec& spec, const CantorTree& tree,
                                const Interval& K, long horizon, Prec prec);

} // namespace csurf

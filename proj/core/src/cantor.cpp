#include "csurf/cantor.hpp"

namespace csurf {

namespace {

constexpr long kMaxLevel = 20;

// Acceptable endpoint enclosure width for nondegenerate geometry. Widths are
// a few ulps in practice; crossing this means precision ran out.
bool width_blown_up(const Interval& x) {
    mpfr_t w, bound;
    mpfr_init2(w, 64);
    mpfr_init2(bound, 64);
    mpfr_sub(w, x.hi(), x.lo(), MPFR_RNDU);
    mpfr_set_ui_2exp(bound, 1, -16, MPFR_RNDN);  // 2^-16
    bool blown = mpfr_greater_p(w, bound) != 0;
    mpfr_clear(w);
    mpfr_clear(bound);
    return blown;
}

} // namespace

const CantorLevel& CantorTree::level(long n) const {
    if (n < 0 || n >= static_cast<long>(levels.size())) {
        throw DomainError("level " + std::to_string(n) + " not built (depth " +
                          std::to_string(depth()) + ")");
    }
    return levels[static_cast<size_t>(n)];
}

CantorTree build_levels(const SequenceSpec& spec, long max_level, Prec prec) {
    if (max_level < 0) throw DomainError("max_level must be >= 0");
    if (max_level > kMaxLevel) {
        throw DomainError("max_level " + std::to_string(max_level) +
                          " exceeds the supported depth " + std::to_string(kMaxLevel));
    }

    CantorTree tree;
    tree.spec = spec;
    tree.precision = prec;

    CantorLevel root;
    root.n = 0;
    root.left.push_back(Interval::from_long(0, prec));
    root.right.push_back(Interval::from_long(1, prec));
    root.length = Interval::from_long(1, prec);
    tree.levels.push_back(std::move(root));

    Interval half = Interval::from_ratio(1, 2, prec);

    for (long n = 1; n <= max_level; ++n) {
        const CantorLevel& parent = tree.levels.back();
        CantorLevel level;
        level.n = n;

        LogChannels ch = eval_log_channels(spec, n, prec);
        // exp(-lambda) is a sound enclosure of q_n even when the certified
        // q channel is absent; it just degenerates toward [0, minpos].
        Interval q = ch.q.has_value() ? *ch.q : exp(-ch.lambda);
        level.degenerate = parent.degenerate || !ch.q.has_value();
        if (level.degenerate && !tree.first_degenerate.has_value()) {
            tree.first_degenerate = n;
        }

        level.length = parent.length * (Interval::from_long(1, prec) - q) * half;
        Interval gap_width = q * parent.length;

        size_t count = parent.left.size();
        level.left.reserve(count * 2);
        level.right.reserve(count * 2);
        level.gap_after.reserve(count * 2 - 1);

        for (size_t p = 0; p < count; ++p) {
            Interval l_child_left = parent.left[p];
            Interval l_child_right = parent.left[p] + level.length;
            Interval r_child_left = parent.right[p] - level.length;
            Interval r_child_right = parent.right[p];
            if (level.degenerate) {
                // Children lie somewhere in the parent span; keep the hull as
                // the enclosure of each endpoint.
                Interval span = Interval::hull(parent.left[p], parent.right[p]);
                l_child_left = span;
                l_child_right = span;
                r_child_left = span;
                r_child_right = span;
            } else if (width_blown_up(l_child_right) || width_blown_up(r_child_left)) {
                throw RepresentationError(
                    "level " + std::to_string(n) +
                    " endpoint enclosures exceed the width bound; raise precision_bits");
            }
            if (p > 0) {
                // Gap inherited from the split between the parents.
                level.gap_after.push_back(parent.gap_after[p - 1]);
            }
            level.left.push_back(std::move(l_child_left));
            level.right.push_back(std::move(l_child_right));
            level.gap_after.push_back(gap_width);
            level.left.push_back(std::move(r_child_left));
            level.right.push_back(std::move(r_child_right));
        }
        tree.levels.push_back(std::move(level));
    }
    return tree;
}

std::pair<Interval, Interval> interval_endpoints(const CantorTree& tree, long n, long i) {
    const CantorLevel& level = tree.level(n);
    long count = static_cast<long>(level.left.size());
    if (i < 1 || i > count) {
        throw DomainError("interval index " + std::to_string(i) +
                          " outside 1.." + std::to_string(count));
    }
    size_t k = static_cast<size_t>(i - 1);
    return {level.left[k], level.right[k]};
}

GapPair gaps(const CantorTree& tree, long n, long i) {
    const CantorLevel& level = tree.level(n);
    long count = static_cast<long>(level.left.size());
    if (i < 1 || i > count) {
        throw DomainError("interval index " + std::to_string(i) +
                          " outside 1.." + std::to_string(count));
    }
    GapPair pair;
    if (i > 1) pair.left = level.gap_after[static_cast<size_t>(i - 2)];
    if (i < count) pair.right = level.gap_after[static_cast<size_t>(i - 1)];
    return pair;
}

} // namespace csurf

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csurf/interval.hpp"

namespace csurf {

// Families of sequences {q_n} in (0,1) with finite descriptions.
//   constant              q_n = q
//   explicit_with_tail    finite list of values, then a nested tail spec
//   alternating_half_power  q_n = 1/2 (n odd), (1/2)^n (n even)
//   iterated_exp          q_{n+1} = exp(-n^(1/q_n)), seed q1
//   user_closed_form      q_n = f(n) for an expression in a fixed grammar
enum class Family {
    constant,
    explicit_with_tail,
    alternating_half_power,
    iterated_exp,
    user_closed_form,
};

std::string_view family_name(Family f);

struct ExprNode;  // closed-form expression AST, defined in the implementation

struct SequenceSpec {
    Family family = Family::constant;

    std::string q_text;                          // constant
    std::vector<std::string> values;             // explicit_with_tail prefix
    std::shared_ptr<const SequenceSpec> tail;    // explicit_with_tail continuation
    std::string q1_text;                         // iterated_exp seed
    std::string expr_text;                       // user_closed_form source
    std::shared_ptr<const ExprNode> expr;        // parsed form of expr_text

    // Declared structural certificates, validated at parse time where a
    // finite check exists.
    std::vector<std::string> properties;
};

// Parses the JSON spec document. All numeric parameters must be JSON strings
// (decimal or "p/q"); parameters are range-checked. Throws ParseError.
SequenceSpec parse_spec(std::string_view json_text);

// The three evaluation channels for one index:
//   q      = q_n, absent when the value is representable only through lambda
//            (certified positivity is lost to exponent-range underflow)
//   lambda = ln(1/q_n), always present, extended endpoints allowed
//   mu     = ln lambda = ln ln(1/q_n), absent exactly when lambda > 0 is not
//            certified (mu may be negative; absence is a flag, not an error)
struct LogChannels {
    std::optional<Interval> q;
    Interval lambda;
    std::optional<Interval> mu;
};

// Enclosure of q_n. Throws RepresentationError when q_n is representable
// only in log scale at this precision (use eval_log_channels instead), and
// DomainError when a user expression is not certified inside (0,1).
Interval eval_q(const SequenceSpec& spec, long n, Prec prec);

LogChannels eval_log_channels(const SequenceSpec& spec, long n, Prec prec);

// Certified q_n >= q_{n+1} for all n. Structural per family: constant always;
// iterated_exp iff ln(1/q1) <= 1 certified (then lambda_2 = 1 >= lambda_1 and
// lambda_{n+1} = n^(exp(lambda_n)) >= 2^(exp(lambda_n)) >= lambda_n onward);
// explicit lists by pairwise endpoint comparison plus the tail's certificate.
bool monotone_nonincreasing_certificate(const SequenceSpec& spec, Prec prec);

// Witness level for "q_n > c infinitely often": an enclosure of a value that
// a structurally guaranteed infinite subsequence of {q_n} equals or exceeds.
// Absent when the family provides no such guarantee.
std::optional<Interval> liminf_positive_witness(const SequenceSpec& spec, Prec prec);

// Family-level certificate that a_n = q_n * ln ln(1/q_{n+1}) -> +infinity,
// available only where a closed form proves it.
bool divergence_certificate(const SequenceSpec& spec);

// Closed-form override for a_n where algebraic cancellation gives an exact
// expression (iterated_exp: a_n = q_n * ln(n)/q_n = ln n for every seed).
// Direct interval evaluation of the product is catastrophically wide once
// the factors leave the exponent range, so this override is load-bearing.
std::optional<Interval> criterion_closed_form(const SequenceSpec& spec, long n, Prec prec);

// Content hash of the normalized spec plus evaluation precision (FNV-1a 64).
std::uint64_t spec_digest(const SequenceSpec& spec, Prec prec);
std::string spec_digest_hex(const SequenceSpec& spec, Prec prec);

} // namespace csurf

#include "csurf/seqspec.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "json.hpp"

namespace csurf {

std::string_view family_name(Family f) {
    switch (f) {
        case Family::constant: return "constant";
        case Family::explicit_with_tail: return "explicit_with_tail";
        case Family::alternating_half_power: return "alternating_half_power";
        case Family::iterated_exp: return "iterated_exp";
        case Family::user_closed_form: return "user_closed_form";
    }
    throw InternalError("unhandled family enum value");
}

// ---------------------------------------------------------------------------
// Closed-form expression grammar:
//   expr    := term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*
//   factor  := '-' factor | power
//   power   := primary ('^' factor)?          (right associative)
//   primary := number | 'n' | ('exp'|'ln') '(' expr ')' | '(' expr ')'
// Numbers are unsigned decimal literals; rationals are spelled with '/'.

struct ExprNode {
    enum class Kind { number, var_n, add, sub, mul, div, pow, exp_fn, ln_fn, neg };
    Kind kind;
    std::string literal;
    std::shared_ptr<const ExprNode> a;
    std::shared_ptr<const ExprNode> b;
};

namespace {

using ExprPtr = std::shared_ptr<const ExprNode>;

ExprPtr make_node(ExprNode::Kind kind, ExprPtr a = nullptr, ExprPtr b = nullptr,
                  std::string literal = {}) {
    auto node = std::make_shared<ExprNode>();
    node->kind = kind;
    node->literal = std::move(literal);
    node->a = std::move(a);
    node->b = std::move(b);
    return node;
}

class ExprParser {
public:
    explicit ExprParser(std::string_view src) : src_(src) {}

    ExprPtr parse() {
        ExprPtr e = parse_expr();
        skip_ws();
        if (pos_ != src_.size()) {
            throw ParseError("unexpected trailing input in expression at offset " +
                             std::to_string(pos_));
        }
        return e;
    }

private:
    std::string_view src_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            ++pos_;
        }
    }

    bool consume(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    ExprPtr parse_expr() {
        ExprPtr left = parse_term();
        for (;;) {
            if (consume('+')) {
                left = make_node(ExprNode::Kind::add, left, parse_term());
            } else if (consume('-')) {
                left = make_node(ExprNode::Kind::sub, left, parse_term());
            } else {
                return left;
            }
        }
    }

    ExprPtr parse_term() {
        ExprPtr left = parse_factor();
        for (;;) {
            if (consume('*')) {
                left = make_node(ExprNode::Kind::mul, left, parse_factor());
            } else if (consume('/')) {
                left = make_node(ExprNode::Kind::div, left, parse_factor());
            } else {
                return left;
            }
        }
    }

    ExprPtr parse_factor() {
        if (consume('-')) {
            return make_node(ExprNode::Kind::neg, parse_factor());
        }
        ExprPtr base = parse_primary();
        if (consume('^')) {
            return make_node(ExprNode::Kind::pow, base, parse_factor());
        }
        return base;
    }

    ExprPtr parse_primary() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("unexpected end of expression");
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            return parse_number();
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
                ++pos_;
            }
            std::string name(src_.substr(start, pos_ - start));
            if (name == "n") return make_node(ExprNode::Kind::var_n);
            if (name == "exp" || name == "ln") {
                if (!consume('(')) {
                    throw ParseError("expected '(' after '" + name + "'");
                }
                ExprPtr arg = parse_expr();
                if (!consume(')')) throw ParseError("missing ')' after " + name);
                return make_node(name == "exp" ? ExprNode::Kind::exp_fn
                                               : ExprNode::Kind::ln_fn,
                                 arg);
            }
            throw ParseError("unknown identifier '" + name + "' in expression");
        }
        if (consume('(')) {
            ExprPtr e = parse_expr();
            if (!consume(')')) throw ParseError("missing ')' in expression");
            return e;
        }
        throw ParseError(std::string("unexpected character '") + c + "' in expression");
    }

    ExprPtr parse_number() {
        size_t start = pos_;
        bool seen_digit = false;
        while (pos_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            ++pos_;
            seen_digit = true;
        }
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            while (pos_ < src_.size() &&
                   std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                ++pos_;
                seen_digit = true;
            }
        }
        if (!seen_digit) throw ParseError("malformed number in expression");
        return make_node(ExprNode::Kind::number, nullptr, nullptr,
                         std::string(src_.substr(start, pos_ - start)));
    }
};

// When the exponent is a literal integer, use the exact integer power; the
// general branch needs a certainly positive base.
std::optional<long> integer_literal(const ExprNode& node) {
    const ExprNode* n = &node;
    bool negate = false;
    while (n->kind == ExprNode::Kind::neg) {
        negate = !negate;
        n = n->a.get();
    }
    if (n->kind != ExprNode::Kind::number) return std::nullopt;
    if (n->literal.find('.') != std::string::npos) return std::nullopt;
    errno = 0;
    char* end = nullptr;
    long v = std::strtol(n->literal.c_str(), &end, 10);
    if (errno != 0 || end == nullptr || *end != '\0') return std::nullopt;
    return negate ? -v : v;
}

Interval eval_expr(const ExprNode& node, long n, Prec prec) {
    using K = ExprNode::Kind;
    switch (node.kind) {
        case K::number: return Interval::from_string(node.literal, prec);
        case K::var_n: return Interval::from_long(n, prec);
        case K::add: return eval_expr(*node.a, n, prec) + eval_expr(*node.b, n, prec);
        case K::sub: return eval_expr(*node.a, n, prec) - eval_expr(*node.b, n, prec);
        case K::mul: return eval_expr(*node.a, n, prec) * eval_expr(*node.b, n, prec);
        case K::div: return eval_expr(*node.a, n, prec) / eval_expr(*node.b, n, prec);
        case K::neg: return -eval_expr(*node.a, n, prec);
        case K::exp_fn: return exp(eval_expr(*node.a, n, prec));
        case K::ln_fn: return log(eval_expr(*node.a, n, prec));
        case K::pow: {
            Interval base = eval_expr(*node.a, n, prec);
            if (auto e = integer_literal(*node.b)) {
                return pow_si(base, *e);
            }
            Interval expo = eval_expr(*node.b, n, prec);
            if (!base.is_certainly_positive()) {
                throw DomainError(
                    "non-integer power needs a certainly positive base, got " +
                    base.to_string(12));
            }
            return exp(expo * log(base));
        }
    }
    throw InternalError("unhandled expression node kind");
}

// ---------------------------------------------------------------------------
// Spec parsing

using nlohmann::json;

std::string require_string(const json& j, const char* key, const char* family) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw ParseError(std::string("family ") + family + " requires field \"" +
                         key + "\"");
    }
    if (!it->is_string()) {
        throw ParseError(std::string("field \"") + key +
                         "\" must be a JSON string (numbers are strings here)");
    }
    return it->get<std::string>();
}

// Parameter values must be certified inside (0,1).
void check_unit_interval(const std::string& text, const char* what) {
    Interval v = Interval::from_string(text, kDefaultPrec);
    bool ok = v.is_certainly_positive() &&
              mpfr_cmp_ui(v.hi(), 1) < 0;
    if (!ok) {
        throw ParseError(std::string(what) + " '" + text +
                         "' is not certified inside (0,1)");
    }
}

SequenceSpec parse_json_spec(const json& j);

void validate_properties(SequenceSpec& spec) {
    for (const auto& p : spec.properties) {
        if (p == "monotone_nonincreasing") {
            if (spec.family == Family::user_closed_form) {
                throw ParseError(
                    "property monotone_nonincreasing is not certifiable for "
                    "user_closed_form (no finite check exists)");
            }
            if (!monotone_nonincreasing_certificate(spec, kDefaultPrec)) {
                throw ParseError(
                    "declared property monotone_nonincreasing fails verification");
            }
        } else if (p == "odd_indices_constant_half") {
            if (spec.family != Family::alternating_half_power) {
                throw ParseError(
                    "property odd_indices_constant_half only applies to "
                    "alternating_half_power");
            }
        } else {
            throw ParseError("unknown property '" + p + "'");
        }
    }
    std::sort(spec.properties.begin(), spec.properties.end());
}

SequenceSpec parse_json_spec(const json& j) {
    if (!j.is_object()) throw ParseError("spec must be a JSON object");

    std::string fam = require_string(j, "family", "(any)");
    SequenceSpec spec;
    std::vector<std::string> allowed = {"family", "properties"};

    if (fam == "constant") {
        spec.family = Family::constant;
        spec.q_text = require_string(j, "q", "constant");
        check_unit_interval(spec.q_text, "constant q");
        allowed.push_back("q");
    } else if (fam == "explicit_with_tail") {
        spec.family = Family::explicit_with_tail;
        auto it = j.find("values");
        if (it == j.end() || !it->is_array() || it->empty()) {
            throw ParseError("explicit_with_tail requires a nonempty \"values\" array");
        }
        for (const auto& v : *it) {
            if (!v.is_string()) {
                throw ParseError("\"values\" entries must be JSON strings");
            }
            spec.values.push_back(v.get<std::string>());
            check_unit_interval(spec.values.back(), "explicit value");
        }
        auto tail_it = j.find("tail");
        if (tail_it == j.end()) {
            throw ParseError("tail rule required: an explicit list alone cannot "
                             "decide any limit criterion");
        }
        spec.tail = std::make_shared<SequenceSpec>(parse_json_spec(*tail_it));
        allowed.push_back("values");
        allowed.push_back("tail");
    } else if (fam == "alternating_half_power") {
        spec.family = Family::alternating_half_power;
    } else if (fam == "iterated_exp") {
        spec.family = Family::iterated_exp;
        spec.q1_text = "1/2";
        if (j.contains("q1")) {
            spec.q1_text = require_string(j, "q1", "iterated_exp");
        }
        check_unit_interval(spec.q1_text, "iterated_exp q1");
        allowed.push_back("q1");
    } else if (fam == "user_closed_form") {
        spec.family = Family::user_closed_form;
        spec.expr_text = require_string(j, "expr", "user_closed_form");
        spec.expr = ExprParser(spec.expr_text).parse();
        allowed.push_back("expr");
    } else {
        throw ParseError("unknown family '" + fam + "'");
    }

    for (auto it = j.begin(); it != j.end(); ++it) {
        if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end()) {
            throw ParseError("unknown field \"" + it.key() + "\" for family " + fam);
        }
    }

    if (j.contains("properties")) {
        const auto& props = j.at("properties");
        if (!props.is_array()) throw ParseError("\"properties\" must be an array");
        for (const auto& p : props) {
            if (!p.is_string()) throw ParseError("properties must be strings");
            spec.properties.push_back(p.get<std::string>());
        }
    }
    validate_properties(spec);
    return spec;
}

} // namespace

SequenceSpec parse_spec(std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("spec is not valid JSON: ") + e.what());
    }
    return parse_json_spec(j);
}

// ---------------------------------------------------------------------------
// Channel evaluation

namespace {

std::optional<Interval> mu_from_lambda(const Interval& lambda) {
    if (!lambda.is_certainly_positive()) return std::nullopt;
    return log(lambda);
}

LogChannels channels_from_q(const Interval& q) {
    Interval lambda = -log(q);
    std::optional<Interval> mu = mu_from_lambda(lambda);
    return LogChannels{q, std::move(lambda), std::move(mu)};
}

Interval user_q(const SequenceSpec& spec, long n, Prec prec) {
    Interval q = eval_expr(*spec.expr, n, prec);
    if (!(q.is_certainly_positive() && mpfr_cmp_ui(q.hi(), 1) < 0)) {
        throw DomainError("closed-form q_" + std::to_string(n) +
                          " is not certified inside (0,1): " + q.to_string(12));
    }
    return q;
}

// Runs the recursion lambda_{k+1} = (k)^{exp(lambda_k)} through the mu
// channel: mu_{k+1} = ln(k) * exp(lambda_k), lambda_{k+1} = exp(mu_{k+1}).
// Both may saturate to [huge, +inf] without losing soundness.
LogChannels iterated_channels(const SequenceSpec& spec, long n, Prec prec) {
    Interval q1 = Interval::from_string(spec.q1_text, prec);
    Interval lambda = -log(q1);
    if (n == 1) {
        return LogChannels{q1, lambda, mu_from_lambda(lambda)};
    }
    std::optional<Interval> mu;
    for (long k = 2; k <= n; ++k) {
        Interval muk = log(Interval::from_long(k - 1, prec)) * exp(lambda);
        lambda = exp(muk);
        if (k == n) mu = std::move(muk);
    }
    std::optional<Interval> q;
    Interval direct = exp(-lambda);
    if (direct.is_certainly_positive() && direct.is_finite()) {
        q = std::move(direct);
    }
    return LogChannels{std::move(q), std::move(lambda), std::move(mu)};
}

} // namespace

LogChannels eval_log_channels(const SequenceSpec& spec, long n, Prec prec) {
    if (n < 1) throw DomainError("sequence index must be >= 1, got " + std::to_string(n));
    switch (spec.family) {
        case Family::constant:
            return channels_from_q(Interval::from_string(spec.q_text, prec));
        case Family::explicit_with_tail: {
            long len = static_cast<long>(spec.values.size());
            if (n <= len) {
                return channels_from_q(
                    Interval::from_string(spec.values[static_cast<size_t>(n - 1)], prec));
            }
            return eval_log_channels(*spec.tail, n - len, prec);
        }
        case Family::alternating_half_power: {
            Interval half = Interval::from_ratio(1, 2, prec);
            if (n % 2 == 1) {
                return channels_from_q(half);
            }
            Interval q = pow_si(half, n);
            Interval lambda = Interval::from_long(n, prec) * log(Interval::from_long(2, prec));
            return LogChannels{std::move(q), lambda, mu_from_lambda(lambda)};
        }
        case Family::iterated_exp:
            return iterated_channels(spec, n, prec);
        case Family::user_closed_form:
            return channels_from_q(user_q(spec, n, prec));
    }
    throw InternalError("unhandled family in eval_log_channels");
}

Interval eval_q(const SequenceSpec& spec, long n, Prec prec) {
    LogChannels ch = eval_log_channels(spec, n, prec);
    if (!ch.q.has_value()) {
        throw RepresentationError(
            "q_" + std::to_string(n) +
            " underflows the exponent range at this precision; "
            "use the log channels instead");
    }
    return *ch.q;
}

bool monotone_nonincreasing_certificate(const SequenceSpec& spec, Prec prec) {
    switch (spec.family) {
        case Family::constant:
            return true;
        case Family::alternating_half_power:
        case Family::user_closed_form:
            return false;
        case Family::iterated_exp: {
            // Need lambda_1 <= 1 = lambda_2; past that the recursion only grows.
            Interval lambda1 = -log(Interval::from_string(spec.q1_text, prec));
            return mpfr_cmp_ui(lambda1.hi(), 1) <= 0;
        }
        case Family::explicit_with_tail: {
            std::vector<Interval> vs;
            vs.reserve(spec.values.size());
            for (const auto& t : spec.values) {
                vs.push_back(Interval::from_string(t, prec));
            }
            for (size_t i = 0; i + 1 < vs.size(); ++i) {
                if (!mpfr_greaterequal_p(vs[i].lo(), vs[i + 1].hi())) return false;
            }
            LogChannels first_tail = eval_log_channels(*spec.tail, 1, prec);
            if (!first_tail.q.has_value()) return false;
            if (!mpfr_greaterequal_p(vs.back().lo(), first_tail.q->hi())) return false;
            return monotone_nonincreasing_certificate(*spec.tail, prec);
        }
    }
    throw InternalError("unhandled family in monotone certificate");
}

std::optional<Interval> liminf_positive_witness(const SequenceSpec& spec, Prec prec) {
    switch (spec.family) {
        case Family::constant:
            return Interval::from_string(spec.q_text, prec);
        case Family::alternating_half_power:
            return Interval::from_ratio(1, 2, prec);
        case Family::explicit_with_tail:
            return liminf_positive_witness(*spec.tail, prec);
        case Family::iterated_exp:
        case Family::user_closed_form:
            return std::nullopt;
    }
    throw InternalError("unhandled family in liminf witness");
}

bool divergence_certificate(const SequenceSpec& spec) {
    switch (spec.family) {
        case Family::iterated_exp:
            return true;
        case Family::explicit_with_tail:
            return divergence_certificate(*spec.tail);
        default:
            return false;
    }
}

std::optional<Interval> criterion_closed_form(const SequenceSpec& spec, long n, Prec prec) {
    switch (spec.family) {
        case Family::iterated_exp:
            // a_n = exp(-lambda_n) * ln(n) * exp(lambda_n) = ln n, any seed.
            return log(Interval::from_long(n, prec));
        case Family::explicit_with_tail: {
            long len = static_cast<long>(spec.values.size());
            // Valid only when both q_n and q_{n+1} live in the tail.
            if (n > len) return criterion_closed_form(*spec.tail, n - len, prec);
            return std::nullopt;
        }
        default:
            return std::nullopt;
    }
}

// ---------------------------------------------------------------------------
// Digest

namespace {

void canonical_text(const SequenceSpec& spec, std::string& out) {
    out += family_name(spec.family);
    out += '\n';
    switch (spec.family) {
        case Family::constant:
            out += "q=" + spec.q_text + "\n";
            break;
        case Family::explicit_with_tail:
            out += "values=";
            for (size_t i = 0; i < spec.values.size(); ++i) {
                if (i) out += ',';
                out += spec.values[i];
            }
            out += "\n";
            break;
        case Family::alternating_half_power:
            break;
        case Family::iterated_exp:
            out += "q1=" + spec.q1_text + "\n";
            break;
        case Family::user_closed_form:
            out += "expr=" + spec.expr_text + "\n";
            break;
    }
    if (!spec.properties.empty()) {
        out += "properties=";
        for (size_t i = 0; i < spec.properties.size(); ++i) {
            if (i) out += ',';
            out += spec.properties[i];
        }
        out += "\n";
    }
    if (spec.tail) {
        out += "tail{\n";
        canonical_text(*spec.tail, out);
        out += "}\n";
    }
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace

std::uint64_t spec_digest(const SequenceSpec& spec, Prec prec) {
    std::string text;
    canonical_text(spec, text);
    text += "precision=" + std::to_string(static_cast<long>(prec)) + "\n";
    return fnv1a64(text);
}

std::string spec_digest_hex(const SequenceSpec& spec, Prec prec) {
    static const char* hex = "0123456789abcdef";
    std::uint64_t h = spec_digest(spec, prec);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = hex[h & 0xF];
        h >>= 4;
    }
    return out;
}

} // namespace csurf

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "csurf/cantor.hpp"
#include "csurf/classify.hpp"

using ordered_json = nlohmann::ordered_json;
using namespace csurf;

namespace {

const std::map<std::string, std::string> kBuiltinSpecs = {
    {"constant_half", R"({"family": "constant", "q": "1/2"})"},
    {"alternating_half_power", R"({"family": "alternating_half_power"})"},
    {"iterated_exp", R"({"family": "iterated_exp", "q1": "1/2"})"},
};

struct Options {
    std::string spec_path;
    std::string builtin;
    std::string format;
    long precision = 0;  // 0 = unset
    long horizon = 32;
    long levels = 8;
    long level = 1;
    long index = 1;
    std::string c_text = "1/3";
    std::string k_text = "2";
    bool require_verdict = false;
};

struct Run {
    SequenceSpec spec;
    Prec prec = kDefaultPrec;
    std::string prec_source = "default";
    std::string digest;
    std::string format;
};

long parse_env_long(const char* text) {
    try {
        size_t used = 0;
        long v = std::stol(text, &used);
        if (used != std::string(text).size()) throw std::invalid_argument("trail");
        return v;
    } catch (const std::exception&) {
        throw ParseError(std::string("CSURF_PRECISION_BITS is not an integer: ") + text);
    }
}

Run prepare(const Options& opts, const std::string& default_format) {
    Run run;
    if (opts.precision > 0) {
        run.prec = static_cast<Prec>(opts.precision);
        run.prec_source = "flag";
    } else if (const char* env = std::getenv("CSURF_PRECISION_BITS")) {
        run.prec = static_cast<Prec>(parse_env_long(env));
        run.prec_source = "env";
    }
    if (run.prec < kMinPrec || run.prec > 65536) {
        throw ParseError("precision must be in [" + std::to_string(kMinPrec) +
                         ", 65536], got " + std::to_string(static_cast<long>(run.prec)));
    }

    std::string text;
    if (!opts.builtin.empty()) {
        if (!opts.spec_path.empty()) {
            throw ParseError("--spec and --builtin are mutually exclusive");
        }
        auto it = kBuiltinSpecs.find(opts.builtin);
        if (it == kBuiltinSpecs.end()) {
            std::string names;
            for (const auto& [k, v] : kBuiltinSpecs) {
                if (!names.empty()) names += ", ";
                names += k;
            }
            throw ParseError("unknown builtin spec '" + opts.builtin +
                             "' (available: " + names + ")");
        }
        text = it->second;
    } else if (!opts.spec_path.empty()) {
        std::ifstream in(opts.spec_path, std::ios::binary);
        if (!in) throw ParseError("cannot read spec file: " + opts.spec_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else {
        throw ParseError("one of --spec or --builtin is required");
    }

    run.spec = parse_spec(text);
    run.digest = spec_digest_hex(run.spec, run.prec);
    run.format = opts.format.empty() ? default_format : opts.format;
    return run;
}

// ---------------------------------------------------------------------------
// Emission helpers. All enclosures leave as outward-rounded decimal strings.

ordered_json iv_json(const Interval& v, bool log_scale = false) {
    return ordered_json{{"lo", v.lo_string()}, {"hi", v.hi_string()},
                        {"log_scale", log_scale}};
}

ordered_json scaled_json(const ScaledValue& v) {
    return iv_json(v.value, v.log_scale);
}

ordered_json envelope(const char* command, const Run& run) {
    ordered_json j;
    j["command"] = command;
    j["spec_digest"] = run.digest;
    j["precision_bits"] = static_cast<long>(run.prec);
    j["precision_source"] = run.prec_source;
    j["family"] = std::string(family_name(run.spec.family));
    return j;
}

std::string csv_header(const Run& run) {
    return "# precision_bits=" + std::to_string(static_cast<long>(run.prec)) +
           " precision_source=" + run.prec_source + " spec_digest=" + run.digest +
           "\n";
}

void emit_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

[[noreturn]] void bad_format(const std::string& format) {
    throw ParseError("unsupported output format for this subcommand: " + format);
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_spec_validate(const Options& opts) {
    Run run = prepare(opts, "json");
    if (run.format == "json") {
        ordered_json j = envelope("spec-validate", run);
        j["ok"] = true;
        emit_json(j);
    } else if (run.format == "text") {
        std::cout << "spec ok\nfamily: " << family_name(run.spec.family)
                  << "\ndigest: " << run.digest
                  << "\nprecision_bits: " << static_cast<long>(run.prec) << " ("
                  << run.prec_source << ")\n";
    } else {
        bad_format(run.format);
    }
    return 0;
}

int cmd_cantor(const Options& opts) {
    Run run = prepare(opts, "csv");
    CantorTree tree = build_levels(run.spec, opts.levels, run.prec);
    if (run.format == "csv") {
        std::string out = csv_header(run);
        out += "n,i,left_lo,left_hi,right_lo,right_hi\n";
        for (long n = 1; n <= tree.depth(); ++n) {
            const CantorLevel& lvl = tree.level(n);
            for (size_t k = 0; k < lvl.left.size(); ++k) {
                out += std::to_string(n) + "," + std::to_string(k + 1) + "," +
                       lvl.left[k].lo_string() + "," + lvl.left[k].hi_string() + "," +
                       lvl.right[k].lo_string() + "," + lvl.right[k].hi_string() + "\n";
            }
        }
        std::cout << out;
    } else if (run.format == "json") {
        ordered_json j = envelope("cantor", run);
        j["levels_requested"] = opts.levels;
        j["first_degenerate"] =
            tree.first_degenerate ? ordered_json(*tree.first_degenerate)
                                  : ordered_json(nullptr);
        ordered_json levels = ordered_json::array();
        for (long n = 0; n <= tree.depth(); ++n) {
            const CantorLevel& lvl = tree.level(n);
            ordered_json lj;
            lj["n"] = n;
            lj["degenerate"] = lvl.degenerate;
            lj["length"] = iv_json(lvl.length);
            ordered_json ivs = ordered_json::array();
            for (size_t k = 0; k < lvl.left.size(); ++k) {
                ivs.push_back(ordered_json{{"i", k + 1},
                                           {"left", iv_json(lvl.left[k])},
                                           {"right", iv_json(lvl.right[k])}});
            }
            lj["intervals"] = std::move(ivs);
            ordered_json gj = ordered_json::array();
            for (const Interval& g : lvl.gap_after) gj.push_back(iv_json(g));
            lj["gaps"] = std::move(gj);
            levels.push_back(std::move(lj));
        }
        j["levels"] = std::move(levels);
        emit_json(j);
    } else if (run.format == "text") {
        std::cout << "family " << family_name(run.spec.family) << ", digest "
                  << run.digest << "\n";
        for (long n = 0; n <= tree.depth(); ++n) {
            const CantorLevel& lvl = tree.level(n);
            std::cout << "level " << n << ": " << lvl.left.size() << " intervals"
                      << (lvl.degenerate ? " (degenerate)" : "") << ", length "
                      << lvl.length.to_string(12) << "\n";
        }
    } else {
        bad_format(run.format);
    }
    return 0;
}

int cmd_bounds(const Options& opts) {
    Run run = prepare(opts, "csv");
    CantorTree tree = build_levels(run.spec, opts.levels, run.prec);
    if (run.format == "csv") {
        std::string out = csv_header(run);
        out += "n,i,lower_lo,lower_hi,upper_lo,upper_hi,lower_method,upper_method,"
               "log_scale_flag\n";
        for (long n = 1; n <= tree.depth(); ++n) {
            long count = 1L << n;
            for (long i = 1; i <= count; ++i) {
                LengthBounds lb = curve_bounds(run.spec, tree, {n, i}, run.prec);
                out += std::to_string(n) + "," + std::to_string(i) + "," +
                       lb.lower.lo_string() + "," + lb.lower.hi_string() + ",";
                if (lb.upper) {
                    out += lb.upper->value.lo_string() + "," +
                           lb.upper->value.hi_string() + "," + lb.lower_method + "," +
                           lb.upper_method + "," +
                           (lb.upper->log_scale ? "1" : "0") + "\n";
                } else {
                    out += ",," + lb.lower_method + ",none,0\n";
                }
            }
        }
        std::cout << out;
    } else if (run.format == "json") {
        ordered_json j = envelope("bounds", run);
        j["levels"] = opts.levels;
        ordered_json rows = ordered_json::array();
        for (long n = 1; n <= tree.depth(); ++n) {
            long count = 1L << n;
            for (long i = 1; i <= count; ++i) {
                LengthBounds lb = curve_bounds(run.spec, tree, {n, i}, run.prec);
                ordered_json r;
                r["n"] = n;
                r["i"] = i;
                r["lower"] = iv_json(lb.lower);
                r["lower_trivial"] = lb.lower_trivial;
                r["lower_method"] = lb.lower_method;
                r["upper"] = lb.upper ? scaled_json(*lb.upper) : ordered_json(nullptr);
                r["upper_method"] = lb.upper ? lb.upper_method : "none";
                ordered_json cands = ordered_json::array();
                for (const MethodBound& mb : lb.upper_candidates) {
                    cands.push_back(ordered_json{{"method", mb.method},
                                                 {"value", scaled_json(mb.bound)}});
                }
                r["candidates"] = std::move(cands);
                rows.push_back(std::move(r));
            }
        }
        j["bounds"] = std::move(rows);
        emit_json(j);
    } else if (run.format == "text") {
        for (long n = 1; n <= tree.depth(); ++n) {
            long count = 1L << n;
            for (long i = 1; i <= count; ++i) {
                LengthBounds lb = curve_bounds(run.spec, tree, {n, i}, run.prec);
                std::cout << "curve (" << n << "," << i << "): lower "
                          << lb.lower.to_string(12) << " [" << lb.lower_method
                          << "], upper ";
                if (lb.upper) {
                    std::cout << lb.upper->value.to_string(12) << " ["
                              << lb.upper_method
                              << (lb.upper->log_scale ? ", log scale" : "") << "]\n";
                } else {
                    std::cout << "(none)\n";
                }
            }
        }
    } else {
        bad_format(run.format);
    }
    return 0;
}

ordered_json classification_json(const Run& run, const ClassificationReport& rep) {
    ordered_json j = envelope("classify", run);
    j["horizon"] = rep.horizon;
    j["verdict"] = std::string(verdict_name(rep.verdict));
    ordered_json w;
    w["c"] = iv_json(rep.uncountable.c);
    w["indices"] = rep.uncountable.witnesses;
    w["infinite_certificate"] = rep.uncountable.infinite_certificate;
    w["certified"] = rep.uncountable.certified;
    w["short_geodesic_bound"] = rep.uncountable.short_geodesic_bound
                                    ? iv_json(*rep.uncountable.short_geodesic_bound)
                                    : ordered_json(nullptr);
    w["notes"] = rep.uncountable.notes;
    j["witnesses"] = std::move(w);
    ordered_json rows = ordered_json::array();
    for (const CriterionRow& r : rep.countable.rows) {
        ordered_json rj;
        rj["n"] = r.n;
        rj["defined"] = r.defined;
        rj["value"] = r.value ? iv_json(*r.value) : ordered_json(nullptr);
        rj["negative"] = r.negative;
        rj["closed_form"] = r.closed_form;
        rows.push_back(std::move(rj));
    }
    j["criterion_values"] = std::move(rows);
    ordered_json ct;
    ct["increasing_from"] = rep.countable.increasing_from
                                ? ordered_json(*rep.countable.increasing_from)
                                : ordered_json(nullptr);
    ct["divergence_certificate"] = rep.countable.divergence_certificate;
    ct["certified"] = rep.countable.certified;
    ct["notes"] = rep.countable.notes;
    j["countable"] = std::move(ct);
    j["notes"] = rep.notes;
    return j;
}

int cmd_classify(const Options& opts) {
    Run run = prepare(opts, "json");
    Interval c = Interval::from_string(opts.c_text, run.prec);
    ClassificationReport rep = classify(run.spec, opts.horizon, c, run.prec);
    if (run.format == "json") {
        emit_json(classification_json(run, rep));
    } else if (run.format == "text") {
        std::cout << "verdict: " << verdict_name(rep.verdict) << "\n";
        std::cout << "witness c: " << rep.uncountable.c.to_string(12) << ", indices:";
        for (long n : rep.uncountable.witnesses) std::cout << " " << n;
        std::cout << "\n";
        for (const auto& note : rep.uncountable.notes) std::cout << "note: " << note << "\n";
        for (const auto& note : rep.countable.notes) std::cout << "note: " << note << "\n";
        for (const auto& note : rep.notes) std::cout << "note: " << note << "\n";
    } else {
        bad_format(run.format);
    }
    if (opts.require_verdict && rep.verdict == Verdict::Unknown) return 4;
    return 0;
}

ordered_json threshold_rows_json(const std::vector<ThresholdRow>& rows) {
    ordered_json out = ordered_json::array();
    for (const ThresholdRow& r : rows) {
        ordered_json rj;
        rj["n"] = r.n;
        rj["lhs"] = iv_json(r.lhs);
        rj["rhs"] = iv_json(r.rhs);
        rj["certified"] = r.certified;
        rj["straddles"] = r.straddles;
        rj["note"] = r.note;
        out.push_back(std::move(rj));
    }
    return out;
}

int cmd_thresholds(const Options& opts) {
    Run run = prepare(opts, "json");
    Interval K = Interval::from_string(opts.k_text, run.prec);
    CantorTree tree = build_levels(run.spec, opts.levels, run.prec);
    ThresholdReport rep = effective_level(run.spec, tree, K, opts.horizon, run.prec);
    if (run.format == "json") {
        ordered_json j = envelope("thresholds", run);
        j["horizon"] = opts.horizon;
        ordered_json t;
        t["K"] = iv_json(rep.K);
        t["n1"] = rep.n1 ? ordered_json(*rep.n1) : ordered_json(nullptr);
        t["n2"] = rep.n2 ? ordered_json(*rep.n2) : ordered_json(nullptr);
        t["N"] = rep.effective ? ordered_json(*rep.effective) : ordered_json(nullptr);
        j["thresholds"] = std::move(t);
        j["n1_rows"] = threshold_rows_json(rep.n1_rows);
        j["n2_rows"] = threshold_rows_json(rep.n2_rows);
        j["notes"] = rep.notes;
        emit_json(j);
    } else if (run.format == "text") {
        auto show = [](const std::optional<long>& v) {
            return v ? std::to_string(*v) : std::string("absent");
        };
        std::cout << "K: " << rep.K.to_string(12) << "\n"
                  << "n1: " << show(rep.n1) << "\n"
                  << "n2: " << show(rep.n2) << "\n"
                  << "N: " << show(rep.effective) << "\n";
        for (const auto& note : rep.notes) std::cout << "note: " << note << "\n";
    } else {
        bad_format(run.format);
    }
    if (opts.require_verdict && !rep.effective) return 4;
    return 0;
}

int cmd_pants(const Options& opts) {
    Run run = prepare(opts, "json");
    CantorTree tree = build_levels(run.spec, opts.level + 1, run.prec);
    PantsGeometry geo = pants_geometry(run.spec, tree, {opts.level, opts.index}, run.prec);
    const char* caveat = "distances are within-pants values; shorter connections "
                         "through the rest of the surface are not excluded";
    if (run.format == "json") {
        ordered_json j = envelope("pants", run);
        j["pants"] = ordered_json{{"n", geo.pants.n}, {"i", geo.pants.i}};
        j["a"] = iv_json(geo.a);
        j["b"] = iv_json(geo.b);
        j["c"] = iv_json(geo.c);
        j["seam"] = iv_json(geo.seam);
        j["boundary_to_seam"] = iv_json(geo.boundary_to_seam);
        j["notes"] = ordered_json::array({caveat});
        emit_json(j);
    } else if (run.format == "text") {
        std::cout << "pants (" << geo.pants.n << "," << geo.pants.i << ")\n"
                  << "a: " << geo.a.to_string(12) << "\n"
                  << "b: " << geo.b.to_string(12) << "\n"
                  << "c: " << geo.c.to_string(12) << "\n"
                  << "seam: " << geo.seam.to_string(12) << "\n"
                  << "boundary_to_seam: " << geo.boundary_to_seam.to_string(12) << "\n"
                  << "note: " << caveat << "\n";
    } else {
        bad_format(run.format);
    }
    return 0;
}

int cmd_plotdata(const Options& opts) {
    Run run = prepare(opts, "csv");
    if (run.format != "csv") bad_format(run.format);
    CantorTree tree = build_levels(run.spec, opts.levels, run.prec);
    std::string out = csv_header(run);
    out += "n,value_lo,value_hi,series\n";
    std::vector<LengthBounds> per_level;
    for (long n = 1; n <= tree.depth(); ++n) {
        per_level.push_back(curve_bounds(run.spec, tree, {n, 1}, run.prec));
    }
    for (const LengthBounds& lb : per_level) {
        out += std::to_string(lb.curve.n) + "," + lb.lower.lo_string() + "," +
               lb.lower.hi_string() + ",lower_bound\n";
    }
    for (const LengthBounds& lb : per_level) {
        if (!lb.upper) continue;
        out += std::to_string(lb.curve.n) + "," + lb.upper->value.lo_string() + "," +
               lb.upper->value.hi_string() + "," +
               (lb.upper->log_scale ? "upper_bound_log" : "upper_bound") + "\n";
    }
    CountableCheck cc = check_countable(run.spec, opts.horizon, run.prec);
    for (const CriterionRow& r : cc.rows) {
        if (!r.defined) continue;
        out += std::to_string(r.n) + "," + r.value->lo_string() + "," +
               r.value->hi_string() + ",criterion\n";
    }
    std::cout << out;
    return 0;
}

void add_spec_options(CLI::App* cmd, Options& opts) {
    cmd->add_option("--spec", opts.spec_path, "Path to a JSON sequence spec");
    cmd->add_option("--builtin", opts.builtin,
                    "Builtin spec name (constant_half, alternating_half_power, "
                    "iterated_exp)");
    cmd->add_option("--precision", opts.precision,
                    "Working precision in bits (>= 53); overrides "
                    "CSURF_PRECISION_BITS");
    cmd->add_option("--format", opts.format, "Output format: json, csv, or text");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified bounds and classification for generalized Cantor "
                 "set surfaces"};
    app.require_subcommand(1);
    Options opts;

    CLI::App* validate = app.add_subcommand("spec-validate", "Parse and digest a spec");
    add_spec_options(validate, opts);

    CLI::App* cantor = app.add_subcommand("cantor", "Emit construction intervals");
    add_spec_options(cantor, opts);
    cantor->add_option("--levels", opts.levels, "Construction depth (default 8)");

    CLI::App* bounds = app.add_subcommand("bounds", "Two-sided length bounds per curve");
    add_spec_options(bounds, opts);
    bounds->add_option("--levels", opts.levels, "Construction depth (default 8)");

    CLI::App* classify_cmd = app.add_subcommand("classify", "Countability classification");
    add_spec_options(classify_cmd, opts);
    classify_cmd->add_option("--horizon", opts.horizon, "Max index examined (default 32)");
    classify_cmd->add_option("--c", opts.c_text, "Witness constant (default 1/3)");
    classify_cmd->add_flag("--require-verdict", opts.require_verdict,
                           "Exit 4 when the verdict is unknown");

    CLI::App* thresholds = app.add_subcommand("thresholds", "Effective proof levels");
    add_spec_options(thresholds, opts);
    thresholds->add_option("--K", opts.k_text, "Quasiconformal constant (default 2)");
    thresholds->add_option("--horizon", opts.horizon, "Max level examined (default 32)");
    thresholds->add_option("--levels", opts.levels, "Construction depth (default 8)");
    thresholds->add_flag("--require-verdict", opts.require_verdict,
                         "Exit 4 when the effective level is absent");

    CLI::App* pants = app.add_subcommand("pants", "Pairs-of-pants realization");
    add_spec_options(pants, opts);
    pants->add_option("--level", opts.level, "Pants level n (default 1)");
    pants->add_option("--index", opts.index, "Pants index i (default 1)");

    CLI::App* plotdata = app.add_subcommand("plotdata", "Plot-ready CSV series");
    add_spec_options(plotdata, opts);
    plotdata->add_option("--levels", opts.levels, "Construction depth (default 8)");
    plotdata->add_option("--horizon", opts.horizon, "Criterion index range (default 32)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (opts.horizon < 2) throw ParseError("--horizon must be >= 2");
        if (opts.levels < 1) throw ParseError("--levels must be >= 1");
        if (validate->parsed()) return cmd_spec_validate(opts);
        if (cantor->parsed()) return cmd_cantor(opts);
        if (bounds->parsed()) return cmd_bounds(opts);
        if (classify_cmd->parsed()) return cmd_classify(opts);
        if (thresholds->parsed()) return cmd_thresholds(opts);
        if (pants->parsed()) return cmd_pants(opts);
        if (plotdata->parsed()) return cmd_plotdata(opts);
        throw InternalError("no subcommand dispatched");
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const RepresentationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const RealizationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 1;
    }
}

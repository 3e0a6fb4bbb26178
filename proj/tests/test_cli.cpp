#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + " \"" + CSURF_CLI_PATH + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string golden_path(const std::string& name) {
    return std::string(CSURF_GOLDEN_DIR) + "/" + name + ".golden";
}

bool regen_mode() { return std::getenv("CSURF_REGEN_GOLDEN") != nullptr; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing golden file " << path
                                  << " (regenerate with CSURF_REGEN_GOLDEN=1)");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct GoldenCase {
    const char* name;
    const char* args;
};

// Every subcommand against every built-in spec, at default settings.
const GoldenCase kGolden[] = {
    {"spec_validate_constant", "spec-validate --builtin constant_half"},
    {"spec_validate_alternating", "spec-validate --builtin alternating_half_power"},
    {"spec_validate_iterated", "spec-validate --builtin iterated_exp"},
    {"cantor_constant", "cantor --builtin constant_half"},
    {"cantor_alternating", "cantor --builtin alternating_half_power"},
    {"cantor_iterated", "cantor --builtin iterated_exp"},
    {"bounds_constant", "bounds --builtin constant_half"},
    {"bounds_alternating", "bounds --builtin alternating_half_power"},
    {"bounds_iterated", "bounds --builtin iterated_exp"},
    {"classify_constant", "classify --builtin constant_half"},
    {"classify_alternating", "classify --builtin alternating_half_power"},
    {"classify_iterated", "classify --builtin iterated_exp"},
    {"thresholds_constant", "thresholds --builtin constant_half"},
    {"thresholds_alternating", "thresholds --builtin alternating_half_power"},
    {"thresholds_iterated", "thresholds --builtin iterated_exp"},
    {"pants_constant", "pants --builtin constant_half"},
    {"pants_alternating", "pants --builtin alternating_half_power"},
    {"pants_iterated", "pants --builtin iterated_exp"},
    {"plotdata_constant", "plotdata --builtin constant_half"},
    {"plotdata_alternating", "plotdata --builtin alternating_half_power"},
    {"plotdata_iterated", "plotdata --builtin iterated_exp"},
};

} // namespace

TEST_CASE("golden outputs for every subcommand and built-in") {
    for (const GoldenCase& g : kGolden) {
        CAPTURE(g.name);
        RunResult r = run_cli(g.args);
        CHECK(r.code == 0);
        CHECK(!r.out.empty());
        if (regen_mode()) {
            std::filesystem::create_directories(CSURF_GOLDEN_DIR);
            std::ofstream out(golden_path(g.name), std::ios::binary);
            REQUIRE(out.good());
            out << r.out;
            continue;
        }
        std::string want = read_file(golden_path(g.name));
        CHECK_MESSAGE(r.out == want, "output drifted from " << golden_path(g.name)
                                         << " (got " << r.out.size() << " bytes, want "
                                         << want.size() << ")");
    }
}

TEST_CASE("reruns are byte-identical") {
    RunResult a = run_cli("classify --builtin iterated_exp");
    RunResult b = run_cli("classify --builtin iterated_exp");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    RunResult c = run_cli("bounds --builtin alternating_half_power --levels 4");
    RunResult d = run_cli("bounds --builtin alternating_half_power --levels 4");
    CHECK(c.out == d.out);
}

TEST_CASE("spec files and builtins produce identical reports") {
    std::string spec = std::string(CSURF_SPECS_DIR) + "/constant_half.spec";
    RunResult from_file = run_cli("classify --spec \"" + spec + "\"");
    RunResult from_builtin = run_cli("classify --builtin constant_half");
    CHECK(from_file.code == 0);
    CHECK(from_file.out == from_builtin.out);
}

TEST_CASE("precision selection order: flag, environment, default") {
    RunResult flag = run_cli("spec-validate --builtin constant_half --precision 192",
                             "CSURF_PRECISION_BITS=96");
    auto jf = nlohmann::json::parse(flag.out);
    CHECK(jf["precision_bits"] == 192);
    CHECK(jf["precision_source"] == "flag");

    RunResult env = run_cli("spec-validate --builtin constant_half",
                            "CSURF_PRECISION_BITS=96");
    auto je = nlohmann::json::parse(env.out);
    CHECK(je["precision_bits"] == 96);
    CHECK(je["precision_source"] == "env");

    RunResult def = run_cli("spec-validate --builtin constant_half");
    auto jd = nlohmann::json::parse(def.out);
    CHECK(jd["precision_bits"] == 128);
    CHECK(jd["precision_source"] == "default");

    // Precision feeds the digest: different precision, different digest
    CHECK(jf["spec_digest"] != jd["spec_digest"]);
}

TEST_CASE("digest agrees across subcommands") {
    auto jv = nlohmann::json::parse(run_cli("spec-validate --builtin iterated_exp").out);
    auto jc = nlohmann::json::parse(run_cli("classify --builtin iterated_exp").out);
    auto jt = nlohmann::json::parse(run_cli("thresholds --builtin iterated_exp").out);
    CHECK(jv["spec_digest"] == jc["spec_digest"]);
    CHECK(jv["spec_digest"] == jt["spec_digest"]);
}

TEST_CASE("exit codes") {
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("classify --help").code == 0);

    // Input and domain problems
    CHECK(run_cli("classify --spec /nonexistent/no.spec").code == 2);
    CHECK(run_cli("classify --builtin no_such_family").code == 2);
    CHECK(run_cli("cantor --builtin constant_half --format xml").code == 2);
    CHECK(run_cli("classify --builtin constant_half --horizon 1").code == 2);
    CHECK(run_cli("bounds --builtin constant_half --levels 0").code == 2);
    CHECK(run_cli("").code == 2);                      // missing subcommand
    CHECK(run_cli("spec-validate").code == 2);         // neither spec nor builtin
    CHECK(run_cli("plotdata --builtin constant_half --format json").code == 2);

    std::string bad = (std::filesystem::temp_directory_path() / "csurf_bad.spec").string();
    {
        std::ofstream out(bad);
        out << "{\"family\":\"constant\",\"q\":0.5}";  // number, not string
    }
    CHECK(run_cli("classify --spec \"" + bad + "\"").code == 2);
    std::filesystem::remove(bad);

    // Representation limits surface as exit 3
    CHECK(run_cli("pants --builtin iterated_exp --level 4").code == 3);

    // --require-verdict demands a decided classification / finite level
    std::string user = (std::filesystem::temp_directory_path() / "csurf_user.spec").string();
    {
        std::ofstream out(user);
        out << R"js({"family":"user_closed_form","expr":"1/ln(n + 3)"})js";
    }
    RunResult undecided = run_cli("classify --spec \"" + user + "\" --require-verdict");
    CHECK(undecided.code == 4);
    std::filesystem::remove(user);
    CHECK(run_cli("thresholds --builtin constant_half --require-verdict").code == 4);

    // Without the flag the same runs succeed
    CHECK(run_cli("thresholds --builtin constant_half").code == 0);
}

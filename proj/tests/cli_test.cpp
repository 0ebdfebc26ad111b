#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "ssred/cli/cli.hpp"
#include "ssred/error.hpp"

using namespace ssred;
using namespace ssred::cli;

namespace {

std::string dataPath(const std::string& name) { return std::string(SSRED_TEST_DATA) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome run(const std::string& cmd, std::vector<std::string> files, Options opts = {}) {
    for (auto& f : files) f = dataPath(f);
    return runCommand(cmd, files, opts);
}

}  // namespace

TEST_CASE("representation files round-trip byte for byte in canonical form") {
    for (const char* name : {"unipotent.json", "rotation_f3.json", "unipotent_q.json", "q3.json", "j3_f2.json"}) {
        Representation rep = loadInput(dataPath(name)).rep;
        const std::string once = canonicalText(repToJson(rep));
        const std::string twice = canonicalText(repToJson(parseRepText(once)));
        CHECK(once == twice);
        CHECK(parseRepText(once).generators() == rep.generators());
    }
}

TEST_CASE("rational entries parse from fractions and integers") {
    auto rep = parseRepText(R"({"field":{"kind":"rational"},"n":1,"generators":[[["-3/6"]]]})");
    CHECK(rep.generators()[0](0, 0).toString() == "-1/2");
    auto rep2 = parseRepText(R"({"field":{"kind":"prime","p":5},"n":1,"generators":[[[7]]]})");
    CHECK(rep2.generators()[0](0, 0).toString() == "2");
}

TEST_CASE("digest is FNV-1a 64") {
    CHECK(digest("") == "cbf29ce484222325");
    CHECK(digest("a") == "af63dc4c8601ec8c");
    CHECK(digest("foobar") == "85944171f73967e8");
}

TEST_CASE("schema violations are parse errors") {
    const char* bad[] = {
        R"([1,2])",
        R"({"n":2,"generators":[[["1","0"],["0","1"]]]})",
        R"({"field":{"kind":"prime","p":2},"n":2,"generators":[]})",
        R"({"field":{"kind":"prime","p":2},"n":2,"generators":[[["1","0"]]]})",
        R"({"field":{"kind":"complex"},"n":1,"generators":[[["1"]]]})",
        R"({"field":{"kind":"prime","p":2},"n":1,"generators":[[[true]]]})",
        R"({"field":{"kind":"prime","p":2},"n":0,"generators":[[[]]]})",
    };
    for (const char* text : bad) {
        CAPTURE(text);
        try {
            parseRepText(text);
            FAIL("accepted");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::ParseError);
        }
    }
}

TEST_CASE("error reports carry the code and exit status") {
    auto singular = run("check", {"singular.json"});
    CHECK(singular.exitCode == kInvalidInput);
    CHECK(singular.report["error"]["code"] == "NotInvertible");
    CHECK(singular.report["input_digest"] == digest(slurp(dataPath("singular.json"))));

    auto malformed = run("check", {"malformed.json"});
    CHECK(malformed.exitCode == kInvalidInput);
    CHECK(malformed.report["error"]["code"] == "ParseError");
    CHECK(malformed.report["status"] == "error");

    CHECK(exitCodeFor(ErrorCode::SearchSpaceExceeded) == kResourceBound);
    CHECK(exitCodeFor(ErrorCode::InternalInvariantViolation) == kFinding);
}

TEST_CASE("check agrees with the oracle on small examples") {
    Options opts;
    opts.oracle = true;
    auto uni = run("check", {"unipotent.json"}, opts);
    CHECK(uni.exitCode == kOk);
    CHECK(uni.report["result"]["gcr"] == false);
    CHECK(uni.report["result"]["oracle"]["agree"] == true);
    auto rot = run("check", {"rotation_f3.json"}, opts);
    CHECK(rot.report["result"]["gcr"] == true);
    CHECK(rot.report["result"]["oracle"]["gcr"] == true);
}

TEST_CASE("ss reports the limit and the flag") {
    auto out = run("ss", {"unipotent.json"});
    REQUIRE(out.exitCode == kOk);
    const auto& r = out.report["result"];
    CHECK(r["ss_generators"] == Json::parse(R"([[["1","0"],["0","1"]]])"));
    CHECK(r["block_sizes"] == Json::parse("[1,1]"));
    CHECK(r["semisimple"] == true);
}

TEST_CASE("reports are deterministic") {
    Options opts;
    opts.seed = 3;
    auto a = run("ss", {"q3.json"}, opts);
    auto b = run("ss", {"q3.json"}, opts);
    CHECK(canonicalText(a.report) == canonicalText(b.report));
}

TEST_CASE("conjugacy across seeds") {
    Options opts;
    opts.seed = 0;
    opts.seedB = 1;
    auto out = run("conjugacy", {"diag_f3.json"}, opts);
    REQUIRE(out.exitCode == kOk);
    CHECK(out.report["result"]["verified"] == true);
}

TEST_CASE("clifford") {
    auto ok = run("clifford", {"diagonal_f3.json", "diag_f3.json"});
    CHECK(ok.exitCode == kOk);
    CHECK(ok.report["result"]["h_semisimple"] == true);
    CHECK(ok.report["result"]["normality"] == "verified");
    auto notNormal = run("clifford", {"dihedral_f3.json", "diag_f3.json"});
    CHECK(notNormal.exitCode == kInvalidInput);
    CHECK(notNormal.report["error"]["code"] == "NotNormal");
}

TEST_CASE("optimal on the regular nilpotent over F_2") {
    auto out = run("optimal", {"j3_f2.json"});
    REQUIRE(out.exitCode == kOk);
    const auto& r = out.report["result"];
    CHECK(r["measure"] == "1/2");
    CHECK(r["argmax"].size() == 1);
    CHECK(r["argmax"][0]["canonical_weights"] == Json::parse("[1,0,-1]"));
    CHECK(r["checks"]["normalizer_stable"] == true);

    auto semisimple = run("optimal", {"rotation_f3.json"});
    CHECK(semisimple.exitCode == kInvalidInput);
    CHECK(semisimple.report["error"]["code"] == "PreconditionNotDestabilizable");
}

TEST_CASE("optimal over the rationals skips the oracle checks") {
    auto out = run("optimal", {"q3.json"});
    REQUIRE(out.exitCode == kOk);
    CHECK(out.report["result"]["checks"]["normalizer_stable"].is_null());
    CHECK(out.report["result"]["checks"]["limits_semisimple"] == true);
}

TEST_CASE("oracle command") {
    auto out = run("oracle", {"unipotent.json"});
    REQUIRE(out.exitCode == kOk);
    CHECK(out.report["result"]["group_order"] == 6);
    CHECK(out.report["result"]["unique_closed_orbit"] == true);
    auto q = run("oracle", {"unipotent_q.json"});
    CHECK(q.exitCode == kInvalidInput);
}

#include <fstream>
#include <set>
#include <sstream>

#include "ssred/cli/cli.hpp"
#include "ssred/error.hpp"
#include "ssred/gitoracle/gitoracle.hpp"

namespace ssred::cli {

namespace {

Json matricesJson(const std::vector<Matrix>& ms) {
    Json out = Json::array();
    for (const auto& m : ms) out.push_back(matrixJson(m));
    return out;
}

Json weightsJson(const std::vector<std::int64_t>& w) { return Json(w); }

std::string rationalText(const Rational& r) { return Scalar(FieldSpec::rational(), r).toString(); }

Json certificateJson(const SemisimpleCertificate& c) {
    Json out;
    out["semisimple"] = c.semisimple;
    if (c.semisimple) {
        Json summands = Json::array();
        for (const auto& s : c.summands) summands.push_back(subspaceJson(s));
        out["summands"] = summands;
    } else if (c.nonSplit) {
        out["non_split"] = subspaceJson(*c.nonSplit);
    }
    return out;
}

Json ssJson(const SsResult& ss) {
    Json out;
    out["seed"] = ss.seed;
    out["flag"] = flagJson(ss.flag);
    out["block_sizes"] = ss.flag.blockSizes();
    out["weights"] = weightsJson(ss.cocharacter.weights());
    out["basis_change"] = matrixJson(ss.cocharacter.basisChange());
    out["ss_generators"] = matricesJson(ss.ssGenerators);
    out["block_generators"] = matricesJson(ss.blockGenerators);
    out["l_irreducible"] = ss.lIrreducible;
    out["semisimple"] = ss.semisimpleCertificate.semisimple;
    return out;
}

Json candidateJson(const FlagCandidate& c) {
    Json out;
    out["flag"] = flagJson(c.flag);
    out["block_weights"] = weightsJson(c.blockWeights);
    out["canonical_weights"] = weightsJson(c.canonicalWeights);
    out["measure"] = rationalText(c.measure);
    return out;
}

void requireInputs(const std::vector<Input>& inputs, std::size_t count, const char* command) {
    if (inputs.size() != count)
        fail(ErrorCode::InvalidArgument, std::string(command) + " expects " + std::to_string(count) + " input file(s)");
}

bool groupEnumerable(const Representation& rep, std::size_t maxGroupOrder) {
    return rep.field().isPrime() && oracle::glOrder(rep.dim(), rep.field().characteristic()) <= maxGroupOrder;
}

}  // namespace

int exitCodeFor(ErrorCode code) {
    switch (code) {
        case ErrorCode::InternalInvariantViolation: return kFinding;
        case ErrorCode::Undecided:
        case ErrorCode::CertificateSearchExhausted:
        case ErrorCode::SearchSpaceExceeded:
        case ErrorCode::ResourceBoundExceeded: return kResourceBound;
        default: return kInvalidInput;
    }
}

namespace {

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

Input loadInput(const std::string& path) {
    std::string text = readFile(path);
    Representation rep = parseRepText(text);
    return Input{std::move(text), std::move(rep)};
}

Outcome cmdCheck(const std::vector<Input>& inputs, const Options& opts) {
    requireInputs(inputs, 1, "check");
    const auto& rep = inputs[0].rep;
    Outcome out;
    auto cert = isGcrOverK(rep);
    Json result;
    result["gcr"] = cert.semisimple;
    result["certificate"] = certificateJson(cert);
    if (opts.oracle) {
        const bool o = oracle::oracleGcr(rep, opts.maxGroupOrder);
        result["oracle"] = {{"gcr", o}, {"agree", o == cert.semisimple}};
        if (o != cert.semisimple) out.exitCode = kFinding;
    }
    out.report["result"] = result;
    return out;
}

Outcome cmdSS(const std::vector<Input>& inputs, const Options& opts) {
    requireInputs(inputs, 1, "ss");
    Outcome out;
    out.report["result"] = ssJson(semisimplify(inputs[0].rep, opts.seed));
    return out;
}

Outcome cmdConjugacy(const std::vector<Input>& inputs, const Options& opts) {
    if (inputs.empty() || inputs.size() > 2) fail(ErrorCode::InvalidArgument, "conjugacy expects one or two input files");
    const auto& repB = inputs.size() == 2 ? inputs[1].rep : inputs[0].rep;
    auto a = semisimplify(inputs[0].rep, opts.seed);
    auto b = semisimplify(repB, opts.seedB);
    auto cert = conjugacyCertificate(a, b);
    Outcome out;
    out.report["result"] = {{"a", ssJson(a)}, {"b", ssJson(b)}, {"g", matrixJson(cert.g)}, {"verified", true}};
    return out;
}

Outcome cmdClifford(const std::vector<Input>& inputs, const Options& opts) {
    requireInputs(inputs, 2, "clifford");
    auto res = cliffordJointSS(inputs[0].rep, inputs[1].rep, opts.seed, opts.maxGroupOrder);
    Outcome out;
    Json result;
    result["m"] = ssJson(res.m);
    result["h_limits"] = matricesJson(res.hLimit);
    result["h_semisimple"] = res.hCertificate.semisimple;
    result["m_semisimple"] = res.m.semisimpleCertificate.semisimple;
    result["normality"] = res.normalityVerified ? "verified" : "algebra-only";
    out.report["result"] = result;
    if (!res.hCertificate.semisimple || !res.m.semisimpleCertificate.semisimple) out.exitCode = kFinding;
    return out;
}

Outcome cmdOptimal(const std::vector<Input>& inputs, const Options& opts) {
    requireInputs(inputs, 1, "optimal");
    const auto& rep = inputs[0].rep;
    OptimalFlagOptions o;
    o.maxWeightHeight = opts.maxWeight;
    auto report = optimalFlag(rep, o);

    Json checks;
    checks["nonempty"] = !report.argmaxFlags.empty();
    bool limitsOk = true;
    for (const auto& f : report.argmaxFlags) {
        Representation limit(rep.field(), rep.dim(), cLambda(rep.generators(), flagToCocharacter(f)));
        if (!isSemisimple(limit).semisimple) limitsOk = false;
    }
    checks["limits_semisimple"] = limitsOk;
    bool normalizerOk = true;
    if (groupEnumerable(rep, opts.maxGroupOrder)) {
        auto table = oracle::enumerateGroup(rep.dim(), rep.field().characteristic(), opts.maxGroupOrder);
        oracle::Oracle orc(table);
        std::set<std::string> argmax;
        for (const auto& f : report.argmaxFlags) argmax.insert(f.encode());
        for (auto x : orc.normalizer(orc.tupleOf(rep.generators()))) {
            Matrix g = table.toMatrix(table.packed(x));
            for (const auto& f : report.argmaxFlags)
                if (!argmax.count(f.image(g).encode())) normalizerOk = false;
        }
        checks["normalizer_stable"] = normalizerOk;
    } else {
        checks["normalizer_stable"] = nullptr;
    }

    Json result;
    result["max_weight"] = report.searchBound;
    result["measure"] = rationalText(report.measure);
    result["flags_examined"] = report.flagsExamined;
    Json argmax = Json::array(), candidates = Json::array();
    for (const auto& c : report.argmax) argmax.push_back(candidateJson(c));
    for (const auto& c : report.perFlag) candidates.push_back(candidateJson(c));
    result["argmax"] = argmax;
    result["candidates"] = candidates;
    result["checks"] = checks;
    Outcome out;
    out.report["result"] = result;
    if (report.argmaxFlags.empty() || !limitsOk || !normalizerOk) out.exitCode = kFinding;
    return out;
}

Outcome cmdOracle(const std::vector<Input>& inputs, const Options& opts) {
    requireInputs(inputs, 1, "oracle");
    const auto& rep = inputs[0].rep;
    if (!rep.field().isPrime()) fail(ErrorCode::InvalidArgument, "the oracle needs a finite field");
    auto table = oracle::enumerateGroup(rep.dim(), rep.field().characteristic(), opts.maxGroupOrder);
    oracle::Oracle orc(table);
    auto tuple = orc.genericTuple(rep);
    const bool closed = orc.isCocharClosed(tuple);
    auto accessible = orc.accessibleClosedOrbits(tuple);
    const bool moduleGcr = isGcrOverK(rep).semisimple;

    Json orbits = Json::array();
    for (const auto& id : accessible) {
        std::vector<Matrix> ms;
        for (auto c : id) ms.push_back(table.toMatrix(table.decode(c)));
        orbits.push_back({{"representative", matricesJson(ms)}, {"size", orc.orbit(id).size()}});
    }
    Json result;
    result["group_order"] = table.order();
    result["orbit_size"] = orc.orbit(tuple).size();
    result["cocharacter_closed"] = closed;
    result["module_gcr"] = moduleGcr;
    result["agree"] = closed == moduleGcr;
    result["accessible_closed_orbits"] = orbits;
    result["unique_closed_orbit"] = accessible.size() == 1;
    Outcome out;
    out.report["result"] = result;
    if (accessible.size() != 1 || closed != moduleGcr) out.exitCode = kFinding;
    return out;
}

Outcome runCommand(const std::string& command, const std::vector<std::string>& paths, const Options& opts) {
    Outcome out;
    std::string bytes;
    try {
        std::vector<Input> inputs;
        for (const auto& p : paths) {
            std::string text = readFile(p);
            bytes += text;
            Representation rep = parseRepText(text);
            inputs.push_back(Input{std::move(text), std::move(rep)});
        }
        if (command == "check")
            out = cmdCheck(inputs, opts);
        else if (command == "ss")
            out = cmdSS(inputs, opts);
        else if (command == "conjugacy")
            out = cmdConjugacy(inputs, opts);
        else if (command == "clifford")
            out = cmdClifford(inputs, opts);
        else if (command == "optimal")
            out = cmdOptimal(inputs, opts);
        else if (command == "oracle")
            out = cmdOracle(inputs, opts);
        else
            fail(ErrorCode::InvalidArgument, "unknown command " + command);
        out.report["status"] = out.exitCode == kOk ? "ok" : "finding";
    } catch (const Error& e) {
        out.exitCode = exitCodeFor(e.code());
        out.report["status"] = "error";
        out.report["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    }
    out.report["command"] = command;
    out.report["input_digest"] = digest(bytes);
    return out;
}

}  // namespace ssred::cli

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ssred/semisimplify/ssred.hpp"

namespace ssred::cli {

using Json = nlohmann::json;

enum ExitCode : int { kOk = 0, kFinding = 1, kInvalidInput = 2, kResourceBound = 3 };

int exitCodeFor(ErrorCode code);

/// Throws ParseError on schema violations; invertibility etc. are checked by
/// Representation.
Representation parseRepFile(const Json& doc);
Representation parseRepText(const std::string& text);
Json repToJson(const Representation& rep);
/// dump(2) followed by a newline; keys are sorted.
std::string canonicalText(const Json& doc);

Json matrixJson(const Matrix& m);
Json subspaceJson(const Subspace& s);
Json flagJson(const Flag& f);
/// FNV-1a 64-bit, lowercase hex.
std::string digest(const std::string& bytes);

struct Input {
    std::string text;
    Representation rep;
};
Input loadInput(const std::string& path);

struct Outcome {
    Json report;
    int exitCode = kOk;
};

struct Options {
    std::uint64_t seed = 0;
    std::uint64_t seedB = 1;
    bool oracle = false;
    std::int64_t maxWeight = 4;
    std::size_t maxGroupOrder = std::size_t{1} << 21;
};

Outcome cmdCheck(const std::vector<Input>& inputs, const Options& opts);
Outcome cmdSS(const std::vector<Input>& inputs, const Options& opts);
/// One input (two seeds) or two inputs with the same generators.
Outcome cmdConjugacy(const std::vector<Input>& inputs, const Options& opts);
/// inputs = {M, H}.
Outcome cmdClifford(const std::vector<Input>& inputs, const Options& opts);
Outcome cmdOptimal(const std::vector<Input>& inputs, const Options& opts);
Outcome cmdOracle(const std::vector<Input>& inputs, const Options& opts);

/// Loads the files, runs the named command and converts library errors into error
/// reports with the matching exit code.
Outcome runCommand(const std::string& command, const std::vector<std::string>& paths, const Options& opts);

}  // namespace ssred::cli

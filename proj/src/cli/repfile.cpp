#include <cstdio>

#include "ssred/cli/cli.hpp"
#include "ssred/error.hpp"

namespace ssred::cli {

namespace {

Scalar parseEntry(const FieldSpec& f, const Json& e) {
    if (e.is_string()) return Scalar::parse(f, e.get<std::string>());
    if (e.is_number_integer()) return Scalar(f, e.get<std::int64_t>());
    fail(ErrorCode::ParseError, "matrix entries must be strings or integers");
}

FieldSpec parseField(const Json& f) {
    if (!f.is_object() || !f.contains("kind") || !f["kind"].is_string())
        fail(ErrorCode::ParseError, "field must be an object with a kind");
    const auto kind = f["kind"].get<std::string>();
    if (kind == "rational") return FieldSpec::rational();
    if (kind == "prime") {
        if (!f.contains("p") || !f["p"].is_number_integer() || f["p"].get<std::int64_t>() < 2)
            fail(ErrorCode::ParseError, "prime field needs an integer p");
        return FieldSpec::prime(f["p"].get<std::uint64_t>());
    }
    fail(ErrorCode::ParseError, "unknown field kind " + kind);
}

}  // namespace

Representation parseRepFile(const Json& doc) {
    if (!doc.is_object()) fail(ErrorCode::ParseError, "representation file must be a JSON object");
    if (!doc.contains("field") || !doc.contains("generators") || !doc.contains("n"))
        fail(ErrorCode::ParseError, "missing field, generators or n");
    const FieldSpec f = parseField(doc["field"]);
    if (!doc["n"].is_number_integer() || doc["n"].get<std::int64_t>() < 1)
        fail(ErrorCode::ParseError, "n must be a positive integer");
    const auto n = doc["n"].get<std::size_t>();
    const auto& gens = doc["generators"];
    if (!gens.is_array() || gens.empty()) fail(ErrorCode::ParseError, "generators must be a nonempty array");
    std::vector<Matrix> ms;
    for (const auto& g : gens) {
        if (!g.is_array() || g.size() != n) fail(ErrorCode::ParseError, "generator must have n rows");
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (!g[i].is_array() || g[i].size() != n) fail(ErrorCode::ParseError, "generator rows must have n entries");
            for (std::size_t j = 0; j < n; ++j) m(i, j) = parseEntry(f, g[i][j]);
        }
        ms.push_back(std::move(m));
    }
    std::optional<std::string> name;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) fail(ErrorCode::ParseError, "name must be a string");
        name = doc["name"].get<std::string>();
    }
    return Representation(f, n, std::move(ms), std::move(name));
}

Representation parseRepText(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        fail(ErrorCode::ParseError, e.what());
    }
    return parseRepFile(doc);
}

Json matrixJson(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).toString());
        rows.push_back(row);
    }
    return rows;
}

Json subspaceJson(const Subspace& s) {
    Json rows = Json::array();
    for (const auto& v : s.basis()) {
        Json row = Json::array();
        for (const auto& x : v) row.push_back(x.toString());
        rows.push_back(row);
    }
    return rows;
}

Json flagJson(const Flag& f) {
    Json steps = Json::array();
    for (const auto& s : f.steps()) steps.push_back(subspaceJson(s));
    return steps;
}

Json repToJson(const Representation& rep) {
    Json doc;
    if (rep.field().isPrime())
        doc["field"] = {{"kind", "prime"}, {"p", rep.field().characteristic()}};
    else
        doc["field"] = {{"kind", "rational"}};
    Json gens = Json::array();
    for (const auto& g : rep.generators()) gens.push_back(matrixJson(g));
    doc["generators"] = gens;
    doc["n"] = rep.dim();
    if (rep.name()) doc["name"] = *rep.name();
    return doc;
}

std::string canonicalText(const Json& doc) { return doc.dump(2) + "\n"; }

std::string digest(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace ssred::cli

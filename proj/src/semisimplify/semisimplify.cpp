#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "ssred/error.hpp"
#include "ssred/semisimplify/ssred.hpp"

namespace ssred {

namespace {

/// Basis adapted to the flag made of invariant complements of V_{i-1} in V_i.
/// Requires a semisimple module.
Matrix complementBasis(const Representation& rep, const Flag& flag) {
    std::vector<Vector> cols;
    Subspace prev(rep.field(), rep.dim());
    for (const auto& step : flag.steps()) {
        std::vector<Vector> inner;
        for (const auto& b : prev.basis()) inner.push_back(*step.coordinates(b));
        Subspace prevInStep = Subspace::span(rep.field(), step.dim(), inner);
        Subspace comp(rep.field(), step.dim());
        if (prevInStep.isZero()) {
            comp = Subspace::full(rep.field(), step.dim());
        } else {
            auto pi = invariantProjection(restrictTo(rep, step), prevInStep);
            if (!pi) fail(ErrorCode::InternalInvariantViolation, "semisimple module without a complement");
            comp = Subspace::span(rep.field(), step.dim(), kernel(*pi));
        }
        const Subspace lifted = liftFromSub(step, comp);
        for (const auto& b : lifted.basis()) cols.push_back(b);
        prev = step;
    }
    return Matrix::fromColumns(rep.field(), cols, rep.dim());
}

}  // namespace

Representation SsResult::ssRepresentation() const {
    return Representation(input.field(), input.dim(), ssGenerators, input.name());
}

SemisimpleCertificate isGcrOverK(const Representation& rep) { return isSemisimple(rep); }

SsResult semisimplify(const Representation& rep, std::uint64_t seed) {
    CompositionSeries series = compositionSeries(rep, seed);
    SemisimpleCertificate inputCert = isSemisimple(rep);
    Cocharacter lambda = flagToCocharacter(series.flag);
    if (inputCert.semisimple && !series.flag.isTrivial())
        lambda = Cocharacter(complementBasis(rep, series.flag), lambda.weights());

    std::vector<Matrix> ss = cLambda(rep.generators(), lambda);
    std::vector<Matrix> blocks;
    for (const auto& m : ss) blocks.push_back(lambda.toAdapted(m));
    Representation ssRep(rep.field(), rep.dim(), ss, rep.name());
    SemisimpleCertificate cert = inputCert.semisimple && ss == rep.generators() ? inputCert : isSemisimple(ssRep);
    if (!cert.semisimple) fail(ErrorCode::InternalInvariantViolation, "limit along the composition flag is not semisimple");

    bool lIrreducible = true;
    for (const auto& fac : flagFactors(ssRep, series.flag))
        if (!isIrreducible(fac, seed)) lIrreducible = false;

    return SsResult{rep, series.flag, lambda, std::move(ss), std::move(blocks), std::move(cert), lIrreducible, seed};
}

ConjugacyCertificate conjugacyCertificate(const SsResult& a, const SsResult& b) {
    if (!(a.input.field() == b.input.field()) || a.input.generators() != b.input.generators())
        fail(ErrorCode::InvalidArgument, "semisimplifications of different inputs");
    std::optional<Matrix> g;
    try {
        g = moduleIso(a.ssRepresentation(), b.ssRepresentation(), a.seed ^ b.seed);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::Undecided) throw;
        fail(ErrorCode::CertificateSearchExhausted, e.what());
    }
    if (!g) fail(ErrorCode::InternalInvariantViolation, "semisimplifications are not conjugate");
    for (std::size_t i = 0; i < a.ssGenerators.size(); ++i)
        if (!(conjugate(*g, a.ssGenerators[i]) == b.ssGenerators[i]))
            fail(ErrorCode::InternalInvariantViolation, "conjugator failed verification");
    return ConjugacyCertificate{*g, a, b};
}

bool LeviReport::blocksGcr() const {
    return std::all_of(blockGcr.begin(), blockGcr.end(), [](bool b) { return b; });
}

std::vector<Representation> diagonalBlocks(const Representation& rep, const std::vector<std::size_t>& blockSizes) {
    if (std::accumulate(blockSizes.begin(), blockSizes.end(), std::size_t{0}) != rep.dim() ||
        std::find(blockSizes.begin(), blockSizes.end(), std::size_t{0}) != blockSizes.end())
        fail(ErrorCode::DimensionMismatch, "block sizes must be positive and sum to n");
    std::vector<std::size_t> blockOf;
    for (std::size_t b = 0; b < blockSizes.size(); ++b) blockOf.insert(blockOf.end(), blockSizes[b], b);
    for (const auto& h : rep.generators())
        for (std::size_t i = 0; i < rep.dim(); ++i)
            for (std::size_t j = 0; j < rep.dim(); ++j)
                if (blockOf[i] != blockOf[j] && !h(i, j).isZero())
                    fail(ErrorCode::NotBlockDiagonal, "generator has an off-diagonal block entry");
    std::vector<Representation> out;
    std::size_t start = 0;
    for (auto size : blockSizes) {
        std::vector<Matrix> gens;
        for (const auto& h : rep.generators()) gens.push_back(h.block(start, start, size, size));
        out.emplace_back(rep.field(), size, std::move(gens));
        start += size;
    }
    return out;
}

LeviReport leviDescent(const Representation& rep, const std::vector<std::size_t>& blockSizes) {
    LeviReport report;
    for (const auto& block : diagonalBlocks(rep, blockSizes)) report.blockGcr.push_back(isGcrOverK(block).semisimple);
    report.fullGcr = isGcrOverK(rep).semisimple;
    return report;
}

CliffordResult cliffordJointSS(const Representation& m, const Representation& h, std::uint64_t seed,
                               std::size_t maxGroupOrder) {
    if (!(m.field() == h.field())) fail(ErrorCode::FieldMismatch, "m and h over different fields");
    if (m.dim() != h.dim()) fail(ErrorCode::DimensionMismatch, "m and h of different dimensions");
    CliffordResult result{semisimplify(m, seed), {}, {}, false};
    if (m.field().isPrime()) {
        auto groupM = generatedGroup(m.generators(), maxGroupOrder);
        auto groupH = generatedGroup(h.generators(), maxGroupOrder);
        std::unordered_set<std::string> inM, inH;
        for (const auto& x : groupM) inM.insert(x.encode());
        for (const auto& x : groupH) inH.insert(x.encode());
        for (const auto& x : h.generators())
            if (!inM.count(x.encode())) fail(ErrorCode::NotNormal, "h is not contained in the group generated by m");
        for (const auto& g : m.generators()) {
            const Matrix gInv = inverse(g);
            for (const auto& x : groupH)
                if (!inH.count((g * x * gInv).encode())) fail(ErrorCode::NotNormal, "m does not normalize h");
        }
        result.normalityVerified = true;
    } else {
        const auto basis = envelopingBasis(h).algebraBasis;
        for (const auto& g : m.generators()) {
            const Matrix gInv = inverse(g);
            for (const auto& b : basis)
                if (!inSpan(basis, g * b * gInv))
                    fail(ErrorCode::AlgebraNotStable, "m does not normalize the algebra of h");
        }
    }
    result.hLimit = cLambda(h.generators(), result.m.cocharacter);
    result.hCertificate = isSemisimple(Representation(h.field(), h.dim(), result.hLimit));
    return result;
}

}  // namespace ssred

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ssred/matrep/matrep.hpp"

namespace ssred {

struct SsResult {
    Representation input;
    Flag flag;
    Cocharacter cocharacter;
    /// c_lambda of each input generator, aligned with input.generators().
    std::vector<Matrix> ssGenerators;
    /// ssGenerators in the adapted basis (block diagonal).
    std::vector<Matrix> blockGenerators;
    SemisimpleCertificate semisimpleCertificate;
    bool lIrreducible = false;
    std::uint64_t seed = 0;

    Representation ssRepresentation() const;
};

/// Delegates to isSemisimple.
SemisimpleCertificate isGcrOverK(const Representation& rep);

/// Composition-series flag, its cocharacter and the limits of the generators.
/// Semisimple input keeps its generators: the adapted basis is built from invariant
/// complements, so the limit map fixes them. Throws InternalInvariantViolation if
/// the limit fails the semisimplicity check.
SsResult semisimplify(const Representation& rep, std::uint64_t seed = 0);

struct ConjugacyCertificate {
    Matrix g;
    SsResult lhs;
    SsResult rhs;
};
/// Throws InvalidArgument if the inputs differ, CertificateSearchExhausted if the
/// search over Q gives up, InternalInvariantViolation if no conjugator exists.
ConjugacyCertificate conjugacyCertificate(const SsResult& a, const SsResult& b);

struct LeviReport {
    bool fullGcr = false;
    std::vector<bool> blockGcr;
    bool blocksGcr() const;
    bool agree() const { return fullGcr == blocksGcr(); }
};
/// Throws NotBlockDiagonal unless every generator is block diagonal for blockSizes.
LeviReport leviDescent(const Representation& rep, const std::vector<std::size_t>& blockSizes);
std::vector<Representation> diagonalBlocks(const Representation& rep, const std::vector<std::size_t>& blockSizes);

struct CliffordResult {
    SsResult m;
    /// Limits of h's generators along m's cocharacter.
    std::vector<Matrix> hLimit;
    SemisimpleCertificate hCertificate;
    /// True when normality was verified by enumerating groups; false when only the
    /// algebra-level condition was checked (Q).
    bool normalityVerified = false;
};
/// Throws NotNormal (finite fields: <h> is not a normal subgroup of <m>),
/// AlgebraNotStable (Q: m does not normalize the algebra of h), ResourceBoundExceeded.
CliffordResult cliffordJointSS(const Representation& m, const Representation& h, std::uint64_t seed = 0,
                               std::size_t maxGroupOrder = std::size_t{1} << 21);

/// Invariant subspaces (including 0 and k^n), sorted by dimension then encoding.
/// Complete over F_q when q^n <= 2^14; over Q, the subspaces reachable from spins of
/// kernel vectors of algebra elements, closed under sum and intersection.
std::vector<Subspace> invariantSubspaceLattice(const Representation& rep, std::size_t cap = 4096);

struct FlagCandidate {
    Flag flag;
    /// Block weights (strictly decreasing, in [1, B]) attaining the best measure.
    std::vector<std::int64_t> blockWeights;
    std::vector<std::int64_t> canonicalWeights;
    /// Squared quotient w_min^2 / |w|^2.
    Rational measure;
};

struct OptimalFlagOptions {
    std::int64_t maxWeightHeight = 4;
    std::size_t maxFlags = 20000;
    /// Largest R_u(P)(F_q) enumerated when maximizing over Levi choices.
    std::uint64_t maxUnipotent = std::uint64_t{1} << 12;
};

struct OptimalFlagReport {
    std::vector<Flag> argmaxFlags;
    std::vector<FlagCandidate> argmax;
    Rational measure;
    /// Best candidate for every admissible flag.
    std::vector<FlagCandidate> perFlag;
    std::int64_t searchBound = 0;
    std::size_t flagsExamined = 0;
};

/// Search over H-stable flags and weights of height <= B for the largest squared
/// quotient w_min^2 / |w|^2, where w_min is the smallest weight gap carried by a
/// nonzero off-Levi block of the enveloping algebra. Only flags whose limit is
/// semisimple are admissible. Over F_q, w_min is maximized over Levi subgroups of the
/// flag's parabolic so the measure depends on the flag alone. Throws
/// PreconditionNotDestabilizable (semisimple input) and SearchSpaceExceeded.
OptimalFlagReport optimalFlag(const Representation& rep, const OptimalFlagOptions& options = {});

}  // namespace ssred

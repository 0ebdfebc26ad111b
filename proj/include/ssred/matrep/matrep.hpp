#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ssred/cochar/cochar.hpp"
#include "ssred/exactalg/poly.hpp"

namespace ssred {

/// A matrix group H given by invertible generators acting on k^n.
class Representation {
public:
    /// Throws InvalidArgument (empty list), DimensionMismatch, FieldMismatch or
    /// NotInvertible.
    Representation(const FieldSpec& field, std::size_t n, std::vector<Matrix> generators,
                   std::optional<std::string> name = std::nullopt);

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return n_; }
    const std::vector<Matrix>& generators() const noexcept { return gens_; }
    const std::optional<std::string>& name() const noexcept { return name_; }
    Representation conjugated(const Matrix& g) const;

private:
    FieldSpec field_;
    std::size_t n_;
    std::vector<Matrix> gens_;
    std::optional<std::string> name_;
};

/// Generators followed by their inverses, with a basis of the algebra they span.
struct GenericTuple {
    std::vector<Matrix> entries;
    std::vector<Matrix> algebraBasis;
    std::size_t algebraDim() const noexcept { return algebraBasis.size(); }
};

/// Closes span{I, entries} under left multiplication by the entries.
GenericTuple envelopingBasis(const Representation& rep);
/// True if m lies in the span of the basis matrices.
bool inSpan(const std::vector<Matrix>& basis, const Matrix& m);

/// Evidence that a module has no proper nonzero submodule.
struct IrreducibleWitness {
    enum class Method {
        Dimension1,  // n = 1
        Burnside,    // enveloping algebra is all of M_n
        Norton,      // kernel and dual-kernel vectors of f(A) both spin to the full space
        Exhaustive,  // every nonzero vector spins to the full space (small finite fields)
    };
    Method method = Method::Dimension1;
    std::optional<Matrix> element;
    std::optional<Poly> factor;
    std::optional<Vector> kernelVector;
    std::optional<Vector> dualVector;
};
std::string methodName(IrreducibleWitness::Method m);
/// Re-checks a witness from scratch.
bool verifyWitness(const Representation& rep, const IrreducibleWitness& witness);

using SubmoduleSearch = std::variant<IrreducibleWitness, Subspace>;
/// A proper nonzero invariant subspace or an irreducibility witness. Throws
/// Undecided when the search bounds are exhausted (large fields, Q with n > 8).
SubmoduleSearch findSubmodule(const Representation& rep, std::uint64_t seed = 0);
bool isIrreducible(const Representation& rep, std::uint64_t seed = 0);

/// Action on an invariant subspace, in the coordinates of its echelon basis.
Representation restrictTo(const Representation& rep, const Subspace& w);
/// Action on k^n / w, in the coordinates of the non-pivot columns of w.
Representation quotientBy(const Representation& rep, const Subspace& w);
/// Maps a subspace of k^{dim w} (echelon coordinates) into k^n.
Subspace liftFromSub(const Subspace& w, const Subspace& inner);
/// Preimage in k^n of a subspace of k^n / w.
Subspace liftFromQuotient(const Subspace& w, const Subspace& inner);

struct CompositionSeries {
    Flag flag;
    std::vector<Representation> factors;
    std::vector<IrreducibleWitness> witnesses;
};

/// seed 0 explores standard basis vectors in index order; other seeds shuffle the
/// order, which can produce different series for the same module.
CompositionSeries compositionSeries(const Representation& rep, std::uint64_t seed = 0);
/// Action of the generators on V_i / V_{i-1} for each step of the flag.
std::vector<Representation> flagFactors(const Representation& rep, const Flag& flag);

struct SemisimpleCertificate {
    bool semisimple = false;
    /// Irreducible invariant subspaces whose direct sum is k^n (when semisimple).
    std::vector<Subspace> summands;
    /// Invariant subspace without an invariant complement (when not semisimple).
    std::optional<Subspace> nonSplit;
};
SemisimpleCertificate isSemisimple(const Representation& rep);
/// Projection onto w commuting with the generators, if one exists.
std::optional<Matrix> invariantProjection(const Representation& rep, const Subspace& w);

/// g with g a_i g^-1 = b_i for all i, or nullopt. Throws GeneratorCountMismatch,
/// FieldMismatch, or Undecided when the search over Q gives up.
std::optional<Matrix> moduleIso(const Representation& a, const Representation& b, std::uint64_t seed = 0);

struct IsoClass {
    Representation representative;
    std::size_t multiplicity;
};
using IsoClassMultiset = std::vector<IsoClass>;
IsoClassMultiset isoClassMultiset(const CompositionSeries& series);
/// Same classes with the same multiplicities, in any order.
bool sameIsoClasses(const IsoClassMultiset& a, const IsoClassMultiset& b);

/// Elements of the group generated over a prime field, in discovery order.
/// Throws ResourceBoundExceeded beyond maxOrder.
std::vector<Matrix> generatedGroup(const std::vector<Matrix>& generators, std::size_t maxOrder);

}  // namespace ssred

#pragma once

// Brute-force GIT oracle over small prime fields. Uses its own packed arithmetic
// (entries as small integers mod q) so that it does not share code paths with the
// exact linear algebra it is used to check.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "ssred/matrep/matrep.hpp"

namespace ssred::oracle {

/// Row-major n x n matrix with entries in [0, q).
using Packed = std::vector<std::uint32_t>;
/// Base-q integer of the entries, first entry most significant.
using Code = std::uint64_t;
using Tuple = std::vector<Code>;
/// Orbit id: the lexicographically smallest member tuple.
using OrbitId = Tuple;

struct TupleHash {
    std::size_t operator()(const Tuple& t) const noexcept;
};

class GroupTable {
public:
    std::size_t n() const noexcept { return n_; }
    std::uint32_t q() const noexcept { return q_; }
    std::size_t order() const noexcept { return elements_.size(); }
    /// Elements in increasing code order (lexicographic on entries).
    const std::vector<Code>& elements() const noexcept { return elements_; }
    const Packed& packed(std::size_t i) const { return packed_[i]; }
    std::size_t inverseOf(std::size_t i) const { return inverse_[i]; }
    std::optional<std::size_t> indexOf(Code c) const;

    Code encode(const Packed& m) const;
    Packed decode(Code c) const;
    Packed multiply(const Packed& a, const Packed& b) const;
    /// Inverse by Gauss-Jordan mod q; nullopt if singular.
    std::optional<Packed> invert(const Packed& m) const;
    /// g m g^-1 for group element index i.
    Code conjugate(std::size_t i, Code m) const;
    Tuple conjugate(std::size_t i, const Tuple& t) const;

    Packed fromMatrix(const Matrix& m) const;
    Matrix toMatrix(const Packed& m) const;

private:
    friend GroupTable enumerateGroup(std::size_t n, std::uint32_t q, std::size_t maxOrder);
    std::size_t n_ = 0;
    std::uint32_t q_ = 0;
    std::vector<Code> elements_;
    std::vector<Packed> packed_;
    std::vector<std::size_t> inverse_;
    std::unordered_map<Code, std::size_t> index_;
};

/// All of GL_n(F_q). Throws ResourceBoundExceeded when the order exceeds maxOrder
/// or the estimated memory exceeds SSRED_MAX_MEMORY_MB (default 1024).
GroupTable enumerateGroup(std::size_t n, std::uint32_t q, std::size_t maxOrder = std::size_t{1} << 21);
/// prod_{i<n} (q^n - q^i).
std::uint64_t glOrder(std::size_t n, std::uint32_t q);

/// Subspace of F_q^n kept as its reduced echelon basis rows, plus its member set.
struct OracleSubspace {
    std::vector<Packed> rows;  // each row has n entries
    std::set<Code> members;    // vectors packed base q
};

/// A chain V_1 < ... < V_r = F_q^n of indices into a subspace list.
struct OracleFlag {
    std::vector<std::size_t> steps;
};

struct FlagSet {
    std::size_t n = 0;
    std::uint32_t q = 0;
    std::vector<OracleSubspace> subspaces;  // every subspace except 0
    std::vector<OracleFlag> flags;          // includes the trivial flag
    Flag toFlag(const OracleFlag& f) const;
};

/// Every subspace and every flag of F_q^n; throws ResourceBoundExceeded if q^n > 2^14.
FlagSet enumerateFlags(std::size_t n, std::uint32_t q);

class Oracle {
public:
    explicit Oracle(const GroupTable& table);

    const GroupTable& table() const noexcept { return table_; }
    const FlagSet& flags() const noexcept { return flags_; }

    Tuple tupleOf(const std::vector<Matrix>& ms) const;
    /// Generators followed by inverses.
    Tuple genericTuple(const Representation& rep) const;

    /// Every conjugate of the tuple under the group.
    std::vector<Tuple> orbit(const Tuple& t) const;
    OrbitId orbitId(const Tuple& t) const;

    bool preserves(const Tuple& t, const OracleFlag& f) const;
    /// Limit along the flag (adapted basis from the echelon rows, off-diagonal blocks
    /// zeroed). Requires preserves(t, f).
    Tuple limit(const Tuple& t, const OracleFlag& f) const;

    bool isCocharClosed(const Tuple& t) const;
    /// Orbit ids of cocharacter-closed orbits reachable by one limit (the trivial
    /// flag included).
    std::set<OrbitId> accessibleClosedOrbits(const Tuple& t) const;
    /// Orbit ids reachable by one limit, closed or not.
    std::set<OrbitId> accessibleOrbits(const Tuple& t) const;

    /// For n <= 2, q = 2: limits along every cocharacter g diag(a^w) g^-1 with
    /// |w_i| <= height reach exactly the orbits reached by flags.
    bool flagsSuffice(const Tuple& t, int height = 3) const;

    std::vector<std::size_t> generatedSubgroup(const Tuple& gens) const;
    /// Elements g with g S g^-1 = S for the subgroup generated by gens.
    std::vector<std::size_t> normalizer(const Tuple& gens) const;
    /// Elements commuting with every entry.
    std::vector<std::size_t> centralizer(const Tuple& gens) const;

private:
    std::set<OrbitId> reachable(const Tuple& t, bool closedOnly) const;

    const GroupTable& table_;
    FlagSet flags_;
    mutable std::map<OrbitId, bool> closedMemo_;
};

/// Builds the tables and returns isCocharClosed of the generic tuple.
bool oracleGcr(const Representation& rep, std::size_t maxGroupOrder = std::size_t{1} << 21);

}  // namespace ssred::oracle

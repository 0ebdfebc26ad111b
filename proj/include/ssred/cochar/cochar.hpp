#pragma once

#include <cstdint>
#include <vector>

#include "ssred/exactalg/linalg.hpp"

namespace ssred {

/// Strictly increasing chain 0 < V_1 < ... < V_r = k^n (the zero space is implicit).
class Flag {
public:
    /// Validates the chain; throws InvalidArgument if it is not strictly increasing
    /// or does not end at the full space.
    Flag(const FieldSpec& field, std::size_t n, std::vector<Subspace> steps);
    /// The one-step flag (k^n).
    static Flag trivial(const FieldSpec& field, std::size_t n);
    /// Drops zero and repeated subspaces, appends k^n if missing.
    static Flag fromChain(const FieldSpec& field, std::size_t n, const std::vector<Subspace>& chain);

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t ambientDim() const noexcept { return n_; }
    std::size_t length() const noexcept { return steps_.size(); }
    const std::vector<Subspace>& steps() const noexcept { return steps_; }
    std::vector<std::size_t> blockSizes() const;
    bool isTrivial() const noexcept { return steps_.size() == 1; }

    /// m V_i is contained in V_i for every step.
    bool isStabilizedBy(const Matrix& m) const;
    /// True if every step of `other` is a step of this flag.
    bool refines(const Flag& other) const;
    Flag image(const Matrix& g) const;

    std::string encode() const;
    friend bool operator==(const Flag& a, const Flag& b) { return a.n_ == b.n_ && a.steps_ == b.steps_; }

private:
    FieldSpec field_;
    std::size_t n_;
    std::vector<Subspace> steps_;
};

/// A cocharacter of GL_n: lambda(a) = T diag(a^w_1, ..., a^w_n) T^-1 with T the
/// basis change (columns = adapted basis) and w non-increasing.
class Cocharacter {
public:
    Cocharacter(Matrix basisChange, std::vector<std::int64_t> weights);

    const FieldSpec& field() const noexcept { return t_.field(); }
    std::size_t dim() const noexcept { return weights_.size(); }
    const Matrix& basisChange() const noexcept { return t_; }
    const Matrix& basisChangeInverse() const noexcept { return tInv_; }
    const std::vector<std::int64_t>& weights() const noexcept { return weights_; }

    /// n w - sum(w), divided by the gcd of the entries (all zero stays zero).
    std::vector<std::int64_t> canonicalWeights() const;
    /// Sizes of the runs of equal weights.
    std::vector<std::size_t> blockSizes() const;
    /// The flag whose stabilizer is P_lambda.
    Flag flag() const;
    /// g . lambda: basis change g T, same weights.
    Cocharacter conjugated(const Matrix& g) const;

    /// T^-1 m T.
    Matrix toAdapted(const Matrix& m) const;
    Matrix fromAdapted(const Matrix& a) const;

private:
    Matrix t_;
    Matrix tInv_;
    std::vector<std::int64_t> weights_;
};

/// Adapted basis: for each step the echelon rows of V_i whose pivots are new;
/// weights (r, ..., 1) with multiplicities the block sizes.
Cocharacter flagToCocharacter(const Flag& flag);
/// Same adapted basis with caller-supplied block weights (strictly decreasing).
Cocharacter flagToCocharacter(const Flag& flag, const std::vector<std::int64_t>& blockWeights);

bool inPlambda(const Matrix& m, const Cocharacter& lambda);
/// lim_{a->0} lambda(a) m lambda(a)^-1. Throws LimitDoesNotExist outside P_lambda.
Matrix cLambda(const Matrix& m, const Cocharacter& lambda);
std::vector<Matrix> cLambda(const std::vector<Matrix>& ms, const Cocharacter& lambda);
bool inLlambda(const Matrix& m, const Cocharacter& lambda);
bool inRuPlambda(const Matrix& m, const Cocharacter& lambda);

/// u . lambda for u in R_u(P_lambda); its limit map is m -> u c_lambda(m) u^-1 on
/// P_lambda. Throws NotInUnipotentRadical.
Cocharacter leviConjugate(const Cocharacter& lambda, const Matrix& u);

}  // namespace ssred

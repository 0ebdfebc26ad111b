#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ssred/exactalg/matrix.hpp"

namespace ssred {

struct RrefResult {
    Matrix form;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Pivots are chosen as the first nonzero entry scanning
/// columns left to right, so the output is canonical.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Scalar determinant(const Matrix& m);
std::optional<Matrix> tryInverse(const Matrix& m);
/// Throws NotInvertible.
Matrix inverse(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<Vector> kernel(const Matrix& m);
/// Some x with m x = b, or nullopt.
std::optional<Vector> solveLinear(const Matrix& m, const Vector& b);

/// A subspace of k^n kept as the reduced row-echelon basis (rows are basis vectors).
class Subspace {
public:
    /// The zero subspace.
    Subspace(const FieldSpec& field, std::size_t ambientDim);
    static Subspace full(const FieldSpec& field, std::size_t ambientDim);
    static Subspace span(const FieldSpec& field, std::size_t ambientDim, const std::vector<Vector>& vectors);

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t ambientDim() const noexcept { return n_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    bool isZero() const noexcept { return basis_.empty(); }
    bool isFull() const noexcept { return basis_.size() == n_; }
    const std::vector<Vector>& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    Matrix basisMatrix() const { return Matrix::fromRows(field_, basis_, n_); }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    /// Remainder of v after elimination against the basis.
    Vector reduce(Vector v) const;
    /// Coordinates of v in the echelon basis; nullopt if v is not in the subspace.
    std::optional<Vector> coordinates(const Vector& v) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    /// {x : b . x = 0 for every basis vector b}.
    Subspace annihilator() const;
    /// Unit vectors e_j for the non-pivot columns j: a complement of this subspace.
    std::vector<Vector> unitComplement() const;
    bool isInvariant(const std::vector<Matrix>& operators) const;

    std::string encode() const;
    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.n_ == b.n_ && a.basis_ == b.basis_;
    }

private:
    FieldSpec field_;
    std::size_t n_;
    std::vector<Vector> basis_;
    std::vector<std::size_t> pivots_;
};

/// Incrementally maintained reduced echelon basis.
class SpanBuilder {
public:
    SpanBuilder(const FieldSpec& field, std::size_t ambientDim);

    /// Adds v; returns true if it enlarged the span.
    bool add(const Vector& v);
    bool contains(const Vector& v) const;
    std::size_t dim() const noexcept { return rows_.size(); }
    Subspace subspace() const;

private:
    Vector reduce(Vector v) const;

    FieldSpec field_;
    std::size_t n_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

/// Smallest subspace containing `seed` and invariant under every operator.
Subspace spin(const FieldSpec& field, std::size_t n, const std::vector<Vector>& seed,
              const std::vector<Matrix>& operators);

/// Outcome of a search for an invertible g with g lhs_i g^-1 = rhs_i.
struct ConjugationSearch {
    std::optional<Matrix> g;
    /// True when `g` is present, or when absence is proven.
    bool decided = false;
    /// Dimension of the linear solution space {g : g lhs_i = rhs_i g}.
    std::size_t solutionDim = 0;
    std::string note;
};

struct ConjugationOptions {
    std::uint64_t seed = 0;
    std::size_t randomTrials = 64;
    /// Largest coefficient grid enumerated exhaustively.
    std::uint64_t exhaustiveLimit = std::uint64_t{1} << 20;
};

/// Solves the linear system g lhs_i = rhs_i g and looks for an invertible member of
/// the solution space: identity and basis elements first, then random combinations,
/// then an exhaustive grid. Over F_p the grid is F_p^d (or {0..n}^d when p > n);
/// over Q it is {0..n}^d, which is complete because det of a generic combination is a
/// polynomial of degree n in each coefficient. Every returned g is verified.
ConjugationSearch solveConjugating(const std::vector<Matrix>& lhs, const std::vector<Matrix>& rhs,
                                   const ConjugationOptions& options = {});

/// g m g^-1.
Matrix conjugate(const Matrix& g, const Matrix& m);

}  // namespace ssred

#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ssred/exactalg/field.hpp"

namespace ssred {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over a single FieldSpec. Matrices act on column vectors.
class Matrix {
public:
    Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols);
    /// Integer entries, reduced into `field`.
    Matrix(const FieldSpec& field, std::initializer_list<std::initializer_list<std::int64_t>> rows);

    static Matrix identity(const FieldSpec& field, std::size_t n);
    static Matrix fromRows(const FieldSpec& field, const std::vector<Vector>& rows, std::size_t cols);
    static Matrix fromColumns(const FieldSpec& field, const std::vector<Vector>& cols, std::size_t rows);
    static Matrix diagonal(const FieldSpec& field, std::initializer_list<std::int64_t> entries);
    static Matrix random(const FieldSpec& field, std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                         std::int64_t bound = 3);
    /// Random invertible matrix (rejection sampling).
    static Matrix randomInvertible(const FieldSpec& field, std::size_t n, std::mt19937_64& rng,
                                   std::int64_t bound = 3);

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool isSquare() const noexcept { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    const std::vector<Scalar>& entries() const noexcept { return data_; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    std::vector<Vector> rowList() const;

    Matrix transpose() const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void setBlock(std::size_t r0, std::size_t c0, const Matrix& m);

    bool isZero() const;
    bool isIdentity() const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, Matrix m);
    /// Matrix times column vector.
    friend Vector operator*(const Matrix& m, const Vector& v);

    friend bool operator==(const Matrix& a, const Matrix& b);

    /// Entries joined as "a,b;c,d"; used as a hashing/ordering key.
    std::string encode() const;
    std::string toString() const;

private:
    FieldSpec field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;
};

Vector zeroVector(const FieldSpec& field, std::size_t n);
Vector unitVector(const FieldSpec& field, std::size_t n, std::size_t index);
bool isZeroVector(const Vector& v);
Scalar dot(const Vector& a, const Vector& b);
Vector axpy(const Scalar& a, const Vector& x, Vector y);

}  // namespace ssred

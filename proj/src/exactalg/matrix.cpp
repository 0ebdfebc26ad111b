#include "ssred/exactalg/matrix.hpp"

#include <sstream>

#include "ssred/exactalg/linalg.hpp"

namespace ssred {

Matrix::Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix::Matrix(const FieldSpec& field, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : field_(field), rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) fail(ErrorCode::DimensionMismatch, "ragged matrix literal");
        for (auto v : r) data_.emplace_back(field, v);
    }
}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::fromRows(const FieldSpec& field, const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) fail(ErrorCode::DimensionMismatch, "row length");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::fromColumns(const FieldSpec& field, const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(field, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) fail(ErrorCode::DimensionMismatch, "column length");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Matrix Matrix::diagonal(const FieldSpec& field, std::initializer_list<std::int64_t> entries) {
    Matrix m(field, entries.size(), entries.size());
    std::size_t i = 0;
    for (auto v : entries) {
        m(i, i) = Scalar(field, v);
        ++i;
    }
    return m;
}

Matrix Matrix::random(const FieldSpec& field, std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                      std::int64_t bound) {
    Matrix m(field, rows, cols);
    for (auto& e : m.data_) e = Scalar::random(field, rng, bound);
    return m;
}

Matrix Matrix::randomInvertible(const FieldSpec& field, std::size_t n, std::mt19937_64& rng, std::int64_t bound) {
    for (;;) {
        Matrix m = random(field, n, n, rng, bound);
        if (rank(m) == n) return m;
    }
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

std::vector<Vector> Matrix::rowList() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) fail(ErrorCode::DimensionMismatch, "block out of range");
    Matrix b(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void Matrix::setBlock(std::size_t r0, std::size_t c0, const Matrix& m) {
    if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) fail(ErrorCode::DimensionMismatch, "block out of range");
    for (std::size_t i = 0; i < m.rows_; ++i)
        for (std::size_t j = 0; j < m.cols_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

bool Matrix::isZero() const {
    for (const auto& e : data_)
        if (!e.isZero()) return false;
    return true;
}

bool Matrix::isIdentity() const {
    if (!isSquare()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Scalar& e = (*this)(i, j);
            if (i == j ? !e.isOne() : !e.isZero()) return false;
        }
    return true;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail(ErrorCode::DimensionMismatch, "matrix sum");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail(ErrorCode::DimensionMismatch, "matrix difference");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorCode::DimensionMismatch, "matrix product");
    if (!(a.field_ == b.field_)) fail(ErrorCode::FieldMismatch, "matrix product");
    Matrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.isZero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

Matrix operator*(const Scalar& s, Matrix m) {
    for (auto& e : m.data_) e *= s;
    return m;
}

Vector operator*(const Matrix& m, const Vector& v) {
    if (m.cols_ != v.size()) fail(ErrorCode::DimensionMismatch, "matrix-vector product");
    Vector out = zeroVector(m.field_, m.rows_);
    for (std::size_t i = 0; i < m.rows_; ++i)
        for (std::size_t j = 0; j < m.cols_; ++j) {
            if (v[j].isZero()) continue;
            out[i] += m(i, j) * v[j];
        }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::encode() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) out += ';';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out += ',';
            out += (*this)(i, j).toString();
        }
    }
    return out;
}

std::string Matrix::toString() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << ", ";
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << (*this)(i, j).toString();
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

Vector zeroVector(const FieldSpec& field, std::size_t n) { return Vector(n, Scalar::zero(field)); }

Vector unitVector(const FieldSpec& field, std::size_t n, std::size_t index) {
    Vector v = zeroVector(field, n);
    v.at(index) = Scalar::one(field);
    return v;
}

bool isZeroVector(const Vector& v) {
    for (const auto& e : v)
        if (!e.isZero()) return false;
    return true;
}

Scalar dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size() || a.empty()) fail(ErrorCode::DimensionMismatch, "dot product");
    Scalar s = Scalar::zero(a.front().field());
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vector axpy(const Scalar& a, const Vector& x, Vector y) {
    if (x.size() != y.size()) fail(ErrorCode::DimensionMismatch, "axpy");
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
    return y;
}

}  // namespace ssred

#include "ssred/exactalg/linalg.hpp"

#include <deque>

namespace ssred {

RrefResult rref(const Matrix& m) {
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pick = row;
        while (pick < a.rows() && a(pick, col).isZero()) ++pick;
        if (pick == a.rows()) continue;
        if (pick != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pick, j), a(row, j));
        Scalar inv = a(row, col).inverse();
        for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col).isZero()) continue;
            Scalar f = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), row, std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Scalar determinant(const Matrix& m) {
    if (!m.isSquare()) fail(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
    Matrix a = m;
    const std::size_t n = a.rows();
    Scalar det = Scalar::one(m.field());
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pick = col;
        while (pick < n && a(pick, col).isZero()) ++pick;
        if (pick == n) return Scalar::zero(m.field());
        if (pick != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(pick, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        Scalar inv = a(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col).isZero()) continue;
            Scalar f = a(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return det;
}

std::optional<Matrix> tryInverse(const Matrix& m) {
    if (!m.isSquare()) fail(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    aug.setBlock(0, 0, m);
    aug.setBlock(0, n, Matrix::identity(m.field(), n));
    RrefResult r = rref(aug);
    if (r.rank < n || r.pivots[n - 1] != n - 1) return std::nullopt;
    return r.form.block(0, n, n, n);
}

Matrix inverse(const Matrix& m) {
    auto inv = tryInverse(m);
    if (!inv) fail(ErrorCode::NotInvertible, "singular matrix " + m.toString());
    return *inv;
}

std::vector<Vector> kernel(const Matrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> isPivot(m.cols(), false);
    for (auto p : r.pivots) isPivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (isPivot[f]) continue;
        Vector x = unitVector(m.field(), m.cols(), f);
        for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = -r.form(i, f);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<Vector> solveLinear(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) fail(ErrorCode::DimensionMismatch, "right-hand side length");
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    aug.setBlock(0, 0, m);
    for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = b[i];
    RrefResult r = rref(aug);
    if (r.rank > 0 && r.pivots[r.rank - 1] == m.cols()) return std::nullopt;
    Vector x = zeroVector(m.field(), m.cols());
    for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.form(i, m.cols());
    return x;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(const FieldSpec& field, std::size_t ambientDim) : field_(field), n_(ambientDim) {}

Subspace Subspace::full(const FieldSpec& field, std::size_t ambientDim) {
    Subspace s(field, ambientDim);
    for (std::size_t i = 0; i < ambientDim; ++i) {
        s.basis_.push_back(unitVector(field, ambientDim, i));
        s.pivots_.push_back(i);
    }
    return s;
}

Subspace Subspace::span(const FieldSpec& field, std::size_t ambientDim, const std::vector<Vector>& vectors) {
    Subspace s(field, ambientDim);
    if (vectors.empty()) return s;
    RrefResult r = rref(Matrix::fromRows(field, vectors, ambientDim));
    for (std::size_t i = 0; i < r.rank; ++i) s.basis_.push_back(r.form.row(i));
    s.pivots_ = r.pivots;
    return s;
}

Vector Subspace::reduce(Vector v) const {
    if (v.size() != n_) fail(ErrorCode::DimensionMismatch, "vector length");
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Scalar c = v[pivots_[i]];
        if (c.isZero()) continue;
        for (std::size_t j = 0; j < n_; ++j) v[j] -= c * basis_[i][j];
    }
    return v;
}

bool Subspace::contains(const Vector& v) const { return isZeroVector(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    for (const auto& b : other.basis_)
        if (!contains(b)) return false;
    return true;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
    if (!contains(v)) return std::nullopt;
    Vector c;
    c.reserve(basis_.size());
    for (auto p : pivots_) c.push_back(v[p]);
    return c;
}

Subspace Subspace::sum(const Subspace& other) const {
    std::vector<Vector> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return span(field_, n_, all);
}

Subspace Subspace::annihilator() const {
    if (basis_.empty()) return full(field_, n_);
    return span(field_, n_, kernel(basisMatrix()));
}

Subspace Subspace::intersect(const Subspace& other) const {
    return annihilator().sum(other.annihilator()).annihilator();
}

std::vector<Vector> Subspace::unitComplement() const {
    std::vector<bool> isPivot(n_, false);
    for (auto p : pivots_) isPivot[p] = true;
    std::vector<Vector> out;
    for (std::size_t j = 0; j < n_; ++j)
        if (!isPivot[j]) out.push_back(unitVector(field_, n_, j));
    return out;
}

bool Subspace::isInvariant(const std::vector<Matrix>& operators) const {
    for (const auto& op : operators)
        for (const auto& b : basis_)
            if (!contains(op * b)) return false;
    return true;
}

std::string Subspace::encode() const {
    std::string out = std::to_string(n_) + ":";
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (i) out += ';';
        for (std::size_t j = 0; j < n_; ++j) {
            if (j) out += ',';
            out += basis_[i][j].toString();
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// SpanBuilder

SpanBuilder::SpanBuilder(const FieldSpec& field, std::size_t ambientDim) : field_(field), n_(ambientDim) {}

Vector SpanBuilder::reduce(Vector v) const {
    if (v.size() != n_) fail(ErrorCode::DimensionMismatch, "vector length");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Scalar c = v[pivots_[i]];
        if (c.isZero()) continue;
        for (std::size_t j = 0; j < n_; ++j) v[j] -= c * rows_[i][j];
    }
    return v;
}

bool SpanBuilder::contains(const Vector& v) const { return isZeroVector(reduce(v)); }

bool SpanBuilder::add(const Vector& v) {
    Vector r = reduce(v);
    std::size_t pivot = 0;
    while (pivot < n_ && r[pivot].isZero()) ++pivot;
    if (pivot == n_) return false;
    Scalar inv = r[pivot].inverse();
    for (auto& e : r) e *= inv;
    for (auto& row : rows_) {
        const Scalar c = row[pivot];
        if (c.isZero()) continue;
        for (std::size_t j = 0; j < n_; ++j) row[j] -= c * r[j];
    }
    // Keep rows sorted by pivot so subspace() is already in echelon order.
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), pivot);
    return true;
}

Subspace SpanBuilder::subspace() const { return Subspace::span(field_, n_, rows_); }

Subspace spin(const FieldSpec& field, std::size_t n, const std::vector<Vector>& seed,
              const std::vector<Matrix>& operators) {
    SpanBuilder span(field, n);
    std::deque<Vector> queue;
    for (const auto& v : seed)
        if (span.add(v)) queue.push_back(v);
    while (!queue.empty() && span.dim() < n) {
        Vector v = std::move(queue.front());
        queue.pop_front();
        for (const auto& op : operators) {
            Vector w = op * v;
            if (span.add(w)) queue.push_back(std::move(w));
        }
    }
    return span.dim() == n ? Subspace::full(field, n) : span.subspace();
}

// ---------------------------------------------------------------------------
// Conjugation search

Matrix conjugate(const Matrix& g, const Matrix& m) { return g * m * inverse(g); }

namespace {

bool conjugates(const Matrix& g, const std::vector<Matrix>& lhs, const std::vector<Matrix>& rhs) {
    auto inv = tryInverse(g);
    if (!inv) return false;
    for (std::size_t i = 0; i < lhs.size(); ++i)
        if (!(g * lhs[i] * *inv == rhs[i])) return false;
    return true;
}

Matrix combine(const FieldSpec& field, std::size_t n, const std::vector<Matrix>& basis,
               const std::vector<Scalar>& coeffs) {
    Matrix g(field, n, n);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!coeffs[i].isZero()) g += coeffs[i] * basis[i];
    return g;
}

}  // namespace

ConjugationSearch solveConjugating(const std::vector<Matrix>& lhs, const std::vector<Matrix>& rhs,
                                   const ConjugationOptions& options) {
    if (lhs.size() != rhs.size()) fail(ErrorCode::DimensionMismatch, "tuple lengths differ");
    if (lhs.empty()) fail(ErrorCode::InvalidArgument, "empty tuples");
    const FieldSpec field = lhs.front().field();
    const std::size_t n = lhs.front().rows();
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        for (const Matrix* m : {&lhs[i], &rhs[i]}) {
            if (m->rows() != n || m->cols() != n) fail(ErrorCode::DimensionMismatch, "tuple entries must be n x n");
            if (!(m->field() == field)) fail(ErrorCode::FieldMismatch, "tuple entries over different fields");
        }
    }

    ConjugationSearch out;
    Matrix id = Matrix::identity(field, n);
    if (lhs == rhs) {
        out.g = id;
        out.decided = true;
        return out;
    }

    // Unknown g_{ab} sits at index a*n + b; one equation per entry of g L - R g.
    Matrix system(field, lhs.size() * n * n, n * n);
    for (std::size_t t = 0; t < lhs.size(); ++t)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::size_t row = t * n * n + i * n + j;
                for (std::size_t k = 0; k < n; ++k) {
                    system(row, i * n + k) += lhs[t](k, j);
                    system(row, k * n + j) -= rhs[t](i, k);
                }
            }
    std::vector<Matrix> basis;
    for (const auto& v : kernel(system)) {
        Matrix b(field, n, n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t c = 0; c < n; ++c) b(a, c) = v[a * n + c];
        basis.push_back(std::move(b));
    }
    const std::size_t d = basis.size();
    out.solutionDim = d;
    if (d == 0) {
        out.decided = true;
        out.note = "linear solution space is zero";
        return out;
    }

    auto accept = [&](const Matrix& g) {
        if (!conjugates(g, lhs, rhs)) return false;
        out.g = g;
        out.decided = true;
        return true;
    };

    for (const auto& b : basis)
        if (accept(b)) return out;

    std::mt19937_64 rng(options.seed);
    std::int64_t bound = 1;
    for (std::size_t trial = 0; trial < options.randomTrials; ++trial) {
        std::vector<Scalar> coeffs;
        for (std::size_t i = 0; i < d; ++i) coeffs.push_back(Scalar::random(field, rng, bound));
        if (accept(combine(field, n, basis, coeffs))) return out;
        if (field.isRational() && bound < 1024 && trial % 4 == 3) bound *= 2;
    }

    // Exhaustive grid. S = F_p when p <= n, else S = {0..n}: a nonzero polynomial of
    // degree <= n in each variable cannot vanish on all of S^d when |S| > n.
    std::uint64_t base = n + 1;
    if (field.isPrime() && field.characteristic() <= n) base = field.characteristic();
    std::uint64_t total = 1;
    bool tooLarge = false;
    for (std::size_t i = 0; i < d; ++i) {
        if (total > options.exhaustiveLimit / base) {
            tooLarge = true;
            break;
        }
        total *= base;
    }
    if (tooLarge) {
        out.note = "solution space of dimension " + std::to_string(d) +
                   " too large for exhaustive search; random search found no invertible element";
        return out;
    }
    std::vector<std::uint64_t> digits(d, 0);
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        for (std::size_t i = 0; i < d; ++i) {
            if (++digits[i] < base) break;
            digits[i] = 0;
        }
        std::vector<Scalar> coeffs;
        for (auto v : digits) coeffs.emplace_back(field, static_cast<std::int64_t>(v));
        if (accept(combine(field, n, basis, coeffs))) return out;
    }
    out.decided = true;
    out.note = "exhaustive search over the solution space found no invertible element";
    return out;
}

}  // namespace ssred

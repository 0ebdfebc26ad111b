#include "ssred/cochar/cochar.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ssred/error.hpp"

namespace ssred {

namespace {

void checkSquare(const Matrix& m, const Cocharacter& lambda) {
    if (!m.isSquare() || m.rows() != lambda.dim())
        fail(ErrorCode::DimensionMismatch, "matrix does not match cocharacter dimension");
    if (!(m.field() == lambda.field())) fail(ErrorCode::FieldMismatch, "matrix and cocharacter fields differ");
}

Subspace imageOf(const Subspace& s, const Matrix& g) {
    std::vector<Vector> vs;
    for (const auto& b : s.basis()) vs.push_back(g * b);
    return Subspace::span(s.field(), s.ambientDim(), vs);
}

}  // namespace

Flag::Flag(const FieldSpec& field, std::size_t n, std::vector<Subspace> steps)
    : field_(field), n_(n), steps_(std::move(steps)) {
    if (n == 0) fail(ErrorCode::InvalidArgument, "flag of the zero space");
    if (steps_.empty() || !steps_.back().isFull())
        fail(ErrorCode::InvalidArgument, "flag must end at the full space");
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        if (steps_[i].ambientDim() != n || !(steps_[i].field() == field))
            fail(ErrorCode::DimensionMismatch, "flag step has wrong ambient space");
        if (steps_[i].isZero()) fail(ErrorCode::InvalidArgument, "flag steps exclude the zero space");
        if (i > 0 && (steps_[i].dim() <= steps_[i - 1].dim() || !steps_[i].contains(steps_[i - 1])))
            fail(ErrorCode::InvalidArgument, "flag steps must strictly increase");
    }
}

Flag Flag::trivial(const FieldSpec& field, std::size_t n) { return Flag(field, n, {Subspace::full(field, n)}); }

Flag Flag::fromChain(const FieldSpec& field, std::size_t n, const std::vector<Subspace>& chain) {
    std::vector<Subspace> steps;
    for (const auto& s : chain) {
        if (s.isZero()) continue;
        if (!steps.empty() && steps.back() == s) continue;
        steps.push_back(s);
    }
    if (steps.empty() || !steps.back().isFull()) steps.push_back(Subspace::full(field, n));
    return Flag(field, n, std::move(steps));
}

std::vector<std::size_t> Flag::blockSizes() const {
    std::vector<std::size_t> out;
    std::size_t prev = 0;
    for (const auto& s : steps_) {
        out.push_back(s.dim() - prev);
        prev = s.dim();
    }
    return out;
}

bool Flag::isStabilizedBy(const Matrix& m) const {
    for (const auto& s : steps_)
        if (!s.isInvariant({m})) return false;
    return true;
}

bool Flag::refines(const Flag& other) const {
    for (const auto& s : other.steps_)
        if (std::find(steps_.begin(), steps_.end(), s) == steps_.end()) return false;
    return true;
}

Flag Flag::image(const Matrix& g) const {
    std::vector<Subspace> steps;
    for (const auto& s : steps_) steps.push_back(imageOf(s, g));
    return Flag(field_, n_, std::move(steps));
}

std::string Flag::encode() const {
    std::string out;
    for (const auto& s : steps_) out += "[" + s.encode() + "]";
    return out;
}

Cocharacter::Cocharacter(Matrix basisChange, std::vector<std::int64_t> weights)
    : t_(std::move(basisChange)), tInv_(t_.field(), 0, 0), weights_(std::move(weights)) {
    if (!t_.isSquare() || t_.rows() != weights_.size())
        fail(ErrorCode::DimensionMismatch, "basis change and weights disagree in size");
    for (std::size_t i = 1; i < weights_.size(); ++i)
        if (weights_[i] > weights_[i - 1]) fail(ErrorCode::InvalidArgument, "weights must be non-increasing");
    tInv_ = inverse(t_);
}

std::vector<std::int64_t> Cocharacter::canonicalWeights() const {
    const auto n = static_cast<std::int64_t>(weights_.size());
    const std::int64_t sum = std::accumulate(weights_.begin(), weights_.end(), std::int64_t{0});
    std::vector<std::int64_t> out;
    std::int64_t g = 0;
    for (auto w : weights_) {
        out.push_back(n * w - sum);
        g = std::gcd(g, out.back());
    }
    if (g > 1)
        for (auto& w : out) w /= g;
    return out;
}

std::vector<std::size_t> Cocharacter::blockSizes() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i == 0 || weights_[i] != weights_[i - 1]) out.push_back(0);
        ++out.back();
    }
    return out;
}

Flag Cocharacter::flag() const {
    std::vector<Subspace> steps;
    std::vector<Vector> cols;
    std::size_t pos = 0;
    for (auto size : blockSizes()) {
        for (std::size_t k = 0; k < size; ++k) cols.push_back(t_.column(pos++));
        steps.push_back(Subspace::span(field(), dim(), cols));
    }
    return Flag(field(), dim(), std::move(steps));
}

Cocharacter Cocharacter::conjugated(const Matrix& g) const { return Cocharacter(g * t_, weights_); }

Matrix Cocharacter::toAdapted(const Matrix& m) const { return tInv_ * m * t_; }
Matrix Cocharacter::fromAdapted(const Matrix& a) const { return t_ * a * tInv_; }

Cocharacter flagToCocharacter(const Flag& flag) {
    std::vector<std::int64_t> weights;
    for (std::size_t i = flag.length(); i >= 1; --i) weights.push_back(static_cast<std::int64_t>(i));
    return flagToCocharacter(flag, weights);
}

Cocharacter flagToCocharacter(const Flag& flag, const std::vector<std::int64_t>& blockWeights) {
    if (blockWeights.size() != flag.length())
        fail(ErrorCode::DimensionMismatch, "one weight per flag step required");
    for (std::size_t i = 1; i < blockWeights.size(); ++i)
        if (blockWeights[i] >= blockWeights[i - 1])
            fail(ErrorCode::InvalidArgument, "block weights must strictly decrease");
    std::vector<Vector> cols;
    std::vector<std::int64_t> weights;
    std::set<std::size_t> seen;
    for (std::size_t i = 0; i < flag.length(); ++i) {
        const auto& step = flag.steps()[i];
        for (std::size_t r = 0; r < step.dim(); ++r) {
            if (!seen.insert(step.pivots()[r]).second) continue;
            cols.push_back(step.basis()[r]);
            weights.push_back(blockWeights[i]);
        }
    }
    return Cocharacter(Matrix::fromColumns(flag.field(), cols, flag.ambientDim()), std::move(weights));
}

bool inPlambda(const Matrix& m, const Cocharacter& lambda) {
    checkSquare(m, lambda);
    const Matrix a = lambda.toAdapted(m);
    const auto& w = lambda.weights();
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j)
            if (w[i] < w[j] && !a(i, j).isZero()) return false;
    return true;
}

Matrix cLambda(const Matrix& m, const Cocharacter& lambda) {
    if (!inPlambda(m, lambda)) fail(ErrorCode::LimitDoesNotExist, "matrix is not in P_lambda");
    Matrix a = lambda.toAdapted(m);
    const auto& w = lambda.weights();
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j)
            if (w[i] != w[j]) a(i, j) = Scalar::zero(m.field());
    return lambda.fromAdapted(a);
}

std::vector<Matrix> cLambda(const std::vector<Matrix>& ms, const Cocharacter& lambda) {
    std::vector<Matrix> out;
    out.reserve(ms.size());
    for (const auto& m : ms) out.push_back(cLambda(m, lambda));
    return out;
}

bool inLlambda(const Matrix& m, const Cocharacter& lambda) {
    return inPlambda(m, lambda) && cLambda(m, lambda) == m;
}

bool inRuPlambda(const Matrix& m, const Cocharacter& lambda) {
    return inPlambda(m, lambda) && cLambda(m, lambda).isIdentity();
}

Cocharacter leviConjugate(const Cocharacter& lambda, const Matrix& u) {
    if (!inRuPlambda(u, lambda)) fail(ErrorCode::NotInUnipotentRadical, "u is not in R_u(P_lambda)");
    return lambda.conjugated(u);
}

}  // namespace ssred

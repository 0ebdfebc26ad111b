#include "ssred/matrep/matrep.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <unordered_set>

#include "ssred/error.hpp"

namespace ssred {

namespace {

constexpr std::size_t kNortonTrials = 200;
constexpr std::size_t kRationalDimCap = 8;
constexpr std::uint64_t kExhaustiveVectors = std::uint64_t{1} << 16;

Vector flatten(const Matrix& m) { return m.entries(); }

std::vector<Matrix> transposes(const std::vector<Matrix>& ms) {
    std::vector<Matrix> out;
    for (const auto& m : ms) out.push_back(m.transpose());
    return out;
}

std::vector<std::size_t> nonPivots(const Subspace& w) {
    std::vector<bool> isPivot(w.ambientDim(), false);
    for (auto p : w.pivots()) isPivot[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < w.ambientDim(); ++j)
        if (!isPivot[j]) out.push_back(j);
    return out;
}

std::vector<std::size_t> seedOrder(std::size_t n, std::uint64_t seed) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        std::shuffle(order.begin(), order.end(), rng);
    }
    return order;
}

/// q^n if it does not exceed `cap`, else nullopt.
std::optional<std::uint64_t> boundedPower(std::uint64_t q, std::size_t n, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > cap / q) return std::nullopt;
        total *= q;
    }
    return total;
}

/// Calls fn on every nonzero vector whose first nonzero coordinate is 1; stops
/// early when fn returns true.
template <class Fn>
bool forEachProjectiveVector(const FieldSpec& f, std::size_t n, Fn fn) {
    const std::uint64_t q = f.characteristic();
    const std::uint64_t total = *boundedPower(q, n, kExhaustiveVectors);
    for (std::uint64_t code = 1; code < total; ++code) {
        Vector v;
        std::uint64_t c = code;
        bool leading = true, ok = true;
        for (std::size_t i = 0; i < n; ++i) {
            const auto digit = static_cast<std::int64_t>(c % q);
            c /= q;
            if (leading && digit != 0) {
                if (digit != 1) ok = false;
                leading = false;
            }
            v.emplace_back(f, digit);
        }
        if (ok && fn(v)) return true;
    }
    return false;
}

Matrix randomAlgebraElement(const GenericTuple& gt, const FieldSpec& f, std::mt19937_64& rng) {
    const std::size_t n = gt.algebraBasis.front().rows();
    Matrix a(f, n, n);
    for (const auto& b : gt.algebraBasis) a += Scalar::random(f, rng) * b;
    return a;
}

/// Irreducible submodule (possibly the whole space) reached by repeatedly taking the
/// smallest spin of a standard basis vector, falling back to findSubmodule.
Subspace minimalSubmodule(const Representation& rep, std::uint64_t seed) {
    const auto& f = rep.field();
    const std::size_t n = rep.dim();
    if (n == 1) return Subspace::full(f, 1);
    std::optional<Subspace> best;
    for (auto i : seedOrder(n, seed)) {
        Subspace s = spin(f, n, {unitVector(f, n, i)}, rep.generators());
        if (!s.isFull() && (!best || s.dim() < best->dim())) best = s;
    }
    if (!best) {
        auto found = findSubmodule(rep, seed);
        if (std::holds_alternative<IrreducibleWitness>(found)) return Subspace::full(f, n);
        best = std::get<Subspace>(found);
    }
    if (best->dim() == 1) return *best;
    return liftFromSub(*best, minimalSubmodule(restrictTo(rep, *best), seed));
}

std::vector<Subspace> compositionChain(const Representation& rep, std::uint64_t seed) {
    Subspace w = minimalSubmodule(rep, seed);
    if (w.isFull()) return {w};
    std::vector<Subspace> out{w};
    for (const auto& s : compositionChain(quotientBy(rep, w), seed)) out.push_back(liftFromQuotient(w, s));
    return out;
}

/// Either irreducible summands of k^n or a non-split submodule.
SemisimpleCertificate decompose(const Representation& rep) {
    const auto& f = rep.field();
    const std::size_t n = rep.dim();
    Subspace w = minimalSubmodule(rep, 0);
    SemisimpleCertificate cert;
    if (w.isFull()) {
        cert.semisimple = true;
        cert.summands.push_back(w);
        return cert;
    }
    auto pi = invariantProjection(rep, w);
    if (!pi) {
        cert.nonSplit = w;
        return cert;
    }
    Subspace c = Subspace::span(f, n, kernel(*pi));
    SemisimpleCertificate rest = decompose(restrictTo(rep, c));
    if (!rest.semisimple) {
        cert.nonSplit = liftFromSub(c, *rest.nonSplit);
        return cert;
    }
    cert.semisimple = true;
    cert.summands.push_back(w);
    for (const auto& s : rest.summands) cert.summands.push_back(liftFromSub(c, s));
    return cert;
}

}  // namespace

Representation::Representation(const FieldSpec& field, std::size_t n, std::vector<Matrix> generators,
                               std::optional<std::string> name)
    : field_(field), n_(n), gens_(std::move(generators)), name_(std::move(name)) {
    if (n == 0) fail(ErrorCode::InvalidArgument, "representation of dimension 0");
    if (gens_.empty()) fail(ErrorCode::InvalidArgument, "at least one generator is required");
    for (const auto& g : gens_) {
        if (!(g.field() == field)) fail(ErrorCode::FieldMismatch, "generator over a different field");
        if (g.rows() != n || g.cols() != n) fail(ErrorCode::DimensionMismatch, "generator has wrong size");
        if (determinant(g).isZero()) fail(ErrorCode::NotInvertible, "generator is singular");
    }
}

Representation Representation::conjugated(const Matrix& g) const {
    std::vector<Matrix> gens;
    for (const auto& h : gens_) gens.push_back(conjugate(g, h));
    return Representation(field_, n_, std::move(gens), name_);
}

GenericTuple envelopingBasis(const Representation& rep) {
    GenericTuple gt;
    gt.entries = rep.generators();
    for (const auto& g : rep.generators()) gt.entries.push_back(inverse(g));
    const std::size_t n = rep.dim();
    SpanBuilder span(rep.field(), n * n);
    Matrix id = Matrix::identity(rep.field(), n);
    span.add(flatten(id));
    gt.algebraBasis.push_back(id);
    std::deque<Matrix> queue{id};
    while (!queue.empty()) {
        Matrix x = std::move(queue.front());
        queue.pop_front();
        for (const auto& e : gt.entries) {
            Matrix y = e * x;
            if (span.add(flatten(y))) {
                gt.algebraBasis.push_back(y);
                queue.push_back(y);
            }
        }
    }
    return gt;
}

bool inSpan(const std::vector<Matrix>& basis, const Matrix& m) {
    SpanBuilder span(m.field(), m.rows() * m.cols());
    for (const auto& b : basis) span.add(flatten(b));
    return span.contains(flatten(m));
}

std::string methodName(IrreducibleWitness::Method m) {
    switch (m) {
        case IrreducibleWitness::Method::Dimension1: return "dimension1";
        case IrreducibleWitness::Method::Burnside: return "burnside";
        case IrreducibleWitness::Method::Norton: return "norton";
        case IrreducibleWitness::Method::Exhaustive: return "exhaustive";
    }
    return "unknown";
}

bool verifyWitness(const Representation& rep, const IrreducibleWitness& w) {
    const auto& f = rep.field();
    const std::size_t n = rep.dim();
    using M = IrreducibleWitness::Method;
    switch (w.method) {
        case M::Dimension1: return n == 1;
        case M::Burnside: return envelopingBasis(rep).algebraDim() == n * n;
        case M::Norton: {
            if (!w.element || !w.factor || !w.kernelVector || !w.dualVector) return false;
            if (!inSpan(envelopingBasis(rep).algebraBasis, *w.element)) return false;
            if (!isIrreducible(*w.factor)) return false;
            Matrix b = evaluate(*w.factor, *w.element);
            if (kernel(b).size() != static_cast<std::size_t>(w.factor->degree())) return false;
            if (isZeroVector(*w.kernelVector) || !isZeroVector(b * *w.kernelVector)) return false;
            Matrix bt = b.transpose();
            if (isZeroVector(*w.dualVector) || !isZeroVector(bt * *w.dualVector)) return false;
            return spin(f, n, {*w.kernelVector}, rep.generators()).isFull() &&
                   spin(f, n, {*w.dualVector}, transposes(rep.generators())).isFull();
        }
        case M::Exhaustive: {
            if (!f.isPrime() || !boundedPower(f.characteristic(), n, kExhaustiveVectors)) return false;
            return !forEachProjectiveVector(f, n, [&](const Vector& v) {
                return !spin(f, n, {v}, rep.generators()).isFull();
            });
        }
    }
    return false;
}

SubmoduleSearch findSubmodule(const Representation& rep, std::uint64_t seed) {
    const auto& f = rep.field();
    const std::size_t n = rep.dim();
    IrreducibleWitness witness;
    if (n == 1) return witness;
    for (std::size_t i = 0; i < n; ++i) {
        Subspace s = spin(f, n, {unitVector(f, n, i)}, rep.generators());
        if (!s.isFull()) return s;
    }
    GenericTuple gt = envelopingBasis(rep);
    if (gt.algebraDim() == n * n) {
        witness.method = IrreducibleWitness::Method::Burnside;
        return witness;
    }
    if (f.isRational() && n > kRationalDimCap)
        fail(ErrorCode::Undecided, "irreducibility over Q is only attempted for n <= 8");

    const auto gensT = transposes(rep.generators());
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t trial = 0; trial < kNortonTrials; ++trial) {
        Matrix a = randomAlgebraElement(gt, f, rng);
        for (const auto& fac : irreducibleFactors(charPoly(a), trial)) {
            Matrix b = evaluate(fac, a);
            auto ker = kernel(b);
            for (const auto& v : ker) {
                Subspace s = spin(f, n, {v}, rep.generators());
                if (!s.isFull()) return s;
            }
            if (ker.size() != static_cast<std::size_t>(fac.degree())) continue;
            Vector w = kernel(b.transpose()).front();
            Subspace st = spin(f, n, {w}, gensT);
            if (!st.isFull()) return st.annihilator();
            witness.method = IrreducibleWitness::Method::Norton;
            witness.element = a;
            witness.factor = fac;
            witness.kernelVector = ker.front();
            witness.dualVector = w;
            return witness;
        }
    }
    if (f.isPrime() && boundedPower(f.characteristic(), n, kExhaustiveVectors)) {
        std::optional<Subspace> found;
        forEachProjectiveVector(f, n, [&](const Vector& v) {
            Subspace s = spin(f, n, {v}, rep.generators());
            if (s.isFull()) return false;
            found = s;
            return true;
        });
        if (found) return *found;
        witness.method = IrreducibleWitness::Method::Exhaustive;
        return witness;
    }
    fail(ErrorCode::Undecided, "no Norton element found within the trial bound");
}

bool isIrreducible(const Representation& rep, std::uint64_t seed) {
    return std::holds_alternative<IrreducibleWitness>(findSubmodule(rep, seed));
}

Representation restrictTo(const Representation& rep, const Subspace& w) {
    if (w.isZero()) fail(ErrorCode::InvalidArgument, "restriction to the zero subspace");
    std::vector<Matrix> gens;
    for (const auto& h : rep.generators()) {
        std::vector<Vector> cols;
        for (const auto& b : w.basis()) {
            auto c = w.coordinates(h * b);
            if (!c) fail(ErrorCode::InvalidArgument, "subspace is not invariant");
            cols.push_back(std::move(*c));
        }
        gens.push_back(Matrix::fromColumns(rep.field(), cols, w.dim()));
    }
    return Representation(rep.field(), w.dim(), std::move(gens));
}

Representation quotientBy(const Representation& rep, const Subspace& w) {
    if (w.isFull()) fail(ErrorCode::InvalidArgument, "quotient by the full space");
    if (!w.isInvariant(rep.generators())) fail(ErrorCode::InvalidArgument, "subspace is not invariant");
    const auto& f = rep.field();
    const auto idx = nonPivots(w);
    std::vector<Matrix> gens;
    for (const auto& h : rep.generators()) {
        Matrix m(f, idx.size(), idx.size());
        for (std::size_t k = 0; k < idx.size(); ++k) {
            Vector r = w.reduce(h.column(idx[k]));
            for (std::size_t i = 0; i < idx.size(); ++i) m(i, k) = r[idx[i]];
        }
        gens.push_back(std::move(m));
    }
    return Representation(f, idx.size(), std::move(gens));
}

Subspace liftFromSub(const Subspace& w, const Subspace& inner) {
    std::vector<Vector> vs;
    for (const auto& x : inner.basis()) {
        Vector v = zeroVector(w.field(), w.ambientDim());
        for (std::size_t k = 0; k < x.size(); ++k) v = axpy(x[k], w.basis()[k], std::move(v));
        vs.push_back(std::move(v));
    }
    return Subspace::span(w.field(), w.ambientDim(), vs);
}

Subspace liftFromQuotient(const Subspace& w, const Subspace& inner) {
    const auto idx = nonPivots(w);
    std::vector<Vector> vs = w.basis();
    for (const auto& x : inner.basis()) {
        Vector v = zeroVector(w.field(), w.ambientDim());
        for (std::size_t k = 0; k < x.size(); ++k) v[idx[k]] = x[k];
        vs.push_back(std::move(v));
    }
    return Subspace::span(w.field(), w.ambientDim(), vs);
}

std::vector<Representation> flagFactors(const Representation& rep, const Flag& flag) {
    Cocharacter lambda = flagToCocharacter(flag);
    std::vector<Matrix> adapted;
    for (const auto& h : rep.generators()) adapted.push_back(lambda.toAdapted(h));
    std::vector<Representation> out;
    std::size_t start = 0;
    for (auto size : flag.blockSizes()) {
        std::vector<Matrix> blocks;
        for (const auto& a : adapted) blocks.push_back(a.block(start, start, size, size));
        out.emplace_back(rep.field(), size, std::move(blocks));
        start += size;
    }
    return out;
}

CompositionSeries compositionSeries(const Representation& rep, std::uint64_t seed) {
    Flag flag(rep.field(), rep.dim(), compositionChain(rep, seed));
    auto factors = flagFactors(rep, flag);
    std::vector<IrreducibleWitness> witnesses;
    for (const auto& fac : factors) {
        auto found = findSubmodule(fac, seed);
        if (!std::holds_alternative<IrreducibleWitness>(found))
            fail(ErrorCode::InternalInvariantViolation, "composition factor is reducible");
        witnesses.push_back(std::get<IrreducibleWitness>(found));
    }
    return CompositionSeries{std::move(flag), std::move(factors), std::move(witnesses)};
}

std::optional<Matrix> invariantProjection(const Representation& rep, const Subspace& w) {
    const auto& f = rep.field();
    const std::size_t n = rep.dim();
    const std::size_t unknowns = n * n;
    auto var = [n](std::size_t i, std::size_t j) { return i * n + j; };
    std::vector<Vector> rows;
    Vector rhs;
    auto newRow = [&]() -> Vector& {
        rows.push_back(zeroVector(f, unknowns));
        rhs.push_back(Scalar::zero(f));
        return rows.back();
    };
    for (const auto& h : rep.generators()) {
        // (pi h - h pi)(i, j) = 0
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vector& r = newRow();
                for (std::size_t k = 0; k < n; ++k) {
                    r[var(i, k)] += h(k, j);
                    r[var(k, j)] -= h(i, k);
                }
            }
    }
    for (const auto& b : w.basis())
        for (std::size_t i = 0; i < n; ++i) {
            Vector& r = newRow();
            for (std::size_t j = 0; j < n; ++j) r[var(i, j)] = b[j];
            rhs.back() = b[i];
        }
    const Subspace ann = w.annihilator();
    for (const auto& a : ann.basis())
        for (std::size_t j = 0; j < n; ++j) {
            Vector& r = newRow();
            for (std::size_t i = 0; i < n; ++i) r[var(i, j)] = a[i];
        }
    auto x = solveLinear(Matrix::fromRows(f, rows, unknowns), rhs);
    if (!x) return std::nullopt;
    Matrix pi(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) pi(i, j) = (*x)[var(i, j)];
    return pi;
}

SemisimpleCertificate isSemisimple(const Representation& rep) { return decompose(rep); }

std::optional<Matrix> moduleIso(const Representation& a, const Representation& b, std::uint64_t seed) {
    if (!(a.field() == b.field())) fail(ErrorCode::FieldMismatch, "representations over different fields");
    if (a.generators().size() != b.generators().size())
        fail(ErrorCode::GeneratorCountMismatch, "generator lists are not aligned");
    if (a.dim() != b.dim()) return std::nullopt;
    ConjugationOptions opts;
    opts.seed = seed;
    auto res = solveConjugating(a.generators(), b.generators(), opts);
    if (res.g) return res.g;
    if (!res.decided) fail(ErrorCode::Undecided, "isomorphism search gave up: " + res.note);
    return std::nullopt;
}

IsoClassMultiset isoClassMultiset(const CompositionSeries& series) {
    IsoClassMultiset out;
    for (const auto& fac : series.factors) {
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const IsoClass& c) { return moduleIso(c.representative, fac).has_value(); });
        if (it != out.end())
            ++it->multiplicity;
        else
            out.push_back(IsoClass{fac, 1});
    }
    return out;
}

bool sameIsoClasses(const IsoClassMultiset& a, const IsoClassMultiset& b) {
    if (a.size() != b.size()) return false;
    for (const auto& c : a) {
        auto it = std::find_if(b.begin(), b.end(), [&](const IsoClass& d) {
            return moduleIso(c.representative, d.representative).has_value();
        });
        if (it == b.end() || it->multiplicity != c.multiplicity) return false;
    }
    return true;
}

std::vector<Matrix> generatedGroup(const std::vector<Matrix>& generators, std::size_t maxOrder) {
    if (generators.empty()) fail(ErrorCode::InvalidArgument, "no generators");
    const auto& f = generators.front().field();
    if (!f.isPrime()) fail(ErrorCode::InvalidArgument, "group enumeration needs a finite field");
    Matrix id = Matrix::identity(f, generators.front().rows());
    std::vector<Matrix> elems{id};
    std::unordered_set<std::string> seen{id.encode()};
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto& g : generators) {
            Matrix y = g * elems[i];
            if (seen.insert(y.encode()).second) {
                if (elems.size() >= maxOrder) fail(ErrorCode::ResourceBoundExceeded, "group exceeds the order bound");
                elems.push_back(std::move(y));
            }
        }
    }
    return elems;
}

}  // namespace ssred

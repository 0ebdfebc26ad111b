#include "ssred/gitoracle/gitoracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <unordered_set>

#include "ssred/error.hpp"

namespace ssred::oracle {

namespace {

constexpr std::uint64_t kMaxCandidates = std::uint64_t{1} << 26;
constexpr std::uint64_t kMaxFlagSpace = std::uint64_t{1} << 14;

std::uint64_t memoryCapBytes() {
    std::uint64_t mb = 1024;
    if (const char* env = std::getenv("SSRED_MAX_MEMORY_MB")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0) mb = v;
    }
    return mb * 1024 * 1024;
}

void checkMemory(std::uint64_t bytes, const char* what) {
    if (bytes > memoryCapBytes())
        fail(ErrorCode::ResourceBoundExceeded, std::string(what) + " exceeds SSRED_MAX_MEMORY_MB");
}

std::uint32_t powMod(std::uint32_t a, std::uint32_t e, std::uint32_t q) {
    std::uint64_t r = 1, b = a % q;
    while (e) {
        if (e & 1) r = r * b % q;
        b = b * b % q;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

std::uint32_t invMod(std::uint32_t a, std::uint32_t q) { return powMod(a, q - 2, q); }

/// Vectors of length n packed base q, first entry most significant.
Code packVector(const std::vector<std::uint32_t>& v, std::uint32_t q) {
    Code c = 0;
    for (auto x : v) c = c * q + x;
    return c;
}

std::vector<std::uint32_t> applyToVector(const Packed& m, const std::vector<std::uint32_t>& v, std::size_t n,
                                         std::uint32_t q) {
    std::vector<std::uint32_t> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t s = 0;
        for (std::size_t j = 0; j < n; ++j) s += static_cast<std::uint64_t>(m[i * n + j]) * v[j];
        out[i] = static_cast<std::uint32_t>(s % q);
    }
    return out;
}

}  // namespace

std::size_t TupleHash::operator()(const Tuple& t) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto c : t) h = (h ^ std::hash<Code>{}(c)) * 1099511628211ULL;
    return h;
}

std::uint64_t glOrder(std::size_t n, std::uint32_t q) {
    std::uint64_t qn = 1;
    for (std::size_t i = 0; i < n; ++i) qn *= q;
    std::uint64_t order = 1, qi = 1;
    for (std::size_t i = 0; i < n; ++i) {
        order *= qn - qi;
        qi *= q;
    }
    return order;
}

std::optional<std::size_t> GroupTable::indexOf(Code c) const {
    auto it = index_.find(c);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Code GroupTable::encode(const Packed& m) const {
    Code c = 0;
    for (auto x : m) c = c * q_ + x;
    return c;
}

Packed GroupTable::decode(Code c) const {
    Packed m(n_ * n_);
    for (std::size_t k = m.size(); k-- > 0;) {
        m[k] = static_cast<std::uint32_t>(c % q_);
        c /= q_;
    }
    return m;
}

Packed GroupTable::multiply(const Packed& a, const Packed& b) const {
    Packed c(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            std::uint64_t s = 0;
            for (std::size_t k = 0; k < n_; ++k) s += static_cast<std::uint64_t>(a[i * n_ + k]) * b[k * n_ + j];
            c[i * n_ + j] = static_cast<std::uint32_t>(s % q_);
        }
    return c;
}

std::optional<Packed> GroupTable::invert(const Packed& m) const {
    const std::size_t n = n_, w = 2 * n;
    std::vector<std::uint64_t> aug(n * w, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i * w + j] = m[i * n + j];
        aug[i * w + n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && aug[piv * w + col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        for (std::size_t j = 0; j < w; ++j) std::swap(aug[col * w + j], aug[piv * w + j]);
        const std::uint64_t inv = invMod(static_cast<std::uint32_t>(aug[col * w + col]), q_);
        for (std::size_t j = 0; j < w; ++j) aug[col * w + j] = aug[col * w + j] * inv % q_;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || aug[r * w + col] == 0) continue;
            const std::uint64_t factor = aug[r * w + col];
            for (std::size_t j = 0; j < w; ++j)
                aug[r * w + j] = (aug[r * w + j] + (q_ - factor) * aug[col * w + j]) % q_;
        }
    }
    Packed out(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i * n + j] = static_cast<std::uint32_t>(aug[i * w + n + j]);
    return out;
}

Code GroupTable::conjugate(std::size_t i, Code m) const {
    return encode(multiply(multiply(packed_[i], decode(m)), packed_[inverse_[i]]));
}

Tuple GroupTable::conjugate(std::size_t i, const Tuple& t) const {
    Tuple out;
    out.reserve(t.size());
    for (auto c : t) out.push_back(conjugate(i, c));
    return out;
}

Packed GroupTable::fromMatrix(const Matrix& m) const {
    if (!m.field().isPrime() || m.field().characteristic() != q_ || m.rows() != n_ || m.cols() != n_)
        fail(ErrorCode::FieldMismatch, "matrix does not belong to this group table");
    Packed out;
    for (const auto& s : m.entries()) out.push_back(s.residue());
    return out;
}

Matrix GroupTable::toMatrix(const Packed& p) const {
    const FieldSpec f = FieldSpec::prime(q_);
    Matrix m(f, n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m(i, j) = Scalar(f, static_cast<std::int64_t>(p[i * n_ + j]));
    return m;
}

GroupTable enumerateGroup(std::size_t n, std::uint32_t q, std::size_t maxOrder) {
    if (n == 0 || !isPrimeNumber(q)) fail(ErrorCode::InvalidArgument, "group table needs n >= 1 and prime q");
    std::uint64_t candidates = 1;
    for (std::size_t i = 0; i < n * n; ++i) {
        if (candidates > kMaxCandidates / q) fail(ErrorCode::ResourceBoundExceeded, "matrix space too large to enumerate");
        candidates *= q;
    }
    const std::uint64_t order = glOrder(n, q);
    if (order > maxOrder) fail(ErrorCode::ResourceBoundExceeded, "group order exceeds the enumeration bound");
    checkMemory(order * (n * n * 4 + 96), "group table");

    GroupTable t;
    t.n_ = n;
    t.q_ = q;
    t.elements_.reserve(order);
    for (Code c = 0; c < candidates; ++c) {
        Packed m = t.decode(c);
        if (!t.invert(m)) continue;
        t.index_.emplace(c, t.elements_.size());
        t.elements_.push_back(c);
        t.packed_.push_back(std::move(m));
    }
    if (t.elements_.size() != order) fail(ErrorCode::InternalInvariantViolation, "group order mismatch");
    t.inverse_.resize(order);
    for (std::size_t i = 0; i < order; ++i) t.inverse_[i] = t.index_.at(t.encode(*t.invert(t.packed_[i])));
    return t;
}

Flag FlagSet::toFlag(const OracleFlag& f) const {
    const FieldSpec field = FieldSpec::prime(q);
    std::vector<Subspace> steps;
    for (auto idx : f.steps) {
        std::vector<Vector> vs;
        for (const auto& row : subspaces[idx].rows) {
            Vector v;
            for (auto x : row) v.emplace_back(field, static_cast<std::int64_t>(x));
            vs.push_back(std::move(v));
        }
        steps.push_back(Subspace::span(field, n, vs));
    }
    return Flag(field, n, std::move(steps));
}

FlagSet enumerateFlags(std::size_t n, std::uint32_t q) {
    std::uint64_t qn = 1;
    for (std::size_t i = 0; i < n; ++i) {
        qn *= q;
        if (qn > kMaxFlagSpace) fail(ErrorCode::ResourceBoundExceeded, "q^n too large for flag enumeration");
    }
    FlagSet fs;
    fs.n = n;
    fs.q = q;
    // Reduced echelon forms: choose pivots, then fill free positions right of each
    // pivot that are not pivot columns.
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<bool> choose(n, false);
        std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(k), true);
        do {
            std::vector<std::size_t> pivots;
            for (std::size_t j = 0; j < n; ++j)
                if (choose[j]) pivots.push_back(j);
            std::vector<std::pair<std::size_t, std::size_t>> free;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = pivots[i] + 1; j < n; ++j)
                    if (!choose[j]) free.emplace_back(i, j);
            std::uint64_t count = 1;
            for (std::size_t i = 0; i < free.size(); ++i) count *= q;
            for (std::uint64_t code = 0; code < count; ++code) {
                OracleSubspace s;
                s.rows.assign(k, Packed(n, 0));
                for (std::size_t i = 0; i < k; ++i) s.rows[i][pivots[i]] = 1;
                std::uint64_t c = code;
                for (const auto& [i, j] : free) {
                    s.rows[i][j] = static_cast<std::uint32_t>(c % q);
                    c /= q;
                }
                std::uint64_t combos = 1;
                for (std::size_t i = 0; i < k; ++i) combos *= q;
                for (std::uint64_t cc = 0; cc < combos; ++cc) {
                    std::vector<std::uint32_t> v(n, 0);
                    std::uint64_t x = cc;
                    for (std::size_t i = 0; i < k; ++i) {
                        const auto coef = static_cast<std::uint32_t>(x % q);
                        x /= q;
                        for (std::size_t j = 0; j < n; ++j) v[j] = (v[j] + coef * s.rows[i][j]) % q;
                    }
                    s.members.insert(packVector(v, q));
                }
                fs.subspaces.push_back(std::move(s));
            }
        } while (std::prev_permutation(choose.begin(), choose.end()));
    }
    std::stable_sort(fs.subspaces.begin(), fs.subspaces.end(),
                     [](const OracleSubspace& a, const OracleSubspace& b) { return a.rows.size() < b.rows.size(); });
    const std::size_t full = fs.subspaces.size() - 1;
    fs.flags.push_back(OracleFlag{{full}});
    std::vector<std::size_t> chain;
    std::function<void(std::size_t)> extend = [&](std::size_t from) {
        for (std::size_t i = from; i < full; ++i) {
            const auto& s = fs.subspaces[i];
            if (!chain.empty()) {
                const auto& prev = fs.subspaces[chain.back()];
                if (s.rows.size() <= prev.rows.size() ||
                    !std::includes(s.members.begin(), s.members.end(), prev.members.begin(), prev.members.end()))
                    continue;
            }
            chain.push_back(i);
            OracleFlag f{chain};
            f.steps.push_back(full);
            fs.flags.push_back(std::move(f));
            extend(i + 1);
            chain.pop_back();
        }
    };
    extend(0);
    return fs;
}

Oracle::Oracle(const GroupTable& table) : table_(table), flags_(enumerateFlags(table.n(), table.q())) {}

Tuple Oracle::tupleOf(const std::vector<Matrix>& ms) const {
    Tuple t;
    for (const auto& m : ms) t.push_back(table_.encode(table_.fromMatrix(m)));
    return t;
}

Tuple Oracle::genericTuple(const Representation& rep) const {
    Tuple t = tupleOf(rep.generators());
    const std::size_t count = t.size();
    for (std::size_t i = 0; i < count; ++i) {
        auto inv = table_.invert(table_.decode(t[i]));
        if (!inv) fail(ErrorCode::NotInvertible, "generator is singular");
        t.push_back(table_.encode(*inv));
    }
    return t;
}

std::vector<Tuple> Oracle::orbit(const Tuple& t) const {
    checkMemory(table_.order() * (t.size() * 8 + 96), "orbit");
    std::unordered_set<Tuple, TupleHash> seen;
    std::vector<Tuple> out;
    for (std::size_t i = 0; i < table_.order(); ++i) {
        Tuple c = table_.conjugate(i, t);
        if (seen.insert(c).second) out.push_back(std::move(c));
    }
    return out;
}

OrbitId Oracle::orbitId(const Tuple& t) const {
    auto members = orbit(t);
    return *std::min_element(members.begin(), members.end());
}

bool Oracle::preserves(const Tuple& t, const OracleFlag& f) const {
    const std::size_t n = table_.n();
    const std::uint32_t q = table_.q();
    for (auto c : t) {
        const Packed m = table_.decode(c);
        for (auto idx : f.steps) {
            const auto& s = flags_.subspaces[idx];
            for (const auto& row : s.rows)
                if (!s.members.count(packVector(applyToVector(m, row, n, q), q))) return false;
        }
    }
    return true;
}

Tuple Oracle::limit(const Tuple& t, const OracleFlag& f) const {
    const std::size_t n = table_.n();
    // Adapted basis: for each step, echelon rows whose leading column is new.
    Packed basis(n * n, 0);
    std::vector<std::size_t> blockOf;
    std::vector<bool> used(n, false);
    std::size_t col = 0;
    for (std::size_t b = 0; b < f.steps.size(); ++b) {
        for (const auto& row : flags_.subspaces[f.steps[b]].rows) {
            std::size_t lead = 0;
            while (row[lead] == 0) ++lead;
            if (used[lead]) continue;
            used[lead] = true;
            for (std::size_t i = 0; i < n; ++i) basis[i * n + col] = row[i];
            blockOf.push_back(b);
            ++col;
        }
    }
    const Packed basisInv = *table_.invert(basis);
    Tuple out;
    for (auto c : t) {
        Packed a = table_.multiply(table_.multiply(basisInv, table_.decode(c)), basis);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (blockOf[i] > blockOf[j] && a[i * n + j] != 0)
                    fail(ErrorCode::LimitDoesNotExist, "tuple does not preserve the flag");
                if (blockOf[i] != blockOf[j]) a[i * n + j] = 0;
            }
        out.push_back(table_.encode(table_.multiply(table_.multiply(basis, a), basisInv)));
    }
    return out;
}

bool Oracle::isCocharClosed(const Tuple& t) const {
    auto members = orbit(t);
    OrbitId id = *std::min_element(members.begin(), members.end());
    if (auto it = closedMemo_.find(id); it != closedMemo_.end()) return it->second;
    std::unordered_set<Tuple, TupleHash> inOrbit(members.begin(), members.end());
    bool closed = true;
    for (const auto& f : flags_.flags) {
        if (f.steps.size() == 1 || !preserves(t, f)) continue;
        if (!inOrbit.count(limit(t, f))) {
            closed = false;
            break;
        }
    }
    closedMemo_[id] = closed;
    return closed;
}

std::set<OrbitId> Oracle::reachable(const Tuple& t, bool closedOnly) const {
    std::set<OrbitId> out;
    std::set<Tuple> limits;
    for (const auto& f : flags_.flags)
        if (preserves(t, f)) limits.insert(limit(t, f));
    for (const auto& l : limits)
        if (!closedOnly || isCocharClosed(l)) out.insert(orbitId(l));
    return out;
}

std::set<OrbitId> Oracle::accessibleClosedOrbits(const Tuple& t) const { return reachable(t, true); }
std::set<OrbitId> Oracle::accessibleOrbits(const Tuple& t) const { return reachable(t, false); }

bool Oracle::flagsSuffice(const Tuple& t, int height) const {
    const std::size_t n = table_.n();
    if (n > 2 || table_.q() != 2) fail(ErrorCode::InvalidArgument, "flag sufficiency check is for n <= 2, q = 2");
    std::set<OrbitId> viaCochar;
    std::vector<int> w(n, -height);
    for (;;) {
        for (std::size_t gi = 0; gi < table_.order(); ++gi) {
            const Packed& g = table_.packed(gi);
            const Packed& gInv = table_.packed(table_.inverseOf(gi));
            Tuple lim;
            bool exists = true;
            for (auto c : t) {
                // lambda(a) m lambda(a)^-1 has entries a^(w_i - w_j) A_ij with A = g^-1 m g.
                Packed a = table_.multiply(table_.multiply(gInv, table_.decode(c)), g);
                for (std::size_t i = 0; i < n && exists; ++i)
                    for (std::size_t j = 0; j < n; ++j) {
                        if (w[i] < w[j] && a[i * n + j] != 0) exists = false;
                        if (w[i] != w[j]) a[i * n + j] = 0;
                    }
                if (!exists) break;
                lim.push_back(table_.encode(table_.multiply(table_.multiply(g, a), gInv)));
            }
            if (exists) viaCochar.insert(orbitId(lim));
        }
        std::size_t k = 0;
        while (k < n && w[k] == height) w[k++] = -height;
        if (k == n) break;
        ++w[k];
    }
    return viaCochar == accessibleOrbits(t);
}

std::vector<std::size_t> Oracle::generatedSubgroup(const Tuple& gens) const {
    std::vector<std::size_t> out;
    std::vector<bool> seen(table_.order(), false);
    Packed e(table_.n() * table_.n(), 0);
    for (std::size_t i = 0; i < table_.n(); ++i) e[i * table_.n() + i] = 1;
    const std::size_t id = *table_.indexOf(table_.encode(e));
    seen[id] = true;
    out.push_back(id);
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (auto g : gens) {
            auto gi = table_.indexOf(g);
            if (!gi) fail(ErrorCode::InvalidArgument, "generator is not in the group");
            auto prod = *table_.indexOf(table_.encode(table_.multiply(table_.packed(*gi), table_.packed(out[k]))));
            if (!seen[prod]) {
                seen[prod] = true;
                out.push_back(prod);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> Oracle::normalizer(const Tuple& gens) const {
    std::unordered_set<Code> members;
    for (auto i : generatedSubgroup(gens)) members.insert(table_.elements()[i]);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < table_.order(); ++i) {
        bool ok = true;
        for (auto g : gens)
            if (!members.count(table_.conjugate(i, g))) {
                ok = false;
                break;
            }
        if (ok) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> Oracle::centralizer(const Tuple& gens) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < table_.order(); ++i) {
        bool ok = true;
        for (auto g : gens)
            if (table_.conjugate(i, g) != g) {
                ok = false;
                break;
            }
        if (ok) out.push_back(i);
    }
    return out;
}

bool oracleGcr(const Representation& rep, std::size_t maxGroupOrder) {
    if (!rep.field().isPrime()) fail(ErrorCode::InvalidArgument, "the oracle needs a finite field");
    GroupTable table = enumerateGroup(rep.dim(), rep.field().characteristic(), maxGroupOrder);
    Oracle o(table);
    return o.isCocharClosed(o.genericTuple(rep));
}

}  // namespace ssred::oracle

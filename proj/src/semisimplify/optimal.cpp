#include <algorithm>
#include <map>
#include <set>

#include "ssred/error.hpp"
#include "ssred/semisimplify/ssred.hpp"

namespace ssred {

namespace {

constexpr std::uint64_t kExhaustiveLattice = std::uint64_t{1} << 14;

std::optional<std::uint64_t> boundedPower(std::uint64_t q, std::size_t e, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (total > cap / q) return std::nullopt;
        total *= q;
    }
    return total;
}

class LatticeBuilder {
public:
    LatticeBuilder(const FieldSpec& f, std::size_t n, std::size_t cap) : f_(f), n_(n), cap_(cap) {
        add(Subspace(f, n));
        add(Subspace::full(f, n));
    }
    void add(const Subspace& s) {
        if (!seen_.insert(s.encode()).second) return;
        if (items_.size() >= cap_) fail(ErrorCode::SearchSpaceExceeded, "invariant subspace lattice too large");
        items_.push_back(s);
    }
    void closeUnder(bool intersections) {
        for (std::size_t i = 0; i < items_.size(); ++i)
            for (std::size_t j = 0; j < i; ++j) {
                add(items_[i].sum(items_[j]));
                if (intersections) add(items_[i].intersect(items_[j]));
            }
    }
    std::vector<Subspace> sorted() const {
        auto out = items_;
        std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) {
            return a.dim() != b.dim() ? a.dim() < b.dim() : a.encode() < b.encode();
        });
        return out;
    }

private:
    FieldSpec f_;
    std::size_t n_;
    std::size_t cap_;
    std::vector<Subspace> items_;
    std::set<std::string> seen_;
};

void extendChains(const std::vector<Subspace>& proper, std::vector<Subspace>& chain, std::size_t from,
                  std::vector<Flag>& out, const FieldSpec& f, std::size_t n, std::size_t cap) {
    for (std::size_t i = from; i < proper.size(); ++i) {
        if (!chain.empty() && (proper[i].dim() <= chain.back().dim() || !proper[i].contains(chain.back()))) continue;
        chain.push_back(proper[i]);
        if (out.size() >= cap) fail(ErrorCode::SearchSpaceExceeded, "too many invariant flags");
        out.push_back(Flag::fromChain(f, n, chain));
        extendChains(proper, chain, i + 1, out, f, n, cap);
        chain.pop_back();
    }
}

/// Strictly decreasing tuples of length r with entries in [1, B], lexicographically
/// largest first.
void weightTuples(std::size_t r, std::int64_t top, std::vector<std::int64_t>& cur,
                  std::vector<std::vector<std::int64_t>>& out) {
    if (cur.size() == r) {
        out.push_back(cur);
        return;
    }
    const auto remaining = static_cast<std::int64_t>(r - cur.size());
    for (std::int64_t w = top; w >= remaining; --w) {
        cur.push_back(w);
        weightTuples(r, w - 1, cur, out);
        cur.pop_back();
    }
}

/// Bitmasks over block pairs (a < b) carried by the algebra, one per Levi choice.
std::vector<std::uint64_t> carriedMasks(const Flag& flag, const std::vector<Matrix>& algebra,
                                        const OptimalFlagOptions& options) {
    const auto& f = flag.field();
    const std::size_t n = flag.ambientDim();
    const Cocharacter base = flagToCocharacter(flag);
    std::vector<std::size_t> blockOf;
    const auto sizes = flag.blockSizes();
    const std::size_t r = sizes.size();
    for (std::size_t b = 0; b < r; ++b) blockOf.insert(blockOf.end(), sizes[b], b);
    std::vector<Matrix> adapted;
    for (const auto& a : algebra) adapted.push_back(base.toAdapted(a));

    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (blockOf[i] < blockOf[j]) slots.emplace_back(i, j);
    std::uint64_t count = 1;
    if (f.isPrime()) {
        if (auto c = boundedPower(f.characteristic(), slots.size(), options.maxUnipotent)) count = *c;
    }

    std::set<std::uint64_t> masks;
    for (std::uint64_t code = 0; code < count; ++code) {
        Matrix u = Matrix::identity(f, n);
        std::uint64_t c = code;
        if (count > 1)
            for (const auto& [i, j] : slots) {
                u(i, j) = Scalar(f, static_cast<std::int64_t>(c % f.characteristic()));
                c /= f.characteristic();
            }
        const Matrix uInv = inverse(u);
        std::uint64_t mask = 0;
        for (const auto& a : adapted) {
            Matrix x = uInv * a * u;
            for (const auto& [i, j] : slots)
                if (!x(i, j).isZero()) mask |= std::uint64_t{1} << (blockOf[i] * r + blockOf[j]);
        }
        masks.insert(mask);
    }
    return {masks.begin(), masks.end()};
}

}  // namespace

std::vector<Subspace> invariantSubspaceLattice(const Representation& rep, std::size_t cap) {
    const auto& f = rep.field();
    const std::size_t n = rep.dim();
    LatticeBuilder lattice(f, n, cap);
    auto addSpin = [&](const Vector& v) {
        if (!isZeroVector(v)) lattice.add(spin(f, n, {v}, rep.generators()));
    };
    const auto total = f.isPrime() ? boundedPower(f.characteristic(), n, kExhaustiveLattice) : std::nullopt;
    if (total) {
        // Every submodule is a sum of cyclic submodules.
        for (std::uint64_t code = 1; code < *total; ++code) {
            Vector v;
            std::uint64_t c = code;
            for (std::size_t i = 0; i < n; ++i) {
                v.emplace_back(f, static_cast<std::int64_t>(c % f.characteristic()));
                c /= f.characteristic();
            }
            addSpin(v);
        }
        lattice.closeUnder(false);
        return lattice.sorted();
    }
    for (std::size_t i = 0; i < n; ++i) addSpin(unitVector(f, n, i));
    const CompositionSeries series = compositionSeries(rep);
    for (const auto& s : series.flag.steps()) lattice.add(s);
    std::vector<Matrix> gensT;
    for (const auto& g : rep.generators()) gensT.push_back(g.transpose());
    const GenericTuple gt = envelopingBasis(rep);
    for (const auto& a : gt.algebraBasis) {
        for (const auto& fac : irreducibleFactors(charPoly(a))) {
            Matrix b = evaluate(fac, a);
            for (const auto& v : kernel(b)) addSpin(v);
            for (const auto& w : kernel(b.transpose())) lattice.add(spin(f, n, {w}, gensT).annihilator());
        }
    }
    lattice.closeUnder(true);
    return lattice.sorted();
}

OptimalFlagReport optimalFlag(const Representation& rep, const OptimalFlagOptions& options) {
    if (options.maxWeightHeight < 2) fail(ErrorCode::InvalidArgument, "weight height must be at least 2");
    if (isGcrOverK(rep).semisimple)
        fail(ErrorCode::PreconditionNotDestabilizable, "input is completely reducible; nothing to destabilize");
    const auto& f = rep.field();
    const std::size_t n = rep.dim();

    std::vector<Subspace> proper;
    for (const auto& s : invariantSubspaceLattice(rep))
        if (!s.isZero() && !s.isFull()) proper.push_back(s);
    std::vector<Flag> flags;
    std::vector<Subspace> chain;
    extendChains(proper, chain, 0, flags, f, n, options.maxFlags);
    std::sort(flags.begin(), flags.end(), [](const Flag& a, const Flag& b) { return a.encode() < b.encode(); });

    const auto algebra = envelopingBasis(rep).algebraBasis;
    OptimalFlagReport report;
    report.searchBound = options.maxWeightHeight;
    report.flagsExamined = flags.size();
    std::optional<Rational> best;
    for (const auto& flag : flags) {
        const std::size_t r = flag.length();
        if (static_cast<std::int64_t>(r) > options.maxWeightHeight) continue;
        const Cocharacter base = flagToCocharacter(flag);
        // The limit depends only on the flag. A semisimple limit of a non-semisimple
        // input is never conjugate to it, so these flags all destabilize.
        Representation limit(f, n, cLambda(rep.generators(), base));
        if (!isSemisimple(limit).semisimple) continue;

        const auto masks = carriedMasks(flag, algebra, options);
        std::vector<std::vector<std::int64_t>> tuples;
        std::vector<std::int64_t> cur;
        weightTuples(r, options.maxWeightHeight, cur, tuples);
        std::set<std::vector<std::int64_t>> seenCanonical;
        std::optional<FlagCandidate> flagBest;
        for (const auto& w : tuples) {
            const Cocharacter lambda = flagToCocharacter(flag, w);
            auto canon = lambda.canonicalWeights();
            if (!seenCanonical.insert(canon).second) continue;
            std::vector<std::int64_t> blockCanon;
            std::size_t pos = 0;
            for (auto size : flag.blockSizes()) {
                blockCanon.push_back(canon[pos]);
                pos += size;
            }
            std::int64_t bestGap = 0;
            for (auto mask : masks) {
                if (mask == 0) {
                    bestGap = 0;  // H lies in a Levi subgroup: no degeneration along this flag.
                    break;
                }
                std::int64_t gap = -1;
                for (std::size_t a = 0; a < r; ++a)
                    for (std::size_t b = a + 1; b < r; ++b)
                        if (mask >> (a * r + b) & 1) {
                            const std::int64_t d = blockCanon[a] - blockCanon[b];
                            gap = gap < 0 ? d : std::min(gap, d);
                        }
                bestGap = std::max(bestGap, gap);
            }
            if (bestGap <= 0) break;
            Integer norm = 0;
            for (auto c : canon) norm += Integer(c) * c;
            Rational measure(Integer(bestGap) * bestGap, norm);
            if (!flagBest || measure > flagBest->measure)
                flagBest = FlagCandidate{flag, w, canon, measure};
        }
        if (!flagBest) continue;
        if (!best || flagBest->measure > *best) best = flagBest->measure;
        report.perFlag.push_back(*flagBest);
    }
    if (!best) fail(ErrorCode::InternalInvariantViolation, "no admissible destabilizing flag found");
    report.measure = *best;
    for (const auto& c : report.perFlag)
        if (c.measure == *best) {
            report.argmax.push_back(c);
            report.argmaxFlags.push_back(c.flag);
        }
    return report;
}

}  // namespace ssred

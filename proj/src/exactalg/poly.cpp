#include "ssred/exactalg/poly.hpp"

#include <algorithm>
#include <random>

namespace ssred {

Poly::Poly(const FieldSpec& field, std::vector<Scalar> coeffs) : field_(field), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (!(c.field() == field_)) fail(ErrorCode::FieldMismatch, "polynomial coefficient");
    trim();
}

Poly::Poly(const FieldSpec& field, std::initializer_list<std::int64_t> coeffs) : field_(field) {
    for (auto c : coeffs) c_.emplace_back(field, c);
    trim();
}

Poly Poly::constant(const Scalar& c) { return Poly(c.field(), std::vector<Scalar>{c}); }

Poly Poly::x(const FieldSpec& field) { return Poly(field, {0, 1}); }

void Poly::trim() {
    while (!c_.empty() && c_.back().isZero()) c_.pop_back();
}

Scalar Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar::zero(field_); }

Scalar Poly::leading() const {
    if (c_.empty()) fail(ErrorCode::InvalidArgument, "leading coefficient of zero polynomial");
    return c_.back();
}

bool Poly::isMonic() const { return !c_.empty() && c_.back().isOne(); }

Poly Poly::monic() const {
    if (c_.empty()) return *this;
    return leading().inverse() * *this;
}

Poly Poly::derivative() const {
    std::vector<Scalar> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(Scalar(field_, static_cast<std::int64_t>(i)) * c_[i]);
    return Poly(field_, std::move(d));
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (!(field_ == rhs.field_)) fail(ErrorCode::FieldMismatch, "polynomial sum");
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), Scalar::zero(field_));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (!(field_ == rhs.field_)) fail(ErrorCode::FieldMismatch, "polynomial difference");
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), Scalar::zero(field_));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (!(a.field_ == b.field_)) fail(ErrorCode::FieldMismatch, "polynomial product");
    if (a.isZero() || b.isZero()) return Poly(a.field_);
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar::zero(a.field_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].isZero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(a.field_, std::move(c));
}

Poly operator*(const Scalar& s, Poly p) {
    for (auto& c : p.c_) c *= s;
    p.trim();
    return p;
}

std::string Poly::toString() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k].isZero()) continue;
        if (!out.empty()) out += " + ";
        std::string coef = c_[k].toString();
        if (k == 0) {
            out += coef;
        } else {
            if (!c_[k].isOne()) out += "(" + coef + ")*";
            out += k == 1 ? "x" : "x^" + std::to_string(k);
        }
    }
    return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.isZero()) fail(ErrorCode::InvalidArgument, "polynomial division by zero");
    const FieldSpec& field = a.field();
    if (a.degree() < b.degree()) return {Poly(field), a};
    std::vector<Scalar> rem = a.coeffs();
    std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), Scalar::zero(field));
    const Scalar lcInv = b.leading().inverse();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    for (std::size_t k = quot.size(); k-- > 0;) {
        Scalar q = rem[k + db] * lcInv;
        quot[k] = q;
        if (q.isZero()) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs()[j];
    }
    rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(db), rem.end());
    return {Poly(field, std::move(quot)), Poly(field, std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(Poly a, Poly b) {
    while (!b.isZero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Bezout extendedGcd(const Poly& a, const Poly& b) {
    const FieldSpec& field = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(Scalar::one(field)), s1(field);
    Poly t0(field), t1 = Poly::constant(Scalar::one(field));
    while (!r1.isZero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.isZero()) return {r0, s0, t0};
    Scalar inv = r0.leading().inverse();
    return {inv * r0, inv * s0, inv * t0};
}

Poly powMod(const Poly& base, const Integer& exponent, const Poly& modulus) {
    Poly result = Poly::constant(Scalar::one(base.field())) % modulus;
    if (exponent == 0) return result;
    Poly b = base % modulus;
    const std::size_t bits = boost::multiprecision::msb(exponent) + 1;
    for (std::size_t i = bits; i-- > 0;) {
        result = (result * result) % modulus;
        if (boost::multiprecision::bit_test(exponent, static_cast<unsigned>(i))) result = (result * b) % modulus;
    }
    return result;
}

Poly charPoly(const Matrix& m) {
    if (!m.isSquare()) fail(ErrorCode::DimensionMismatch, "characteristic polynomial of non-square matrix");
    const FieldSpec& field = m.field();
    const std::size_t n = m.rows();
    Matrix h = m;
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t pick = j + 1;
        while (pick < n && h(pick, j).isZero()) ++pick;
        if (pick == n) continue;
        if (pick != j + 1) {
            for (std::size_t c = 0; c < n; ++c) std::swap(h(pick, c), h(j + 1, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(h(r, pick), h(r, j + 1));
        }
        Scalar inv = h(j + 1, j).inverse();
        for (std::size_t k = j + 2; k < n; ++k) {
            if (h(k, j).isZero()) continue;
            Scalar u = h(k, j) * inv;
            for (std::size_t c = 0; c < n; ++c) h(k, c) -= u * h(j + 1, c);
            for (std::size_t r = 0; r < n; ++r) h(r, j + 1) += u * h(r, k);
        }
    }
    std::vector<Poly> p;
    p.push_back(Poly::constant(Scalar::one(field)));
    const Poly x = Poly::x(field);
    for (std::size_t k = 1; k <= n; ++k) {
        Poly next = (x - Poly::constant(h(k - 1, k - 1))) * p[k - 1];
        Scalar t = Scalar::one(field);
        for (std::size_t i = 1; i < k; ++i) {
            t *= h(k - i, k - i - 1);
            next -= (t * h(k - i - 1, k - 1)) * p[k - i - 1];
        }
        p.push_back(std::move(next));
    }
    return p[n];
}

Matrix evaluate(const Poly& f, const Matrix& m) {
    if (!m.isSquare()) fail(ErrorCode::DimensionMismatch, "polynomial of non-square matrix");
    const std::size_t n = m.rows();
    Matrix acc(m.field(), n, n);
    for (std::size_t k = f.coeffs().size(); k-- > 0;) {
        acc = acc * m;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += f.coeffs()[k];
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Factorization over F_p

namespace {

bool polyLess(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t k = a.coeffs().size(); k-- > 0;) {
        std::string sa = a.coeffs()[k].toString(), sb = b.coeffs()[k].toString();
        if (sa != sb) return sa.size() != sb.size() ? sa.size() < sb.size() : sa < sb;
    }
    return false;
}

Poly exactQuotient(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.isZero()) fail(ErrorCode::InternalInvariantViolation, "inexact polynomial division");
    return q;
}

/// Product of the distinct monic irreducible factors of f (f nonzero).
Poly radicalModP(const Poly& f) {
    const FieldSpec& field = f.field();
    Poly g = f.monic();
    if (g.degree() <= 0) return Poly::constant(Scalar::one(field));
    Poly d = g.derivative();
    if (d.isZero()) {
        // g(x) = h(x^p) = h(x)^p over F_p.
        const std::size_t p = field.characteristic();
        std::vector<Scalar> h;
        for (std::size_t i = 0; i < g.coeffs().size(); i += p) h.push_back(g.coeffs()[i]);
        return radicalModP(Poly(field, std::move(h)));
    }
    Poly common = gcd(g, d);
    Poly w = exactQuotient(g, common);
    if (common.degree() == 0) return w.monic();
    Poly r = radicalModP(common);
    return exactQuotient(w * r, gcd(w, r)).monic();
}

std::vector<std::pair<Poly, int>> distinctDegree(const Poly& f) {
    const FieldSpec& field = f.field();
    const Integer p = field.characteristic();
    std::vector<std::pair<Poly, int>> out;
    Poly cur = f;
    const Poly x = Poly::x(field);
    Poly h = x % cur;
    for (int i = 1; cur.degree() >= 2 * i; ++i) {
        h = powMod(h, p, cur);
        Poly g = gcd(cur, h - x);
        if (g.degree() > 0) {
            out.emplace_back(g, i);
            cur = exactQuotient(cur, g);
            h = h % cur;
        }
    }
    if (cur.degree() > 0) out.emplace_back(cur.monic(), cur.degree());
    return out;
}

void equalDegree(const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (g.degree() == d) {
        out.push_back(g.monic());
        return;
    }
    const FieldSpec& field = g.field();
    const std::uint32_t p = field.characteristic();
    for (;;) {
        std::vector<Scalar> coeffs;
        for (int i = 0; i < g.degree(); ++i) coeffs.push_back(Scalar::random(field, rng));
        Poly a(field, std::move(coeffs));
        if (a.degree() < 1) continue;
        Poly b(field);
        if (p == 2) {
            Poly term = a % g;
            b = term;
            for (int i = 1; i < d; ++i) {
                term = (term * term) % g;
                b += term;
            }
        } else {
            Integer e = (boost::multiprecision::pow(Integer(p), static_cast<unsigned>(d)) - 1) / 2;
            b = powMod(a, e, g) - Poly::constant(Scalar::one(field));
        }
        Poly h = gcd(g, b);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equalDegree(h, d, rng, out);
            equalDegree(exactQuotient(g, h), d, rng, out);
            return;
        }
    }
}

std::vector<Poly> factorModP(const Poly& f, std::uint64_t seed) {
    std::vector<Poly> out;
    Poly rad = radicalModP(f);
    if (rad.degree() <= 0) return out;
    std::mt19937_64 rng(seed);
    for (auto& [g, d] : distinctDegree(rad)) equalDegree(g, d, rng, out);
    return out;
}

// ---------------------------------------------------------------------------
// Factorization over Q

using IntPoly = std::vector<Integer>;  // low degree first, trimmed

void trimInt(IntPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Integer modPositive(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

IntPoly reduceMod(IntPoly f, const Integer& m) {
    for (auto& c : f) c = modPositive(c, m);
    trimInt(f);
    return f;
}

IntPoly mulInt(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly c(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    trimInt(c);
    return c;
}

IntPoly subInt(IntPoly a, const IntPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Integer(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trimInt(a);
    return a;
}

IntPoly scaleInt(IntPoly a, const Integer& s) {
    for (auto& c : a) c *= s;
    trimInt(a);
    return a;
}

Poly toModP(const IntPoly& f, const FieldSpec& field) {
    std::vector<Scalar> c;
    for (const auto& v : f) c.emplace_back(field, Rational(v));
    return Poly(field, std::move(c));
}

IntPoly fromModP(const Poly& f) {
    IntPoly out;
    for (const auto& c : f.coeffs()) out.emplace_back(c.residue());
    trimInt(out);
    return out;
}

Poly toRational(const IntPoly& f) {
    const FieldSpec q = FieldSpec::rational();
    std::vector<Scalar> c;
    for (const auto& v : f) c.emplace_back(q, Rational(v));
    return Poly(q, std::move(c));
}

/// Clears denominators and content; leading coefficient positive.
IntPoly primitiveInteger(const Poly& f) {
    Integer den = 1;
    for (const auto& c : f.coeffs()) {
        Integer d = boost::multiprecision::denominator(c.rational());
        den = den / boost::multiprecision::gcd(den, d) * d;
    }
    IntPoly out;
    for (const auto& c : f.coeffs()) {
        Rational scaled = c.rational() * den;
        out.push_back(boost::multiprecision::numerator(scaled));
    }
    Integer content = 0;
    for (const auto& c : out) content = boost::multiprecision::gcd(content, c);
    if (content != 0)
        for (auto& c : out) c /= content;
    if (!out.empty() && out.back() < 0)
        for (auto& c : out) c = -c;
    return out;
}

/// Lifts F = lc * a * b (mod p) to F = lc * A * B (mod p^k) with A, B monic.
std::pair<IntPoly, IntPoly> henselPair(const IntPoly& F, const Integer& lc, const Poly& a, const Poly& b,
                                       std::uint32_t p, unsigned k) {
    const FieldSpec fp = a.field();
    Bezout bz = extendedGcd(a, b);
    if (bz.g.degree() != 0) fail(ErrorCode::InternalInvariantViolation, "Hensel factors not coprime");
    const Integer modulus = boost::multiprecision::pow(Integer(p), k);
    const Scalar lcInv = Scalar(fp, Rational(lc)).inverse();
    IntPoly A = fromModP(a), B = fromModP(b);
    Integer pj = p;
    for (unsigned j = 1; j < k; ++j) {
        IntPoly E = reduceMod(subInt(F, scaleInt(mulInt(A, B), lc)), modulus);
        for (auto& c : E) c /= pj;
        Poly e = lcInv * toModP(E, fp);
        Poly da = (bz.t * e) % a;
        Poly db = (bz.s * e) % b;
        A = reduceMod(subInt(A, scaleInt(fromModP(da), -pj)), modulus);
        B = reduceMod(subInt(B, scaleInt(fromModP(db), -pj)), modulus);
        pj *= p;
    }
    return {A, B};
}

std::vector<IntPoly> henselAll(const IntPoly& F, const Integer& lc, std::vector<Poly> factors, std::uint32_t p,
                               unsigned k) {
    const Integer modulus = boost::multiprecision::pow(Integer(p), k);
    if (factors.size() == 1) {
        Integer inv;
        mpz_invert(inv.backend().data(), modPositive(lc, modulus).backend().data(), modulus.backend().data());
        return {reduceMod(scaleInt(F, inv), modulus)};
    }
    Poly a = factors.front();
    Poly b = Poly::constant(Scalar::one(a.field()));
    for (std::size_t i = 1; i < factors.size(); ++i) b = b * factors[i];
    auto [A, B] = henselPair(F, lc, a, b, p, k);
    factors.erase(factors.begin());
    std::vector<IntPoly> out{A};
    auto rest = henselAll(B, Integer(1), std::move(factors), p, k);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

IntPoly symmetric(IntPoly f, const Integer& modulus) {
    const Integer half = modulus / 2;
    for (auto& c : f) {
        c = modPositive(c, modulus);
        if (c > half) c -= modulus;
    }
    trimInt(f);
    return f;
}

bool nextCombination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<Poly> factorOverQ(const Poly& f) {
    Poly sqfree = exactQuotient(f, gcd(f, f.derivative())).monic();
    if (sqfree.degree() <= 1) return sqfree.degree() == 1 ? std::vector<Poly>{sqfree} : std::vector<Poly>{};
    IntPoly F = primitiveInteger(sqfree);
    const Integer lc = F.back();
    const int deg = static_cast<int>(F.size()) - 1;

    // Pick the good prime (among the first few) giving the fewest modular factors.
    std::uint32_t bestP = 0;
    std::vector<Poly> bestFactors;
    int good = 0;
    for (std::uint32_t p = 3; good < 5 && p < 100000; p += 2) {
        if (!isPrimeNumber(p) || lc % p == 0) continue;
        FieldSpec fp = FieldSpec::prime(p);
        Poly fm = toModP(F, fp);
        if (gcd(fm, fm.derivative()).degree() != 0) continue;
        ++good;
        auto facs = factorModP(fm, p);
        if (bestP == 0 || facs.size() < bestFactors.size()) {
            bestP = p;
            bestFactors = std::move(facs);
        }
    }
    if (bestP == 0) fail(ErrorCode::InternalInvariantViolation, "no good prime for factorization");
    if (bestFactors.size() == 1) return {sqfree};

    Integer normSq = 0;
    for (const auto& c : F) normSq += c * c;
    Integer bound = boost::multiprecision::abs(lc) * (Integer(1) << deg) * (boost::multiprecision::sqrt(normSq) + 1);
    unsigned k = 1;
    Integer modulus = bestP;
    while (modulus <= 2 * bound) {
        modulus *= bestP;
        ++k;
    }
    std::vector<IntPoly> lifted = henselAll(F, lc, bestFactors, bestP, k);

    std::vector<IntPoly> found;
    IntPoly cur = F;
    std::vector<std::size_t> remaining(lifted.size());
    for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
    std::size_t s = 1;
    while (2 * s <= remaining.size()) {
        bool hit = false;
        std::vector<std::size_t> comb(s);
        for (std::size_t i = 0; i < s; ++i) comb[i] = i;
        do {
            IntPoly g{cur.back()};
            for (auto i : comb) g = reduceMod(mulInt(g, lifted[remaining[i]]), modulus);
            g = primitiveInteger(toRational(symmetric(g, modulus)));
            auto [q, r] = divmod(toRational(cur), toRational(g));
            if (r.isZero()) {
                found.push_back(g);
                cur = primitiveInteger(q);
                std::vector<std::size_t> rest;
                for (std::size_t i = 0; i < remaining.size(); ++i)
                    if (std::find(comb.begin(), comb.end(), i) == comb.end()) rest.push_back(remaining[i]);
                remaining = std::move(rest);
                hit = true;
                break;
            }
        } while (nextCombination(comb, remaining.size()));
        if (!hit) ++s;
    }
    if (cur.size() > 1) found.push_back(cur);

    std::vector<Poly> out;
    for (const auto& g : found) out.push_back(toRational(g).monic());
    return out;
}

}  // namespace

std::vector<Poly> irreducibleFactors(const Poly& f, std::uint64_t seed) {
    if (f.isZero()) fail(ErrorCode::InvalidArgument, "factorization of the zero polynomial");
    std::vector<Poly> out = f.field().isPrime() ? factorModP(f, seed) : factorOverQ(f);
    std::sort(out.begin(), out.end(), polyLess);
    return out;
}

bool isIrreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    auto facs = irreducibleFactors(f);
    return facs.size() == 1 && facs.front().degree() == f.degree();
}

}  // namespace ssred

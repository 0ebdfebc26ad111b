#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brute_subspaces.hpp"
#include "corpus.hpp"
#include "ssred/error.hpp"
#include "ssred/matrep/matrep.hpp"

using namespace ssred;

namespace {

const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec Q = FieldSpec::rational();

Representation rep1(const Matrix& m) { return Representation(m.field(), m.rows(), {m}); }

const Matrix unipotent2(F2, {{1, 1}, {0, 1}});
const Matrix rotation3(F3, {{0, -1}, {1, 0}});

}  // namespace

TEST_CASE("representation validation") {
    CHECK_THROWS_AS(Representation(F2, 2, {}), Error);
    CHECK_THROWS_AS(Representation(F2, 2, {Matrix(F2, {{1, 1}, {1, 1}})}), Error);
    CHECK_THROWS_AS(Representation(F2, 3, {unipotent2}), Error);
    CHECK_THROWS_AS(Representation(F3, 2, {unipotent2}), Error);
}

TEST_CASE("envelopingBasis examples") {
    CHECK(envelopingBasis(rep1(Matrix::identity(F2, 2))).algebraDim() == 1);
    auto gt = envelopingBasis(rep1(unipotent2));
    CHECK(gt.algebraDim() == 2);
    CHECK(gt.entries.size() == 2);
    CHECK(gt.entries[1] == unipotent2);  // self-inverse in characteristic 2
    CHECK(envelopingBasis(rep1(rotation3)).algebraDim() == 2);
    Representation dihedral(F3, 2, {Matrix(F3, {{0, 1}, {1, 0}}), Matrix::diagonal(F3, {1, -1})});
    CHECK(envelopingBasis(dihedral).algebraDim() == 4);
}

TEST_CASE("enveloping algebra is closed under multiplication") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        FieldSpec f = trial % 3 == 0 ? Q : (trial % 3 == 1 ? F2 : F3);
        auto rep = corpus::randomRep(f, 1 + rng() % 3, 1 + rng() % 2, rng);
        auto gt = envelopingBasis(rep);
        CHECK(gt.algebraDim() <= rep.dim() * rep.dim());
        for (const auto& a : gt.algebraBasis)
            for (const auto& b : gt.algebraBasis) CHECK(inSpan(gt.algebraBasis, a * b));
        for (const auto& e : gt.entries) CHECK(inSpan(gt.algebraBasis, e));
    }
}

TEST_CASE("findSubmodule examples") {
    auto found = findSubmodule(rep1(unipotent2));
    REQUIRE(std::holds_alternative<Subspace>(found));
    CHECK(std::get<Subspace>(found) == Subspace::span(F2, 2, {unitVector(F2, 2, 0)}));

    // Oracle: none of the four lines of F_3^2 is invariant under the rotation.
    brute::Space sp(3, 2);
    CHECK(sp.isIrreducible({rotation3}));
    found = findSubmodule(rep1(rotation3));
    REQUIRE(std::holds_alternative<IrreducibleWitness>(found));
    CHECK(verifyWitness(rep1(rotation3), std::get<IrreducibleWitness>(found)));

    auto one = findSubmodule(rep1(Matrix::identity(Q, 1)));
    REQUIRE(std::holds_alternative<IrreducibleWitness>(one));
    CHECK(std::get<IrreducibleWitness>(one).method == IrreducibleWitness::Method::Dimension1);
}

TEST_CASE("Norton witnesses are produced when Burnside does not apply") {
    // Rotation over F_3 and over Q: enveloping algebra is a field of dimension 2.
    auto w = std::get<IrreducibleWitness>(findSubmodule(rep1(rotation3)));
    CHECK(w.method == IrreducibleWitness::Method::Norton);
    Representation rq = rep1(Matrix(Q, {{0, -1}, {1, 0}}));
    auto wq = std::get<IrreducibleWitness>(findSubmodule(rq));
    CHECK(wq.method == IrreducibleWitness::Method::Norton);
    CHECK(verifyWitness(rq, wq));
    // Tampered witnesses fail verification.
    auto bad = wq;
    bad.kernelVector = zeroVector(Q, 2);
    CHECK(!verifyWitness(rq, bad));
    CHECK(!verifyWitness(rep1(Matrix::identity(Q, 2)), IrreducibleWitness{}));
}

TEST_CASE("irreducibility and semisimplicity agree with the brute-force lattice") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 250; ++trial) {
        FieldSpec f = trial % 2 ? F2 : F3;
        std::size_t n = 1 + rng() % 3;
        auto rep = corpus::randomRep(f, n, 1 + rng() % 3, rng);
        brute::Space sp(f.characteristic(), n);
        auto found = findSubmodule(rep, trial);
        CHECK(std::holds_alternative<IrreducibleWitness>(found) == sp.isIrreducible(rep.generators()));
        if (auto* w = std::get_if<IrreducibleWitness>(&found)) {
            CHECK(verifyWitness(rep, *w));
        } else {
            const auto& s = std::get<Subspace>(found);
            CHECK(!s.isZero());
            CHECK(!s.isFull());
            CHECK(s.isInvariant(rep.generators()));
        }
        auto cert = isSemisimple(rep);
        CHECK(cert.semisimple == sp.isSemisimple(rep.generators()));
        if (cert.semisimple) {
            Subspace total(f, n);
            std::size_t dims = 0;
            for (const auto& s : cert.summands) {
                CHECK(s.isInvariant(rep.generators()));
                CHECK(isIrreducible(restrictTo(rep, s)));
                total = total.sum(s);
                dims += s.dim();
            }
            CHECK(total.isFull());
            CHECK(dims == n);
        } else {
            REQUIRE(cert.nonSplit);
            CHECK(cert.nonSplit->isInvariant(rep.generators()));
            CHECK(!invariantProjection(rep, *cert.nonSplit));
        }
        auto series = compositionSeries(rep, trial % 4);
        CHECK(series.flag.length() == sp.compositionLength(rep.generators()));
    }
}

TEST_CASE("compositionSeries examples") {
    auto s = compositionSeries(rep1(unipotent2));
    REQUIRE(s.flag.length() == 2);
    CHECK(s.flag.steps()[0] == Subspace::span(F2, 2, {unitVector(F2, 2, 0)}));
    CHECK(s.factors[0].generators()[0].isIdentity());
    CHECK(s.factors[1].generators()[0].isIdentity());

    auto irr = compositionSeries(rep1(rotation3));
    CHECK(irr.flag.isTrivial());
    CHECK(irr.factors.size() == 1);

    auto d = rep1(Matrix::diagonal(F3, {1, -1}));
    std::set<std::string> firstSteps;
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        auto cs = compositionSeries(d, seed);
        REQUIRE(cs.flag.length() == 2);
        firstSteps.insert(cs.flag.steps()[0].encode());
        auto classes = isoClassMultiset(cs);
        CHECK(classes.size() == 2);
    }
    CHECK(firstSteps.size() == 2);
}

TEST_CASE("composition series are valid and Jordan-Holder holds across seeds") {
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 120; ++trial) {
        FieldSpec f = trial % 4 == 3 ? Q : (trial % 2 ? F2 : F3);
        std::size_t n = 1 + rng() % 3;
        auto rep = corpus::randomRep(f, n, 1 + rng() % 2, rng);
        auto a = compositionSeries(rep, 0), b = compositionSeries(rep, 1 + rng() % 100);
        for (const auto& cs : {a, b}) {
            std::size_t total = 0;
            for (std::size_t i = 0; i < cs.factors.size(); ++i) {
                total += cs.factors[i].dim();
                CHECK(verifyWitness(cs.factors[i], cs.witnesses[i]));
            }
            CHECK(total == n);
            for (const auto& step : cs.flag.steps()) CHECK(step.isInvariant(rep.generators()));
        }
        CHECK(sameIsoClasses(isoClassMultiset(a), isoClassMultiset(b)));
    }
}

TEST_CASE("isSemisimple examples") {
    auto u = isSemisimple(rep1(unipotent2));
    CHECK(!u.semisimple);
    REQUIRE(u.nonSplit);
    CHECK(*u.nonSplit == Subspace::span(F2, 2, {unitVector(F2, 2, 0)}));
    CHECK(isSemisimple(rep1(Matrix::diagonal(F3, {1, -1}))).semisimple);
    CHECK(isSemisimple(rep1(rotation3)).semisimple);
    // Rational examples.
    CHECK(!isSemisimple(rep1(Matrix(Q, {{1, 1, 0}, {0, 1, 0}, {0, 0, 2}}))).semisimple);
    CHECK(isSemisimple(rep1(Matrix(Q, {{1, 1}, {0, 2}}))).semisimple);
    CHECK(isSemisimple(rep1(Matrix::identity(Q, 3))).semisimple);
}

TEST_CASE("moduleIso examples and symmetry") {
    CHECK(moduleIso(rep1(unipotent2), rep1(unipotent2)));
    auto g = moduleIso(rep1(unipotent2), rep1(Matrix(F2, {{1, 0}, {1, 1}})));
    REQUIRE(g);
    CHECK(conjugate(*g, unipotent2) == Matrix(F2, {{1, 0}, {1, 1}}));
    CHECK(!moduleIso(rep1(Matrix::identity(F2, 2)), rep1(unipotent2)));
    CHECK(!moduleIso(rep1(Matrix::identity(F2, 2)), rep1(Matrix::identity(F2, 3))));
    CHECK_THROWS_AS(moduleIso(rep1(unipotent2), Representation(F2, 2, {unipotent2, unipotent2})), Error);

    std::mt19937_64 rng(109);
    for (int trial = 0; trial < 80; ++trial) {
        FieldSpec f = trial % 2 ? F2 : F3;
        std::size_t n = 1 + rng() % 3;
        auto a = corpus::randomRep(f, n, 2, rng);
        auto b = trial % 3 ? a.conjugated(Matrix::randomInvertible(f, n, rng)) : corpus::randomRep(f, n, 2, rng);
        auto ab = moduleIso(a, b), ba = moduleIso(b, a);
        CHECK(ab.has_value() == ba.has_value());
        if (ab && ba) {
            for (std::size_t i = 0; i < 2; ++i) {
                CHECK(conjugate(*ab, a.generators()[i]) == b.generators()[i]);
                CHECK(conjugate(inverse(*ab), b.generators()[i]) == a.generators()[i]);
            }
        }
    }
}

TEST_CASE("isoClassMultiset examples") {
    auto trivial = isoClassMultiset(compositionSeries(rep1(unipotent2)));
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].multiplicity == 2);
    auto split = isoClassMultiset(compositionSeries(rep1(Matrix::diagonal(F3, {1, -1}))));
    REQUIRE(split.size() == 2);
    CHECK(split[0].multiplicity == 1);
    auto single = isoClassMultiset(compositionSeries(rep1(rotation3)));
    REQUIRE(single.size() == 1);
    CHECK(single[0].multiplicity == 1);
}

TEST_CASE("quotient and restriction coordinates") {
    Matrix h(Q, {{1, 1, 0}, {0, 1, 0}, {0, 0, 2}});
    auto rep = rep1(h);
    Subspace line = Subspace::span(Q, 3, {unitVector(Q, 3, 0)});
    CHECK(restrictTo(rep, line).generators()[0] == Matrix(Q, {{1}}));
    CHECK(quotientBy(rep, line).generators()[0] == Matrix::diagonal(Q, {1, 2}));
    Subspace inner = Subspace::span(Q, 2, {unitVector(Q, 2, 1)});
    CHECK(liftFromQuotient(line, inner) == Subspace::span(Q, 3, {unitVector(Q, 3, 0), unitVector(Q, 3, 2)}));
    CHECK_THROWS_AS(restrictTo(rep, Subspace::span(Q, 3, {unitVector(Q, 3, 1)})), Error);
}

TEST_CASE("generatedGroup") {
    CHECK(generatedGroup({unipotent2}, 10).size() == 2);
    CHECK(generatedGroup({Matrix(F3, {{0, 1}, {1, 0}}), Matrix::diagonal(F3, {1, -1})}, 100).size() == 8);
    auto gl22 = corpus::allInvertible(F2, 2);
    CHECK(generatedGroup(gl22, 100).size() == 6);
    CHECK_THROWS_AS(generatedGroup(corpus::allInvertible(F3, 2), 10), Error);
}

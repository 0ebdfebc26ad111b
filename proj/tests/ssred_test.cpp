#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "ssred/error.hpp"
#include "ssred/semisimplify/ssred.hpp"

using namespace ssred;

namespace {

const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec Q = FieldSpec::rational();

Representation rep1(const Matrix& m) { return Representation(m.field(), m.rows(), {m}); }

Subspace span(const FieldSpec& f, std::size_t n, std::vector<std::size_t> units) {
    std::vector<Vector> vs;
    for (auto i : units) vs.push_back(unitVector(f, n, i));
    return Subspace::span(f, n, vs);
}

ErrorCode codeOf(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("isGcrOverK examples") {
    CHECK(!isGcrOverK(rep1(Matrix(F2, {{1, 1}, {0, 1}}))).semisimple);
    CHECK(isGcrOverK(rep1(Matrix(F3, {{0, -1}, {1, 0}}))).semisimple);
    CHECK(isGcrOverK(rep1(Matrix::identity(F3, 3))).semisimple);
}

TEST_CASE("semisimplify examples") {
    for (const auto& f : {F2, Q}) {
        auto ss = semisimplify(rep1(Matrix(f, {{1, 1}, {0, 1}})));
        REQUIRE(ss.flag.length() == 2);
        CHECK(ss.flag.steps()[0] == span(f, 2, {0}));
        CHECK(ss.cocharacter.weights() == std::vector<std::int64_t>{2, 1});
        CHECK(ss.ssGenerators[0].isIdentity());
        CHECK(ss.semisimpleCertificate.semisimple);
        CHECK(ss.lIrreducible);
    }
    Matrix rot(F3, {{0, -1}, {1, 0}});
    auto irr = semisimplify(rep1(rot));
    CHECK(irr.flag.isTrivial());
    CHECK(irr.ssGenerators[0] == rot);

    // Semisimple but reducible: generators are kept, flag is a composition series.
    Matrix d = Matrix::diagonal(F3, {1, -1});
    auto split = semisimplify(rep1(d));
    CHECK(split.flag.length() == 2);
    CHECK(split.ssGenerators[0] == d);

    Matrix m3(Q, {{1, 1, 0}, {0, 1, 0}, {0, 0, 2}});
    auto q3 = semisimplify(rep1(m3));
    CHECK(q3.ssGenerators[0] == Matrix::diagonal(Q, {1, 1, 2}));
    CHECK(q3.semisimpleCertificate.semisimple);
}

TEST_CASE("semisimplification is idempotent") {
    std::mt19937_64 rng(201);
    for (int trial = 0; trial < 40; ++trial) {
        FieldSpec f = trial % 4 == 3 ? Q : (trial % 2 ? F2 : F3);
        auto rep = corpus::randomRep(f, 1 + rng() % 3, 1 + rng() % 2, rng);
        auto once = semisimplify(rep, trial);
        auto twice = semisimplify(once.ssRepresentation(), trial);
        CHECK(twice.ssGenerators == once.ssGenerators);
    }
}

TEST_CASE("semisimplify output invariants on random input") {
    std::mt19937_64 rng(203);
    for (int trial = 0; trial < 120; ++trial) {
        FieldSpec f = trial % 4 == 3 ? Q : (trial % 2 ? F2 : F3);
        auto rep = corpus::randomRep(f, 1 + rng() % 3, 1 + rng() % 3, rng);
        auto ss = semisimplify(rep, trial % 5);
        CHECK(ss.lIrreducible);
        CHECK(isSemisimple(ss.ssRepresentation()).semisimple);
        for (std::size_t i = 0; i < rep.generators().size(); ++i) {
            CHECK(inPlambda(rep.generators()[i], ss.cocharacter));
            CHECK(ss.ssGenerators[i] == cLambda(rep.generators()[i], ss.cocharacter));
            CHECK(inLlambda(ss.ssGenerators[i], ss.cocharacter));
        }
    }
}

TEST_CASE("conjugacy certificates across seeds and under conjugation") {
    std::mt19937_64 rng(205);
    for (int trial = 0; trial < 60; ++trial) {
        FieldSpec f = trial % 4 == 3 ? Q : (trial % 2 ? F2 : F3);
        std::size_t n = 1 + rng() % 3;
        auto rep = corpus::randomRep(f, n, 1 + rng() % 2, rng);
        auto a = semisimplify(rep, 0);
        for (std::uint64_t seed : {1ULL, 2ULL}) {
            auto cert = conjugacyCertificate(a, semisimplify(rep, seed));
            for (std::size_t i = 0; i < a.ssGenerators.size(); ++i)
                CHECK(conjugate(cert.g, a.ssGenerators[i]) == cert.rhs.ssGenerators[i]);
        }
        // Equivariance: the semisimplification of g H g^-1 is conjugate to that of H.
        Matrix g = Matrix::randomInvertible(f, n, rng);
        auto moved = semisimplify(rep.conjugated(g), 0);
        auto iso = moduleIso(a.ssRepresentation(), moved.ssRepresentation());
        CHECK(iso.has_value());
    }
}

TEST_CASE("conjugacyCertificate examples") {
    auto u = rep1(Matrix(F2, {{1, 1}, {0, 1}}));
    auto s0 = semisimplify(u, 0);
    CHECK(conjugacyCertificate(s0, s0).g.isIdentity());
    CHECK(conjugacyCertificate(s0, semisimplify(u, 3)).g.isIdentity());

    auto d = rep1(Matrix::diagonal(F3, {1, -1}));
    std::optional<SsResult> first, other;
    for (std::uint64_t seed = 0; seed < 6 && !other; ++seed) {
        auto ss = semisimplify(d, seed);
        if (!first)
            first = ss;
        else if (!(ss.flag == first->flag))
            other = ss;
    }
    REQUIRE(other);
    auto cert = conjugacyCertificate(*first, *other);
    CHECK(cert.g.isIdentity());
    // In adapted coordinates the two limits are diag(1,-1) and diag(-1,1); the swap
    // conjugates one into the other.
    Matrix swap(F3, {{0, 1}, {1, 0}});
    CHECK(!(first->blockGenerators[0] == other->blockGenerators[0]));
    CHECK(conjugate(swap, first->blockGenerators[0]) == other->blockGenerators[0]);

    CHECK_THROWS_AS(conjugacyCertificate(s0, semisimplify(d)), Error);
}

TEST_CASE("leviDescent examples") {
    auto diag = leviDescent(rep1(Matrix::diagonal(F3, {1, -1})), {1, 1});
    CHECK(diag.fullGcr);
    CHECK(diag.blocksGcr());
    Matrix blocky(F2, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
    auto nonss = leviDescent(rep1(blocky), {2, 1});
    CHECK(!nonss.fullGcr);
    CHECK(!nonss.blocksGcr());
    auto single = leviDescent(rep1(blocky), {3});
    CHECK(single.agree());
    CHECK(codeOf([&] { leviDescent(rep1(Matrix(F2, {{1, 1}, {0, 1}})), {1, 1}); }) == ErrorCode::NotBlockDiagonal);
}

TEST_CASE("leviDescent agrees on random block-diagonal input") {
    std::mt19937_64 rng(207);
    for (int trial = 0; trial < 40; ++trial) {
        FieldSpec f = trial % 2 ? F2 : F3;
        auto a = corpus::randomRep(f, 1 + rng() % 2, 2, rng);
        auto b = corpus::randomRep(f, 1 + rng() % 2, 2, rng);
        std::size_t n = a.dim() + b.dim();
        std::vector<Matrix> gens;
        for (std::size_t i = 0; i < 2; ++i) {
            Matrix m(f, n, n);
            m.setBlock(0, 0, a.generators()[i]);
            m.setBlock(a.dim(), a.dim(), b.generators()[i]);
            gens.push_back(m);
        }
        CHECK(leviDescent(Representation(f, n, gens), {a.dim(), b.dim()}).agree());
    }
}

TEST_CASE("cliffordJointSS examples") {
    auto u = rep1(Matrix(F3, {{1, 1}, {0, 1}}));
    auto same = cliffordJointSS(u, u);
    CHECK(same.hLimit == same.m.ssGenerators);
    CHECK(same.normalityVerified);

    Representation dihedral(F3, 2, {Matrix(F3, {{0, 1}, {1, 0}}), Matrix::diagonal(F3, {1, -1})});
    // <diag(1,-1)> alone is not normal (the swap sends it to diag(-1,1)); the diagonal
    // subgroup {diag(+-1,+-1)} is.
    Representation diagonal(F3, 2, {Matrix::diagonal(F3, {1, -1}), Matrix::diagonal(F3, {-1, -1})});
    CHECK(codeOf([&] { cliffordJointSS(dihedral, rep1(Matrix::diagonal(F3, {1, -1}))); }) == ErrorCode::NotNormal);
    auto dh = cliffordJointSS(dihedral, diagonal);
    CHECK(dh.m.flag.isTrivial());
    CHECK(dh.hCertificate.semisimple);
    CHECK(dh.m.semisimpleCertificate.semisimple);

    Representation borel(F3, 2, {Matrix(F3, {{1, 1}, {0, 1}}), Matrix::diagonal(F3, {1, -1})});
    auto nb = cliffordJointSS(borel, u);
    REQUIRE(nb.m.flag.length() == 2);
    CHECK(nb.m.flag.steps()[0] == span(F3, 2, {0}));
    CHECK(nb.hCertificate.semisimple);
    CHECK(nb.m.semisimpleCertificate.semisimple);

    // diag(1,-1) is not normalized by the transvection.
    CHECK(codeOf([&] { cliffordJointSS(borel, rep1(Matrix::diagonal(F3, {1, -1}))); }) == ErrorCode::NotNormal);
    auto uq = rep1(Matrix(Q, {{1, 1}, {0, 1}}));
    CHECK(!cliffordJointSS(uq, uq).normalityVerified);
    Representation twoQ(Q, 2, {Matrix(Q, {{1, 1}, {0, 1}}), Matrix(Q, {{0, 1}, {1, 0}})});
    CHECK(codeOf([&] { cliffordJointSS(twoQ, uq); }) == ErrorCode::AlgebraNotStable);
}

TEST_CASE("optimalFlag examples") {
    auto u = rep1(Matrix(F2, {{1, 1}, {0, 1}}));
    OptimalFlagOptions opts;
    opts.maxWeightHeight = 3;
    auto rep = optimalFlag(u, opts);
    REQUIRE(rep.argmaxFlags.size() == 1);
    CHECK(rep.argmaxFlags[0].steps()[0] == span(F2, 2, {0}));
    CHECK(rep.argmax[0].canonicalWeights == std::vector<std::int64_t>{1, -1});
    CHECK(rep.measure == Rational(2));

    CHECK(codeOf([] { optimalFlag(rep1(Matrix::identity(F2, 2))); }) == ErrorCode::PreconditionNotDestabilizable);

    // Single Jordan block over F_2: invariant subspaces L = <e1> and P = <e1,e2>. The
    // flags (L) and (P) have non-semisimple limits; the full flag wins with
    // canonical weights (1,0,-1): gaps 1 and 1 are carried by N, norm 2.
    auto j3 = rep1(Matrix(F2, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}));
    auto r3 = optimalFlag(j3);
    CHECK(r3.flagsExamined == 3);
    REQUIRE(r3.argmaxFlags.size() == 1);
    CHECK(r3.argmaxFlags[0].length() == 3);
    CHECK(r3.measure == Rational(1, 2));
    CHECK(r3.argmax[0].canonicalWeights == std::vector<std::int64_t>{1, 0, -1});
}

TEST_CASE("optimalFlag argmax properties on random non-semisimple input") {
    std::mt19937_64 rng(209);
    int checked = 0;
    for (int trial = 0; trial < 80; ++trial) {
        FieldSpec f = trial % 2 ? F2 : F3;
        auto rep = corpus::randomRep(f, 2 + rng() % 2, 1 + rng() % 2, rng);
        if (isSemisimple(rep).semisimple) continue;
        ++checked;
        auto report = optimalFlag(rep);
        REQUIRE(!report.argmaxFlags.empty());
        CHECK(report.measure > 0);
        for (const auto& flag : report.argmaxFlags) {
            for (const auto& g : rep.generators()) CHECK(flag.isStabilizedBy(g));
            Representation limit(f, rep.dim(), cLambda(rep.generators(), flagToCocharacter(flag)));
            CHECK(isSemisimple(limit).semisimple);
        }
    }
    CHECK(checked > 10);
}

TEST_CASE("optimalFlag over the rationals") {
    auto rep = rep1(Matrix(Q, {{1, 1, 0}, {0, 1, 0}, {0, 0, 2}}));
    auto report = optimalFlag(rep);
    REQUIRE(!report.argmaxFlags.empty());
    for (const auto& flag : report.argmaxFlags) CHECK(flag.isStabilizedBy(rep.generators()[0]));
}

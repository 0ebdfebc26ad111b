#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ssred/cochar/cochar.hpp"
#include "ssred/error.hpp"

using namespace ssred;

namespace {

const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec Q = FieldSpec::rational();

Flag lineFlag(const FieldSpec& f, std::vector<std::int64_t> v) {
    Vector line;
    for (auto x : v) line.emplace_back(f, x);
    return Flag::fromChain(f, v.size(), {Subspace::span(f, v.size(), {line})});
}

/// Random flag: a random chain of spans of random vectors.
Flag randomFlag(const FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
    std::vector<Subspace> chain;
    std::vector<Vector> vs;
    Matrix m = Matrix::randomInvertible(f, n, rng);
    for (std::size_t i = 0; i < n; ++i) {
        vs.push_back(m.column(i));
        if (rng() % 2) chain.push_back(Subspace::span(f, n, vs));
    }
    return Flag::fromChain(f, n, chain);
}

/// Random invertible element of P_lambda: block upper triangular in the adapted basis.
Matrix randomInP(const Cocharacter& lambda, std::mt19937_64& rng) {
    const auto& w = lambda.weights();
    for (;;) {
        Matrix a = Matrix::random(lambda.field(), w.size(), w.size(), rng);
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = 0; j < w.size(); ++j)
                if (w[i] < w[j]) a(i, j) = Scalar::zero(lambda.field());
        if (tryInverse(a)) return lambda.fromAdapted(a);
    }
}

/// Independent stabilizer test: m V subset V for each step, via spans of images.
bool preservesByImages(const Flag& flag, const Matrix& m) {
    for (const auto& s : flag.steps()) {
        for (const auto& b : s.basis())
            if (!s.contains(m * b)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("flag validation") {
    auto e1 = unitVector(F2, 2, 0);
    CHECK_THROWS_AS(Flag(F2, 2, {Subspace::span(F2, 2, {e1})}), Error);
    CHECK_THROWS_AS(Flag(F2, 2, {Subspace::full(F2, 2), Subspace::full(F2, 2)}), Error);
    Flag f = lineFlag(F2, {1, 0});
    CHECK(f.blockSizes() == std::vector<std::size_t>{1, 1});
    CHECK(Flag::trivial(Q, 3).blockSizes() == std::vector<std::size_t>{3});
}

TEST_CASE("flagToCocharacter examples") {
    auto triv = flagToCocharacter(Flag::trivial(F2, 3));
    CHECK(triv.weights() == std::vector<std::int64_t>{1, 1, 1});
    CHECK(triv.basisChange().isIdentity());

    auto l1 = flagToCocharacter(lineFlag(F2, {1, 0}));
    CHECK(l1.weights() == std::vector<std::int64_t>{2, 1});
    CHECK(l1.basisChange().isIdentity());
    CHECK(l1.canonicalWeights() == std::vector<std::int64_t>{1, -1});

    auto l2 = flagToCocharacter(lineFlag(F2, {1, 1}));
    CHECK(l2.weights() == std::vector<std::int64_t>{2, 1});
    CHECK(l2.basisChange() == Matrix(F2, {{1, 0}, {1, 1}}));
    CHECK(l2.flag() == lineFlag(F2, {1, 1}));
}

TEST_CASE("canonical weights") {
    Matrix id = Matrix::identity(Q, 3);
    CHECK(Cocharacter(id, {4, 2, 0}).canonicalWeights() == std::vector<std::int64_t>{1, 0, -1});
    CHECK(Cocharacter(id, {2, 1, 1}).canonicalWeights() == std::vector<std::int64_t>{2, -1, -1});
    CHECK(Cocharacter(id, {5, 5, 5}).canonicalWeights() == std::vector<std::int64_t>{0, 0, 0});
    CHECK_THROWS_AS(Cocharacter(id, {1, 2, 3}), Error);
}

TEST_CASE("P_lambda, limits and radical membership examples") {
    auto lam = flagToCocharacter(lineFlag(F2, {1, 0}));
    auto flat = flagToCocharacter(Flag::trivial(F2, 2));
    Matrix up(F2, {{1, 1}, {0, 1}}), low(F2, {{1, 0}, {1, 1}});
    CHECK(inPlambda(Matrix::identity(F2, 2), lam));
    CHECK(inPlambda(up, lam));
    CHECK(!inPlambda(low, lam));
    CHECK(inPlambda(low, flat));
    CHECK(cLambda(up, lam).isIdentity());
    CHECK_THROWS_AS(cLambda(low, lam), Error);
    CHECK(cLambda(low, flat) == low);
    CHECK(inRuPlambda(up, lam));
    CHECK(!inRuPlambda(up, flat));
    CHECK(inLlambda(Matrix::diagonal(F3, {1, 2}), flagToCocharacter(lineFlag(F3, {1, 0}))));
    CHECK_THROWS_AS(inPlambda(Matrix::identity(F2, 3), lam), Error);
}

TEST_CASE("leviConjugate examples") {
    auto lam = flagToCocharacter(lineFlag(F3, {1, 0}));
    CHECK(leviConjugate(lam, Matrix::identity(F3, 2)).basisChange() == lam.basisChange());
    Matrix u(F3, {{1, 1}, {0, 1}});
    auto mu = leviConjugate(lam, u);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 50; ++i) {
        Matrix h = randomInP(lam, rng);
        CHECK(cLambda(h, mu) == u * cLambda(h, lam) * inverse(u));
    }
    auto flat = flagToCocharacter(Flag::trivial(F3, 2));
    CHECK_THROWS_AS(leviConjugate(flat, u), Error);
    CHECK_THROWS_AS(leviConjugate(lam, Matrix(F3, {{1, 0}, {1, 1}})), Error);
}

TEST_CASE("limits depend only on the flag") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        FieldSpec f = trial % 3 == 0 ? Q : (trial % 3 == 1 ? F2 : F3);
        Flag flag = randomFlag(f, 1 + rng() % 4, rng);
        std::vector<std::int64_t> w1, w2;
        std::int64_t a = 0, b = 0;
        for (std::size_t i = 0; i < flag.length(); ++i) {
            a -= 1 + static_cast<std::int64_t>(rng() % 3);
            b -= 1 + static_cast<std::int64_t>(rng() % 5);
            w1.push_back(a);
            w2.push_back(b);
        }
        auto l1 = flagToCocharacter(flag, w1), l2 = flagToCocharacter(flag, w2);
        CHECK(l1.flag() == flag);
        Matrix h = randomInP(l1, rng);
        CHECK(cLambda(h, l1) == cLambda(h, l2));
    }
}

TEST_CASE("c_lambda is a homomorphism on P_lambda with kernel the radical") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        FieldSpec f = trial % 2 ? Q : F3;
        auto lam = flagToCocharacter(randomFlag(f, 1 + rng() % 4, rng));
        Matrix x = randomInP(lam, rng), y = randomInP(lam, rng);
        CHECK(cLambda(x * y, lam) == cLambda(x, lam) * cLambda(y, lam));
        Matrix c = cLambda(x, lam);
        CHECK(inLlambda(c, lam));
        CHECK(inRuPlambda(inverse(c) * x, lam));
    }
}

TEST_CASE("inPlambda agrees with flag preservation and conjugation") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 300; ++trial) {
        FieldSpec f = trial % 2 ? F2 : F3;
        std::size_t n = 1 + rng() % 3;
        Flag flag = randomFlag(f, n, rng);
        auto lam = flagToCocharacter(flag);
        Matrix m = trial % 3 ? Matrix::random(f, n, n, rng) : randomInP(lam, rng);
        CHECK(inPlambda(m, lam) == preservesByImages(flag, m));
        Matrix g = Matrix::randomInvertible(f, n, rng);
        CHECK(inPlambda(m, lam.conjugated(g)) == inPlambda(inverse(g) * m * g, lam));
    }
}

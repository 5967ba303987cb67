#include <catch_amalgamated.hpp>

#include "congruence/canon.hpp"
#include "congruence/sample.hpp"

using namespace congruence;
using MG = Matrix<Gaussian>;
using CM = ClassificationMode;

TEST_CASE("canonical forms of small matrices") {
    auto ac = canonicalize(MG{{0, 1}, {-1, 0}}, CM::CongruenceAC);
    REQUIRE(ac.blocks.size() == 1);
    CHECK(ac.blocks[0] == skewSumPair<Gaussian>(1, -1));

    auto st = canonicalize(MG{{Gaussian(2)}}, CM::StarCongruenceAC);
    REQUIRE(st.blocks.size() == 1);
    CHECK(st.blocks[0] == signedRoot<Gaussian>(1, 1, 1));

    auto neg = canonicalize(MG{{Gaussian(-5)}}, CM::StarCongruenceAC);
    CHECK(neg.blocks[0] == signedRoot<Gaussian>(1, 1, -1));

    auto sk = canonicalize(MG{{0, 1}, {3, 0}}, CM::StarCongruenceAC);
    REQUIRE(sk.blocks.size() == 1);
    CHECK(sk.blocks[0] == skewSumPair<Gaussian>(1, 3));

    auto lo = canonicalize(MG{{0, 1}, {frac(1, 3), 0}}, CM::StarCongruenceAC);
    CHECK(lo.blocks[0] == skewSumPair<Gaussian>(1, 3));

    auto z = canonicalize(MG{{0, 0}, {0, 0}}, CM::CongruenceAC);
    CHECK(z.blocks == std::vector{singularJordan<Gaussian>(1), singularJordan<Gaussian>(1)});

    // [1] + [1] and [[0,1],[1,0]] coincide over C
    CHECK(areEquivalent(MG{{1, 0}, {0, 1}}, MG{{0, 1}, {1, 0}}, CM::CongruenceAC));
    CHECK_FALSE(areEquivalent(MG{{1, 0}, {0, 1}}, MG{{1, 0}, {0, -1}}, CM::StarCongruenceAC));
    CHECK_THROWS_AS(canonicalize(MG{{Gaussian(0, 1)}}, CM::CongruenceReal), DomainError);
}

TEST_CASE("regularize splits off the singular part") {
    auto r = regularize(jordanBlock<Gaussian>(3, 0), Involution::Identity);
    CHECK(r.singularBlocks == std::vector<std::size_t>{3});
    CHECK(r.core.rows() == 0);
    CHECK(r.witness.verify());

    auto r2 = regularize(MG{{0, 0}, {0, 5}}, Involution::ComplexConjugation);
    CHECK(r2.singularBlocks == std::vector<std::size_t>{1});
    CHECK(r2.core == MG{{Gaussian(5)}});
    CHECK(r2.witness.verify());

    for (std::size_t m = 1; m <= 6; ++m) {
        auto [scr, w] = randomCongruence(directSum(std::vector<MG>{jordanBlock<Gaussian>(m, 0), MG{{0, 1}, {2, 0}}}),
                                         m, CM::CongruenceAC);
        auto rr = regularize(scr, Involution::Identity);
        CHECK(rr.singularBlocks == std::vector<std::size_t>{m});
        CHECK(rr.witness.verify());
        CHECK(rank(rr.core) == 2);
    }
}

TEST_CASE("hermitian inertia") {
    CHECK(hermitianInertia(MG{{0, Gaussian(0, 1)}, {Gaussian(0, -1), 0}}) == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(hermitianInertia(MG{{2, 1}, {1, 2}}) == std::pair<std::size_t, std::size_t>{2, 0});
    CHECK(hermitianInertia(MG{{0, 0}, {0, -3}}) == std::pair<std::size_t, std::size_t>{0, 1});
}

TEST_CASE("scrambled block sums canonicalize back") {
    std::mt19937_64 g(7);
    for (CM mode : {CM::CongruenceAC, CM::StarCongruenceAC, CM::CongruenceReal}) {
        for (int t = 0; t < 25; ++t) {
            auto s = randomBlockSum(g, mode, 6);
            MG k = blockSumMatrix(s);
            auto [a, w] = randomCongruence(k, 1000 + t, mode);
            REQUIRE(w.verify());
            INFO(toString(mode) << " trial " << t << " " << describe(s.blocks[0]));
            auto c = canonicalizeDetailed(a, mode);
            CHECK(c.blocks == s);
            CHECK(c.regularization.witness.verify());
            std::size_t singular = 0;
            for (const auto& b : s.blocks) singular += b.kind == BlockKind::SingularJordan;
            CHECK(a.rows() - rank(a) == singular);
            CHECK(canonicalize(blockSumMatrix(c.blocks), mode) == c.blocks);
        }
    }
}

TEST_CASE("float canonicalization agrees with exact on nonsingular inputs") {
    std::mt19937_64 g(11);
    for (CM mode : {CM::CongruenceAC, CM::StarCongruenceAC, CM::CongruenceReal}) {
        for (int t = 0; t < 15; ++t) {
            auto s = randomBlockSum(g, mode, 5, false);
            auto [a, w] = randomCongruence(blockSumMatrix(s), 500 + t, mode);
            auto f = canonicalizeDetailed(convertMatrix<Complex>(a), mode, 1e-8);
            INFO(toString(mode) << " trial " << t);
            BlockSum<Complex> expect{mode, {}};
            for (const auto& b : s.blocks)
                expect.blocks.push_back({b.kind, b.n, convertScalar<Complex>(b.lambda), b.epsilon, std::nullopt, std::nullopt});
            CHECK(blockSumsMatch(f.blocks, expect, 1e-4));
        }
    }
}

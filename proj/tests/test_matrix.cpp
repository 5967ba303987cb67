#include "congruence/matrix.hpp"
#include "congruence/poly.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace congruence;
using MG = Matrix<Gaussian>;
using MQ = Matrix<Rational>;

namespace {

MG randomGaussian(std::mt19937_64& g, std::size_t n, std::size_t m) {
    MG a(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            a(i, j) = Gaussian(Rational(long(g() % 7) - 3), Rational(long(g() % 7) - 3));
    return a;
}

MG randomNonsingular(std::mt19937_64& g, std::size_t n) {
    for (;;) {
        MG s = randomGaussian(g, n, n);
        if (!det(s).isZero()) return s;
    }
}

MQ jordan(std::size_t n, Rational l) {
    MQ j(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        j(i, i) = l;
        if (i + 1 < n) j(i, i + 1) = 1;
    }
    return j;
}

}  // namespace

TEST_CASE("conjTranspose") {
    MG a{{Gaussian::i()}};
    CHECK(conjTranspose(a, Involution::ComplexConjugation) == MG{{Gaussian(0, -1)}});
    CHECK(conjTranspose(a, Involution::Identity) == a);
    std::mt19937_64 g(11);
    for (int t = 0; t < 20; ++t) {
        MG x = randomGaussian(g, 3, 2), y = randomGaussian(g, 2, 4);
        auto inv = Involution::ComplexConjugation;
        CHECK(conjTranspose(conjTranspose(x, inv), inv) == x);
        CHECK(conjTranspose(MG(x * y), inv) == conjTranspose(y, inv) * conjTranspose(x, inv));
    }
}

TEST_CASE("inverse is exact and two-sided") {
    MQ a{{0, 1}, {-1, 0}};
    MQ ai = inverse(a);
    CHECK(ai == MQ{{0, -1}, {1, 0}});
    CHECK(a * ai == MQ::identity(2));
    std::mt19937_64 g(5);
    for (int t = 0; t < 20; ++t) {
        MG s = randomNonsingular(g, 4);
        MG si = inverse(s);
        CHECK(s * si == MG::identity(4));
        CHECK(si * s == MG::identity(4));
    }
    CHECK_THROWS_AS(inverse(MQ{{1, 2}, {2, 4}}), SingularMatrix);
    CHECK_THROWS_AS(inverse(MQ(2, 3)), DimensionError);
    CHECK(inverse(MQ(0, 0)) == MQ(0, 0));
}

TEST_CASE("quaternion inverse") {
    using MH = Matrix<Quaternion>;
    MH s{{Quaternion::j(), Quaternion(1)}, {Quaternion::i(), Quaternion::k()}};
    MH si = inverse(s);
    CHECK(s * si == MH::identity(2));
    CHECK(si * s == MH::identity(2));
}

TEST_CASE("rank and det") {
    CHECK(rank(jordan(3, 0)) == 2);
    CHECK(rank(MQ(3, 0)) == 0);
    CHECK(rank(MQ{{1, 2, 3}, {2, 4, 6}}) == 1);
    CHECK(det(MQ{{1, 2}, {3, 4}}) == -2);
    CHECK(det(MQ{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}) == 1);
    CHECK(det(MQ{{0, 1}, {1, 0}}) == -1);
    CHECK(det(MG{{Gaussian::i(), 0}, {0, Gaussian::i()}}) == Gaussian(-1));
    CHECK(det(MQ(0, 0)) == 1);
    std::mt19937_64 g(9);
    for (int t = 0; t < 20; ++t) {
        MG x = randomGaussian(g, 3, 3), y = randomGaussian(g, 3, 3);
        CHECK(det(MG(x * y)) == det(x) * det(y));
    }
}

TEST_CASE("nullspace and solve") {
    MQ a{{1, 2, 3}, {2, 4, 6}};
    MQ n = nullspace(a);
    CHECK(n.cols() == 2);
    CHECK(isZeroMatrix(MQ(a * n)));
    CHECK(rank(n) == 2);
    auto x = solve(a, MQ{{1}, {2}});
    REQUIRE(x);
    CHECK(a * *x == MQ{{1}, {2}});
    CHECK_FALSE(solve(a, MQ{{1}, {3}}));
}

TEST_CASE("float nullspace and rank") {
    using MC = Matrix<Complex>;
    MC a{{1.0, 2.0}, {2.0, 4.0 + 1e-14}};
    CHECK(rank(a, 1e-10) == 1);
    MC n = nullspace(a, 1e-10);
    CHECK(n.cols() == 1);
    CHECK(maxAbs(MC(a * n)) < 1e-9);
}

TEST_CASE("directSum and skewSum") {
    CHECK(skewSum(MQ{{5}}, MQ{{7}}) == MQ{{0, 7}, {5, 0}});
    CHECK(directSum(MQ{{1}}, MQ{{2}}) == MQ{{1, 0}, {0, 2}});
    CHECK(skewSum(jordan(1, 3), MQ::identity(1)) == MQ{{0, 1}, {3, 0}});
    CHECK(directSum(MQ{{1}}, MQ(0, 0)) == MQ{{1}});
    MQ m(2, 1), n(1, 2);
    CHECK(skewSum(m, n).rows() == 3);
    CHECK(skewSum(m, n).cols() == 3);
}

TEST_CASE("realify") {
    CHECK(realify(MG{{Gaussian::i()}}) == MQ{{0, -1}, {1, 0}});
    CHECK(realify(MG{{Gaussian(2)}}) == MQ{{2, 0}, {0, 2}});
    std::mt19937_64 g(21);
    for (int t = 0; t < 20; ++t) {
        MG x = randomGaussian(g, 2, 2), y = randomGaussian(g, 2, 2);
        CHECK(realify(MG(x * y)) == realify(x) * realify(y));
        CHECK(realify(MG(x + y)) == realify(x) + realify(y));
        CHECK(realify(conjTranspose(x, Involution::ComplexConjugation)) == transpose(realify(x)));
    }
}

TEST_CASE("charPoly") {
    CHECK(charPoly(jordan(2, 3)) == parsePoly<Rational>("x^2-6x+9"));
    CHECK(charPoly(MQ{{0, -1}, {1, -2}}) == parsePoly<Rational>("x^2+2x+1"));
    CHECK(charPoly(MQ(0, 0)) == Poly<Rational>::constant(1));
    std::mt19937_64 g(4);
    for (int t = 0; t < 10; ++t) {
        MG a = randomGaussian(g, 3, 3);
        MG s = randomNonsingular(g, 3);
        CHECK(charPoly(MG(inverse(s) * a * s)) == charPoly(a));
    }
}

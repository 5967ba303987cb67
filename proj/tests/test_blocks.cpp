#include "congruence/blocks.hpp"
#include "congruence/cosquare.hpp"

#include <catch_amalgamated.hpp>

using namespace congruence;
using MQ = Matrix<Rational>;
using MG = Matrix<Gaussian>;

namespace {

MQ upperTwos(std::size_t n, int sign) {
    MQ u(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) u(i, j) = sign * (i == j ? 1 : 2);
    return u;
}

bool isPermutation(const MQ& p) {
    for (std::size_t i = 0; i < p.rows(); ++i) {
        int r = 0, c = 0;
        for (std::size_t j = 0; j < p.cols(); ++j) {
            r += p(i, j) == 1;
            c += p(j, i) == 1;
        }
        if (r != 1 || c != 1) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("jordan and frobenius blocks") {
    CHECK(jordanBlock<Rational>(2, 0) == MQ{{0, 1}, {0, 0}});
    CHECK(frobeniusBlock(parsePoly<Rational>("x^2+2x+1")) == MQ{{0, -1}, {1, -2}});
    CHECK(frobeniusPoly(MQ{{0, -1}, {1, -2}}) == parsePoly<Rational>("x^2+2x+1"));
    CHECK_THROWS_AS(frobeniusBlock(parsePoly<Rational>("2x+1")), DomainError);
    CHECK_THROWS_AS(frobeniusBlock(Poly<Rational>::constant(1)), DomainError);
    CHECK_THROWS_AS(frobeniusPoly(MQ{{1, 1}, {1, 0}}), DomainError);
    auto p = parsePoly<Rational>("x^4-3x^3+x-7");
    CHECK(charPoly(frobeniusBlock(p)) == p);
}

TEST_CASE("mPair") {
    auto [m1, n1] = mPair<Rational>(1);
    CHECK(m1.rows() == 0);
    CHECK(m1.cols() == 1);
    CHECK(n1.rows() == 0);
    auto [m3, n3] = mPair<Rational>(3);
    CHECK(m3 == MQ{{1, 0, 0}, {0, 1, 0}});
    CHECK(n3 == MQ{{0, 1, 0}, {0, 0, 1}});
}

TEST_CASE("gamma, gammaPrime and delta small cases") {
    CHECK(gamma<Rational>(1) == MQ{{1}});
    CHECK(gammaPrime<Rational>(1) == MQ{{1}});
    CHECK(delta<Gaussian>(1, Gaussian(2, 1)) == MG{{Gaussian(2, 1)}});
    CHECK(gamma<Rational>(2) == MQ{{0, -1}, {1, 1}});
    CHECK(gammaPrime<Rational>(3) == MQ{{0, 0, 1}, {0, 1, 0}, {1, 1, 0}});
    CHECK(gammaPrime<Rational>(4) == MQ{{0, 0, 0, -1}, {0, 0, -1, 1}, {0, 1, 1, 0}, {1, 1, 0, 0}});
    CHECK(delta<Gaussian>(2, Gaussian(1)) == MG{{0, 1}, {1, Gaussian::i()}});
    CHECK_THROWS_AS(delta<Rational>(2, Rational(1)), DomainError);
    CHECK_THROWS_AS(delta<Gaussian>(2, Gaussian(0)), DomainError);
    CHECK_THROWS_AS(gamma<Rational>(0), DomainError);
}

TEST_CASE("cosquare of Gamma_n is (-1)^{n+1} times the upper triangular 1/2 pattern") {
    for (std::size_t n = 1; n <= 8; ++n) {
        int sign = (n % 2 == 1) ? 1 : -1;
        CHECK(cosquare(gamma<Rational>(n), Involution::Identity) == upperTwos(n, sign));
    }
}

TEST_CASE("cosquare of Gamma'_n has constant diagonal (-1)^{n+1}") {
    for (std::size_t n = 1; n <= 8; ++n) {
        MQ c = cosquare(gammaPrime<Rational>(n), Involution::Identity);
        Rational s = (n % 2 == 1) ? 1 : -1;
        CHECK(charPoly(c) == detail::powPoly(Poly<Rational>::linear(s), n));
        // nonderogatory: a single Jordan block
        CHECK(rank(MQ(c - s * MQ::identity(n))) == n - 1);
    }
}

TEST_CASE("*cosquare of Delta_n(mu) is upper triangular with diagonal conj(mu)^{-1} mu") {
    for (Gaussian mu : {Gaussian(1), Gaussian(2, 1), Gaussian(1, 1)}) {
        Gaussian l = mu / mu.conj();
        for (std::size_t n = 1; n <= 6; ++n) {
            MG c = cosquare(delta(n, mu), Involution::ComplexConjugation);
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(c(i, i) == l);
                for (std::size_t j = 0; j < i; ++j) CHECK(c(i, j).isZero());
            }
            CHECK(rank(MG(c - l * MG::identity(n))) == n - 1);
        }
    }
}

TEST_CASE("singular Jordan blocks are permutation-congruent to skew sums") {
    for (std::size_t n = 1; n <= 6; ++n) {
        auto [m, nn] = mPair<Rational>(n);
        MQ odd = skewSum(m, transpose(nn));
        MQ p = pathPermutation(odd);
        CHECK(isPermutation(p));
        CHECK(transpose(p) * odd * p == jordanBlock<Rational>(2 * n - 1, 0));

        MQ even = skewSum(jordanBlock<Rational>(n, 0), MQ::identity(n));
        MQ q = pathPermutation(even);
        CHECK(isPermutation(q));
        CHECK(transpose(q) * even * q == jordanBlock<Rational>(2 * n, 0));
    }
    CHECK_THROWS_AS(pathPermutation(MQ{{1, 1}, {0, 0}}), DomainError);
}

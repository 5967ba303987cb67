#include "congruence/blocks.hpp"
#include "congruence/cosquare.hpp"
#include "congruence/jordan.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace congruence;
using MQ = Matrix<Rational>;
using MG = Matrix<Gaussian>;
using MC = Matrix<Complex>;

namespace {

MG randomNonsingular(std::mt19937_64& g, std::size_t n) {
    for (;;) {
        MG a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = Gaussian(frac(long(g() % 5) - 2), frac(long(g() % 3) - 1));
        if (!det(a).isZero()) return a;
    }
}

template <class T>
std::vector<std::pair<T, std::vector<std::size_t>>> flat(const JordanStructure<T>& js) {
    std::vector<std::pair<T, std::vector<std::size_t>>> v;
    for (const auto& e : js.entries) v.emplace_back(e.lambda, e.sizes);
    return v;
}

}  // namespace

TEST_CASE("exact eigenvalues") {
    CHECK(eigenvalueMultiset(jordanBlock<Rational>(3, 2)) == std::vector<Rational>{2, 2, 2});
    CHECK(eigenvalueMultiset(MG{{0, 1}, {-1, 0}}) == std::vector<Gaussian>{Gaussian(0, -1), Gaussian(0, 1)});
    CHECK_THROWS_AS(eigenvalues(MQ{{0, 1}, {2, 0}}), UnsplittablePolynomial);
    CHECK_THROWS_AS(eigenvalues(MQ{{0, 1}, {-1, 0}}), UnsplittablePolynomial);
    CHECK_THROWS_AS(eigenvalues(MG{{0, 1}, {2, 0}}), UnsplittablePolynomial);
    CHECK(eigenvalues(MQ(0, 0)).empty());
}

TEST_CASE("exact roots with awkward denominators") {
    using PG = Poly<Gaussian>;
    std::vector<Gaussian> rs{Gaussian(frac(3, 5), frac(4, 5)), Gaussian(frac(3, 5), frac(-4, 5)), Gaussian(frac(-7, 13)),
                             Gaussian(frac(1, 3), frac(5, 7)), Gaussian(frac(25, 24), frac(-7, 24))};
    PG f = PG::constant(1);
    for (const auto& r : rs) f = f * PG::linear(r);
    f = f * PG::linear(rs[0]) * PG::linear(rs[0]);
    auto roots = polyRoots(f);
    REQUIRE(roots.size() == rs.size());
    for (const auto& r : roots) {
        CHECK(std::find(rs.begin(), rs.end(), r.value) != rs.end());
        CHECK(r.multiplicity == (r.value == rs[0] ? 3u : 1u));
    }
}

TEST_CASE("jordanStructure examples") {
    MQ a = directSum(jordanBlock<Rational>(3, 0), jordanBlock<Rational>(1, 0));
    auto js = jordanStructure(a);
    REQUIRE(js.entries.size() == 1);
    CHECK(js.entries[0].lambda == 0);
    CHECK(js.entries[0].sizes == std::vector<std::size_t>{3, 1});

    auto g3 = jordanStructure(cosquare(gamma<Rational>(3), Involution::Identity));
    REQUIRE(g3.entries.size() == 1);
    CHECK(g3.entries[0].lambda == 1);
    CHECK(g3.entries[0].sizes == std::vector<std::size_t>{3});

    auto d = jordanStructure(MQ{{3, 0}, {0, frac(1, 3)}});
    REQUIRE(d.entries.size() == 2);
    CHECK(d.entries[0].lambda == frac(1, 3));
    CHECK(d.entries[1].lambda == 3);
}

TEST_CASE("generalizedEigenbasis") {
    MQ j = jordanBlock<Rational>(2, 5);
    CHECK(generalizedEigenbasis(j, Rational(5)) == MQ::identity(2));
    CHECK(generalizedEigenbasis(MQ{{1, 0}, {0, 2}}, Rational(1)) == MQ{{1}, {0}});
    CHECK_THROWS_AS(generalizedEigenbasis(MQ{{1, 0}, {0, 2}}, Rational(3)), DomainError);

    std::mt19937_64 g(31);
    MG k = directSum(jordanBlock(2, Gaussian::i()), jordanBlock(1, Gaussian(0, -1)));
    MG s = randomNonsingular(g, 3);
    MG a = inverse(s) * k * s;
    MG b = generalizedEigenbasis(a, Gaussian::i());
    CHECK(b.cols() == 2);
    CHECK(a * b == b * jordanBlock(2, Gaussian::i()));
}

TEST_CASE("jordan structure is a similarity invariant and the basis is exact") {
    std::mt19937_64 g(77);
    for (int t = 0; t < 10; ++t) {
        MG k = directSum(std::vector<MG>{jordanBlock(3, Gaussian(2)), jordanBlock(1, Gaussian(2)),
                                         jordanBlock(2, Gaussian(frac(3, 5), frac(4, 5))), jordanBlock(2, Gaussian(2))});
        MG s = randomNonsingular(g, 8);
        MG a = inverse(s) * k * s;
        auto js = jordanStructure(a, 0, true);
        CHECK(flat(js) == flat(jordanStructure(k)));
        REQUIRE(js.basis);
        CHECK(inverse(*js.basis) * a * *js.basis == jordanMatrix(js));
        // Weyr duality
        for (const auto& e : js.entries) {
            MG nm = a - e.lambda * MG::identity(8);
            for (std::size_t k2 = 1; k2 <= 4; ++k2) {
                std::size_t atLeast = 0;
                for (auto sz : e.sizes) atLeast += sz >= k2;
                CHECK(atLeast == rank(power(nm, unsigned(k2 - 1))) - rank(power(nm, unsigned(k2))));
            }
        }
    }
}

TEST_CASE("float jordan structure of scrambled blocks") {
    std::mt19937_64 g(5);
    MG k = directSum(jordanBlock(3, Gaussian(1)), jordanBlock(2, Gaussian(0, 1)));
    MG s = randomNonsingular(g, 5);
    MC a = convertMatrix<Complex>(MG(inverse(s) * k * s));
    auto js = jordanStructure(a, 1e-8);
    REQUIRE(js.entries.size() == 2);
    CHECK(std::abs(js.entries[0].lambda - Complex(0, 1)) < 1e-8);
    CHECK(js.entries[0].sizes == std::vector<std::size_t>{2});
    CHECK(std::abs(js.entries[1].lambda - Complex(1, 0)) < 1e-8);
    CHECK(js.entries[1].sizes == std::vector<std::size_t>{3});
}

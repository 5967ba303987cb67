#include "congruence/cosquare.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace congruence;
using MQ = Matrix<Rational>;
using MG = Matrix<Gaussian>;
using PG = Poly<Gaussian>;
constexpr auto Id = Involution::Identity;
constexpr auto Cc = Involution::ComplexConjugation;

namespace {

MG randomNonsingular(std::mt19937_64& g, std::size_t n) {
    for (;;) {
        MG a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = Gaussian(frac(long(g() % 5) - 2), frac(long(g() % 5) - 2));
        if (!det(a).isZero()) return a;
    }
}

}  // namespace

TEST_CASE("cosquare examples") {
    CHECK(cosquare(MQ{{7}}, Id) == MQ{{1}});
    CHECK(cosquare(MQ{{0, 1}, {-1, 0}}, Id) == MQ{{-1, 0}, {0, -1}});
    CHECK(cosquare(MG{{Gaussian::i()}}, Cc) == MG{{Gaussian(-1)}});
    CHECK_THROWS_AS(cosquare(MQ{{0}}, Id), SingularMatrix);
}

TEST_CASE("polyDual") {
    CHECK(polyDual(parsePoly<Rational>("x^2-3x+1"), Id) == parsePoly<Rational>("x^2-3x+1"));
    CHECK(polyDual(parsePoly<Rational>("x-2"), Id) == parsePoly<Rational>("x-1/2"));
    // conj(-i)^{-1} (conj(-i) x + 1) = x + 1/i = x - i
    CHECK(polyDual(parsePoly<Gaussian>("x-i"), Cc) == parsePoly<Gaussian>("x-i"));
    CHECK(polyDual(parsePoly<Gaussian>("x-i"), Id) == parsePoly<Gaussian>("x+i"));
    CHECK(polyDual(parsePoly<Gaussian>("x-2i"), Cc) == parsePoly<Gaussian>("x-1/2*i"));
    CHECK_THROWS_AS(polyDual(parsePoly<Rational>("x^2+x"), Id), DomainError);
    auto f = parsePoly<Gaussian>("3x^3+(1+i)x+2-i").monic();
    CHECK(polyDual(polyDual(f, Cc), Cc) == f);
}

TEST_CASE("recurrentExtend") {
    auto f = parsePoly<Rational>("x^2+2x+1");
    auto r = recurrentExtend<Rational>({1, 1}, f, 1, 3);
    CHECK(r.values == std::vector<Rational>{-3, 1, 1});
    CHECK(recurrentExtend<Rational>({4, 5}, f, 0, 2).values == std::vector<Rational>{4, 5});
    CHECK(recurrentExtend<Rational>({5}, parsePoly<Rational>("x-1"), 0, 3).values == std::vector<Rational>{5, 5, 5});
    CHECK_THROWS_AS(recurrentExtend<Rational>({5}, Poly<Rational>::constant(1), 0, 3), DomainError);
    CHECK_THROWS_AS(recurrentExtend<Rational>({1, 2}, parsePoly<Rational>("x-1"), 0, 3), DomainError);
    // re-extending any window reproduces the vector
    auto g = parsePoly<Rational>("x^3-2x^2+1/2x-5");
    auto v = recurrentExtend<Rational>({1, 0, 2}, g, 3, 9).values;
    for (std::size_t s = 0; s + 3 <= v.size(); ++s) {
        std::vector<Rational> w(v.begin() + s, v.begin() + s + 3);
        CHECK(recurrentExtend(w, g, s, 9).values == v);
    }
}

TEST_CASE("rootExists on Jordan blocks") {
    CHECK_FALSE(rootExists(jordanBlock<Rational>(2, 1), Id));
    CHECK(rootExists(jordanBlock<Rational>(3, 1), Id));
    CHECK(rootExists(jordanBlock<Gaussian>(1, Gaussian::i()), Cc));
    CHECK_FALSE(rootExists(jordanBlock<Gaussian>(1, Gaussian(2)), Cc));
    CHECK_THROWS_AS(rootExists(MQ{{1, 0}, {0, 1}}, Id), DomainError);
    CHECK_THROWS_AS(rootExists(MQ{{1, 0}, {0, 2}}, Id), DomainError);
    CHECK_FALSE(rootExists(MQ{{0, 2}, {1, 0}}, Id));  // x^2 - 2 is irreducible but not self-dual
}

TEST_CASE("toeplitzRoot worked examples") {
    CHECK(toeplitzRoot(MQ{{1}}, Id) == MQ{{-2}});
    MQ phi = frobeniusBlock(parsePoly<Rational>("x^2+2x+1"));
    MQ a = toeplitzRoot(phi, Id);
    CHECK(a == MQ{{1, -3}, {1, 1}});
    CHECK(cosquare(a, Id) == phi);
    MG m = toeplitzRoot(MG{{Gaussian(-1)}}, Cc);
    CHECK(m == MG{{Gaussian(0, 2)}});
    CHECK(cosquare(m, Cc) == MG{{Gaussian(-1)}});
    CHECK_THROWS_AS(toeplitzRoot(MQ{{2}}, Id), DomainError);
}

TEST_CASE("toeplitzRoot satisfies A = A* Phi and the conjugate-symmetry of its entries") {
    struct Case { const char* p; Involution inv; };
    const Case cases[] = {{"x-1", Id}, {"x+1", Id}, {"x^2-3x+1", Id}, {"x^2+ix+1", Id},
                          {"x-1", Cc}, {"x+1", Cc}, {"x-i", Cc}, {"x^2-3x+1", Cc}, {"x^2+(3+3i)x+i", Cc}};
    for (const auto& c : cases) {
        PG p = parsePoly<Gaussian>(c.p);
        PG chi = PG::constant(1);
        for (std::size_t s = 1; s <= 3; ++s) {
            chi = chi * p;
            MG phi = frobeniusBlock(chi);
            if (!rootExists(phi, c.inv)) continue;
            MG a = toeplitzRoot(phi, c.inv);
            INFO(c.p << " s=" << s);
            CHECK(a == conjTranspose(a, c.inv) * phi);
            CHECK_FALSE(det(a).isZero());
            const std::size_t n = phi.rows();
            // a_k = conj(a_{1-k}) for k >= 1, read off the first column / first row
            for (std::size_t k = 1; k < n; ++k) CHECK(a(k, 0) == involve(a(0, k - 1), c.inv));
            CHECK(polyDual(chi, c.inv) == chi);
        }
    }
}

TEST_CASE("transportRoot") {
    MQ r{{-2}};
    CHECK(transportRoot(r, MQ::identity(1), Id) == r);
    MQ t = transportRoot(r, MQ{{2}}, Id);
    CHECK(t == MQ{{-8}});
    CHECK(cosquare(t, Id) == MQ{{1}});
    std::mt19937_64 g(17);
    MG phi = frobeniusBlock(parsePoly<Gaussian>("x^3-3x^2+3x-1"));
    MG root = toeplitzRoot(phi, Cc);
    for (int k = 0; k < 5; ++k) {
        MG s = randomNonsingular(g, 3);
        MG tr = transportRoot(root, s, Cc);
        CHECK(cosquare(tr, Cc) == inverse(s) * phi * s);
    }
    CHECK_THROWS_AS(transportRoot(r, MQ{{0}}, Id), SingularMatrix);
}

TEST_CASE("q-forms") {
    MQ phi{{1}};
    CHECK(typeIIIMatrix(phi, QForm<Rational>{{1}}, Id) == toeplitzRoot(phi, Id));
    CHECK(typeIIIMatrix(phi, QForm<Rational>{{frac(-1, 2)}}, Id) == MQ{{1}});
    CHECK_THROWS_AS(qEval(QForm<Rational>{{0, 0}}, phi, Id), DomainError);
    CHECK_THROWS_AS(qEval(QForm<Gaussian>{{Gaussian::i()}}, MG{{1}}, Cc), DomainError);
    MG f = frobeniusBlock(parsePoly<Gaussian>("x^3-x^2+(2+i)x-5"));
    QForm<Gaussian> q{{Gaussian(3), Gaussian(1, 2), Gaussian(0, -1)}};
    MG qf = qEval(q, f, Cc);
    CHECK(qf * f == f * qf);
    // q(Phi) is *-self-adjoint relative to the root: the product is again a root-type block
    MG phi3 = frobeniusBlock(parsePoly<Gaussian>("x^3-3x^2+3x-1"));
    MG t = typeIIIMatrix(phi3, QForm<Gaussian>{{Gaussian(2), Gaussian(0, 1)}}, Cc);
    CHECK(cosquare(t, Cc) == phi3);
}

TEST_CASE("jordanRoot is a cosquare root of the Jordan block") {
    for (std::size_t n = 1; n <= 6; ++n) {
        Gaussian l = (n % 2 == 1) ? Gaussian(1) : Gaussian(-1);
        CHECK(cosquare(jordanRoot(n, l, Id), Id) == jordanBlock(n, l));
        for (Gaussian u : {Gaussian(1), Gaussian(-1), Gaussian::i(), Gaussian(0, -1), Gaussian(frac(3, 5), frac(4, 5)),
                           Gaussian(frac(-5, 13), frac(12, 13))})
            CHECK(cosquare(jordanRoot(n, u, Cc), Cc) == jordanBlock(n, u));
    }
    Matrix<Complex> r = jordanRoot(4, Complex(0.6, 0.8), Cc, 1e-12);
    Matrix<Complex> expect = convertMatrix<Complex>(jordanRoot(4, Gaussian(frac(3, 5), frac(4, 5)), Cc));
    CHECK(approxEqual(r, expect, 1e-10));
    CHECK(approxEqual(cosquare(r, Cc, 1e-12), jordanBlock(4, Complex(0.6, 0.8)), 1e-10));
}

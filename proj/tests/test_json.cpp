#include <catch_amalgamated.hpp>

#include "congruence/congruence.hpp"

using namespace congruence;
using MG = Matrix<Gaussian>;

TEST_CASE("scalar encodings") {
    CHECK(toJson(frac(3, 4)) == json("3/4"));
    CHECK(toJson(Gaussian(1, -2)) == json::array({"1", "-2"}));
    CHECK(toJson(Gaussian(5)) == json("5"));
    CHECK(scalarFromJson<Gaussian>(json::array({"1/2", 3})) == Gaussian(frac(1, 2), 3));
    CHECK(scalarFromJson<Gaussian>(json("2-i")) == Gaussian(2, -1));
    CHECK(scalarFromJson<Rational>(json(0.25)) == frac(1, 4));
    CHECK(scalarFromJson<Quaternion>(json::array({1, 0, "-1", 0})) == Quaternion(1, 0, -1, 0));
    CHECK(scalarFromJson<Complex>(json::array({1.5, -2})) == Complex(1.5, -2));
    CHECK_THROWS_AS(scalarFromJson<Gaussian>(json::array({1, 2, 3})), ParseError);
    CHECK_THROWS_AS(scalarFromJson<Rational>(json("abc")), ParseError);
}

TEST_CASE("matrices and block sums round-trip") {
    MG m{{1, Gaussian(0, 1)}, {frac(-2, 3), 0}};
    CHECK(matrixFromJson<Gaussian>(toJson(m)) == m);
    CHECK_THROWS_AS(matrixFromJson<Gaussian>(json::parse("[[1,2],[3]]")), ParseError);

    std::mt19937_64 g(19);
    for (auto mode : {ClassificationMode::CongruenceAC, ClassificationMode::StarCongruenceAC,
                      ClassificationMode::CongruenceReal}) {
        for (int t = 0; t < 10; ++t) {
            BlockSum<Gaussian> s = randomBlockSum(g, mode, 6);
            json j = json::parse(toJson(s).dump());
            BlockSum<Gaussian> back = blockSumFromJson<Gaussian>(j);
            CHECK(back == s);
            // re-canonicalizes to itself
            CHECK(canonicalize(blockSumMatrix(back), mode) == s);
        }
    }
}

#pragma once

#include "congruence/canon.hpp"

#include <random>

namespace congruence {

/// Random legal exact block sum of total dimension in [1, maxDim], drawn from
/// a fixed small menu of parameters per mode.
inline BlockSum<Gaussian> randomBlockSum(std::mt19937_64& g, ClassificationMode mode, std::size_t maxDim,
                                         bool allowSingular = true) {
    auto pick = [&](std::size_t k) { return static_cast<std::size_t>(g() % k); };
    auto pm = [&] { return pick(2) ? 1 : -1; };
    const Gaussian u35(frac(3, 5), frac(4, 5));
    BlockSum<Gaussian> s{mode, {}};
    std::size_t budget = 1 + pick(maxDim);
    for (int tries = 0; tries < 40 && budget > 0; ++tries) {
        std::size_t n = 1 + pick(3);
        CanonicalBlock<Gaussian> b;
        const Gaussian sgn = (n % 2 == 0) ? Gaussian(1) : Gaussian(-1);  // (-1)^n
        switch (mode) {
            case ClassificationMode::CongruenceAC: {
                switch (pick(allowSingular ? 4 : 3)) {
                    case 0: b = signedRoot<Gaussian>(n, -sgn, 0); break;
                    case 1: b = skewSumPair<Gaussian>(n, sgn); break;
                    case 2: {
                        Gaussian l[] = {Gaussian(2), Gaussian(-3), Gaussian(1, 1), Gaussian(0, 1), u35};
                        b = skewSumPair<Gaussian>(n, l[pick(5)]);
                        break;
                    }
                    default: b = singularJordan<Gaussian>(n);
                }
                break;
            }
            case ClassificationMode::StarCongruenceAC: {
                switch (pick(allowSingular ? 3 : 2)) {
                    case 0: {
                        Gaussian l[] = {Gaussian(1), Gaussian(-1), Gaussian(0, 1), u35};
                        b = signedRoot<Gaussian>(n, l[pick(4)], pm());
                        break;
                    }
                    case 1: {
                        Gaussian l[] = {Gaussian(2), Gaussian(1, 1), Gaussian(0, -3)};
                        b = skewSumPair<Gaussian>(n, l[pick(3)]);
                        break;
                    }
                    default: b = singularJordan<Gaussian>(n);
                }
                break;
            }
            default: {
                switch (pick(allowSingular ? 5 : 4)) {
                    case 0: b = signedRoot<Gaussian>(n, -sgn, pm()); break;
                    case 1: {
                        Gaussian l[] = {Gaussian(2), Gaussian(-3), sgn};
                        b = skewSumPair<Gaussian>(n, l[pick(3)]);
                        break;
                    }
                    case 2: {
                        n = 1 + pick(2);
                        Gaussian l[] = {Gaussian(1, 1), Gaussian(0, 2)};
                        b = realifiedSkewSumPair<Gaussian>(n, l[pick(2)]);
                        break;
                    }
                    case 3: {
                        n = 1 + pick(2);
                        Gaussian l[] = {Gaussian(0, 1), u35};
                        b = signedRealifiedRoot<Gaussian>(n, l[pick(2)], pm());
                        break;
                    }
                    default: b = singularJordan<Gaussian>(n);
                }
            }
        }
        std::size_t d = blockDimension(b);
        if (d > budget) continue;
        s.blocks.push_back(b);
        budget -= d;
    }
    if (s.blocks.empty()) s.blocks.push_back(singularJordan<Gaussian>(1));
    s.normalize();
    return s;
}

}  // namespace congruence

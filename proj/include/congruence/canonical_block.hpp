#pragma once

#include "congruence/cosquare.hpp"

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace congruence {

enum class ClassificationMode { CongruenceAC, CongruenceReal, StarCongruenceAC, GeneralField, QuaternionStar };

enum class BlockKind {
    SingularJordan,
    SkewSumPair,
    SignedRoot,
    RealifiedSkewSumPair,
    SignedRealifiedRoot,
    GeneralFieldTypeII,
    GeneralFieldTypeIII,
};

inline const char* toString(BlockKind k) {
    switch (k) {
        case BlockKind::SingularJordan: return "SingularJordan";
        case BlockKind::SkewSumPair: return "SkewSumPair";
        case BlockKind::SignedRoot: return "SignedRoot";
        case BlockKind::RealifiedSkewSumPair: return "RealifiedSkewSumPair";
        case BlockKind::SignedRealifiedRoot: return "SignedRealifiedRoot";
        case BlockKind::GeneralFieldTypeII: return "GeneralFieldTypeII";
        case BlockKind::GeneralFieldTypeIII: return "GeneralFieldTypeIII";
    }
    return "?";
}

inline BlockKind parseBlockKind(const std::string& s) {
    for (auto k : {BlockKind::SingularJordan, BlockKind::SkewSumPair, BlockKind::SignedRoot,
                   BlockKind::RealifiedSkewSumPair, BlockKind::SignedRealifiedRoot, BlockKind::GeneralFieldTypeII,
                   BlockKind::GeneralFieldTypeIII})
        if (s == toString(k)) return k;
    throw DomainError("unknown block kind '" + s + "'");
}

inline const char* toString(ClassificationMode m) {
    switch (m) {
        case ClassificationMode::CongruenceAC: return "CongruenceAC";
        case ClassificationMode::CongruenceReal: return "CongruenceReal";
        case ClassificationMode::StarCongruenceAC: return "StarCongruenceAC";
        case ClassificationMode::GeneralField: return "GeneralField";
        case ClassificationMode::QuaternionStar: return "QuaternionStar";
    }
    return "?";
}

inline ClassificationMode parseClassificationMode(const std::string& s) {
    if (s == "CongruenceAC" || s == "ac") return ClassificationMode::CongruenceAC;
    if (s == "CongruenceReal" || s == "real") return ClassificationMode::CongruenceReal;
    if (s == "StarCongruenceAC" || s == "star-ac") return ClassificationMode::StarCongruenceAC;
    if (s == "GeneralField" || s == "general") return ClassificationMode::GeneralField;
    if (s == "QuaternionStar" || s == "quaternion") return ClassificationMode::QuaternionStar;
    throw DomainError("unknown classification mode '" + s + "'");
}

/// The involution used to form S*AS in each mode (real mode: transpose).
inline Involution modeInvolution(ClassificationMode m) {
    return m == ClassificationMode::StarCongruenceAC ? Involution::ComplexConjugation : Involution::Identity;
}

template <class T>
struct CanonicalBlock {
    BlockKind kind = BlockKind::SingularJordan;
    std::size_t n = 1;
    T lambda{};
    int epsilon = 0;  // +1, -1, or 0 for "none"
    std::optional<Poly<T>> chi;
    std::optional<QForm<T>> qform;

    friend bool operator==(const CanonicalBlock& a, const CanonicalBlock& b) {
        bool qEq = a.qform.has_value() == b.qform.has_value() && (!a.qform || a.qform->a == b.qform->a);
        return a.kind == b.kind && a.n == b.n && a.lambda == b.lambda && a.epsilon == b.epsilon && a.chi == b.chi &&
               qEq;
    }
};

template <class T>
CanonicalBlock<T> singularJordan(std::size_t n) {
    return {BlockKind::SingularJordan, n, scalar_traits<T>::zero(), 0, std::nullopt, std::nullopt};
}
template <class T>
CanonicalBlock<T> skewSumPair(std::size_t n, const T& lambda) {
    return {BlockKind::SkewSumPair, n, lambda, 0, std::nullopt, std::nullopt};
}
template <class T>
CanonicalBlock<T> signedRoot(std::size_t n, const T& lambda, int eps) {
    return {BlockKind::SignedRoot, n, lambda, eps, std::nullopt, std::nullopt};
}
template <class T>
CanonicalBlock<T> realifiedSkewSumPair(std::size_t n, const T& lambda) {
    return {BlockKind::RealifiedSkewSumPair, n, lambda, 0, std::nullopt, std::nullopt};
}
template <class T>
CanonicalBlock<T> signedRealifiedRoot(std::size_t n, const T& lambda, int eps) {
    return {BlockKind::SignedRealifiedRoot, n, lambda, eps, std::nullopt, std::nullopt};
}

/// Side length of the block's matrix.
template <class T>
std::size_t blockDimension(const CanonicalBlock<T>& b) {
    switch (b.kind) {
        case BlockKind::SingularJordan:
        case BlockKind::SignedRoot: return b.n;
        case BlockKind::SkewSumPair:
        case BlockKind::SignedRealifiedRoot: return 2 * b.n;
        case BlockKind::RealifiedSkewSumPair: return 4 * b.n;
        case BlockKind::GeneralFieldTypeII: return 2 * b.n;
        case BlockKind::GeneralFieldTypeIII: return b.n;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Ordering: kind rank, then n descending, then lambda by components, then
// epsilon (+1 before -1 before none), then chi and q coefficients.

namespace detail {

inline std::vector<double> components(const Complex& z) { return {z.real(), z.imag()}; }

inline int cmp(const Rational& a, const Rational& b) { return a < b ? -1 : (b < a ? 1 : 0); }
inline int cmp(double a, double b) { return a < b ? -1 : (b < a ? 1 : 0); }
inline int cmp(const Gaussian& a, const Gaussian& b) {
    int c = cmp(a.re, b.re);
    return c ? c : cmp(a.im, b.im);
}
inline int cmp(const Complex& a, const Complex& b) {
    int c = cmp(a.real(), b.real());
    return c ? c : cmp(a.imag(), b.imag());
}
template <class T>
int cmp(const std::vector<T>& a, const std::vector<T>& b) {
    for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k)
        if (int c = cmp(a[k], b[k])) return c;
    return cmp(double(a.size()), double(b.size()));
}
inline int epsRank(int e) { return e == 1 ? 0 : (e == -1 ? 1 : 2); }

}  // namespace detail

/// Three-way comparison realizing the block order key.
template <class T>
int compareBlocks(const CanonicalBlock<T>& a, const CanonicalBlock<T>& b) {
    using detail::cmp;
    if (int c = cmp(double(static_cast<int>(a.kind)), double(static_cast<int>(b.kind)))) return c;
    if (a.n != b.n) return a.n > b.n ? -1 : 1;
    if (int c = cmp(a.lambda, b.lambda)) return c;
    if (int c = cmp(double(detail::epsRank(a.epsilon)), double(detail::epsRank(b.epsilon)))) return c;
    std::vector<T> ca = a.chi ? a.chi->coeffs() : std::vector<T>{}, cb = b.chi ? b.chi->coeffs() : std::vector<T>{};
    if (int c = cmp(ca, cb)) return c;
    std::vector<T> qa = a.qform ? a.qform->a : std::vector<T>{}, qb = b.qform ? b.qform->a : std::vector<T>{};
    return cmp(qa, qb);
}

template <class T>
struct BlockOrderKey {
    CanonicalBlock<T> block;
    friend bool operator<(const BlockOrderKey& x, const BlockOrderKey& y) { return compareBlocks(x.block, y.block) < 0; }
    friend bool operator==(const BlockOrderKey& x, const BlockOrderKey& y) { return compareBlocks(x.block, y.block) == 0; }
};

template <class T>
BlockOrderKey<T> blockOrderKey(const CanonicalBlock<T>& b) { return {b}; }

template <class T>
struct BlockSum {
    ClassificationMode mode = ClassificationMode::CongruenceAC;
    std::vector<CanonicalBlock<T>> blocks;

    void normalize() {
        std::stable_sort(blocks.begin(), blocks.end(),
                         [](const auto& a, const auto& b) { return compareBlocks(a, b) < 0; });
    }
    std::size_t dimension() const {
        std::size_t d = 0;
        for (const auto& b : blocks) d += blockDimension(b);
        return d;
    }
    friend bool operator==(const BlockSum& a, const BlockSum& b) { return a.mode == b.mode && a.blocks == b.blocks; }
};

// ---------------------------------------------------------------------------
// Scalar predicates shared by exact and float code

namespace detail {

/// sign(|x|^2 - 1) with tolerance for floats
template <class T>
int absCompareOne(const T& x, double tol) {
    if constexpr (std::is_same_v<T, Gaussian>) {
        Rational d = x.norm() - 1;
        return sgn(d) > 0 ? 1 : (sgn(d) < 0 ? -1 : 0);
    } else {
        double d = std::norm(x) - 1.0;
        return d > tol ? 1 : (d < -tol ? -1 : 0);
    }
}

template <class T>
int imSign(const T& x, double tol) {
    if constexpr (std::is_same_v<T, Gaussian>) return sgn(x.im) > 0 ? 1 : (sgn(x.im) < 0 ? -1 : 0);
    else return x.imag() > tol ? 1 : (x.imag() < -tol ? -1 : 0);
}

template <class T>
int reSign(const T& x, double tol) {
    if constexpr (std::is_same_v<T, Gaussian>) return sgn(x.re) > 0 ? 1 : (sgn(x.re) < 0 ? -1 : 0);
    else return x.real() > tol ? 1 : (x.real() < -tol ? -1 : 0);
}

template <class T>
bool isZeroScalar(const T& x, double tol) { return scalar_traits<T>::isZero(x, tol); }

template <class T>
T signPow(std::size_t k) { return (k % 2 == 0) ? T(1) : T(-1); }  // (-1)^k

template <class T>
T inv(const T& x) { return scalar_traits<T>::inverse(x); }

template <class T>
T conjOf(const T& x) { return involve(x, Involution::ComplexConjugation); }

}  // namespace detail

/// Normalized representative of a type (ii) orbit and whether the orbit is a
/// single point.  Orbits: {l, 1/l} (congruence), {l, 1/conj l} (*congruence),
/// {l, conj l, 1/l, 1/conj l} (real congruence, nonreal l).
template <class T>
std::pair<T, bool> selectRepresentative(const T& lambda, std::size_t n, ClassificationMode mode, double tol = 0) {
    using namespace detail;
    if (isZeroScalar(lambda, tol)) throw DomainError("selectRepresentative: lambda = 0");
    const int a = absCompareOne(lambda, tol);
    switch (mode) {
        case ClassificationMode::CongruenceAC: {
            if (nearlyEqual(lambda, signPow<T>(n + 1), tol))
                throw DomainError("selectRepresentative: lambda = (-1)^{n+1} belongs to type (iii)");
            if (nearlyEqual(lambda, signPow<T>(n), tol)) return {signPow<T>(n), true};
            if (a > 0) return {lambda, false};
            if (a < 0) return {inv(lambda), false};
            // |lambda| = 1, not real: 1/lambda = conj(lambda); keep Im > 0
            return {imSign(lambda, tol) > 0 ? lambda : inv(lambda), false};
        }
        case ClassificationMode::StarCongruenceAC: {
            if (a == 0) throw DomainError("selectRepresentative: |lambda| = 1 belongs to type (iii)");
            return {a > 0 ? lambda : inv(conjOf(lambda)), false};
        }
        case ClassificationMode::CongruenceReal: {
            if (imSign(lambda, tol) == 0) {
                T re = lambda;
                if constexpr (std::is_same_v<T, Complex>) re = Complex(lambda.real(), 0.0);
                if (nearlyEqual(re, signPow<T>(n + 1), tol))
                    throw DomainError("selectRepresentative: a = (-1)^{n+1} belongs to type (iii)");
                if (nearlyEqual(re, signPow<T>(n), tol)) return {signPow<T>(n), true};
                return {a > 0 ? re : inv(re), false};
            }
            if (a == 0) throw DomainError("selectRepresentative: |lambda| = 1 belongs to type (iii')");
            T l = a > 0 ? lambda : inv(lambda);
            if (imSign(l, tol) < 0) l = conjOf(l);
            return {l, false};
        }
        default: throw DomainError("selectRepresentative: unsupported mode");
    }
}

/// Throws DomainError if b is not a legal block of the mode.
template <class T>
void validateBlock(const CanonicalBlock<T>& b, ClassificationMode mode, double tol = 0) {
    using namespace detail;
    auto fail = [&](const std::string& why) {
        throw DomainError(std::string("illegal ") + toString(b.kind) + " block in mode " + toString(mode) + ": " + why);
    };
    if (b.n == 0) fail("n must be positive");
    const bool signedKind = b.kind == BlockKind::SignedRoot || b.kind == BlockKind::SignedRealifiedRoot;
    const bool generalKind = b.kind == BlockKind::GeneralFieldTypeII || b.kind == BlockKind::GeneralFieldTypeIII;
    if (mode == ClassificationMode::QuaternionStar) fail("quaternion blocks are built by the quat module");
    if (generalKind != (mode == ClassificationMode::GeneralField) && b.kind != BlockKind::SingularJordan)
        fail("kind not available in this mode");
    if (generalKind) {
        if (!b.chi) fail("chi missing");
        if (static_cast<std::size_t>(b.chi->degree()) != b.n) fail("n must equal deg chi");
        if (b.epsilon != 0) fail("no sign for this kind");
        if (b.kind == BlockKind::GeneralFieldTypeIII && !b.qform) fail("q-form missing");
        return;
    }
    if (b.chi || b.qform) fail("chi/q only for general-field kinds");
    const bool realifiedKind = b.kind == BlockKind::RealifiedSkewSumPair || b.kind == BlockKind::SignedRealifiedRoot;
    if (realifiedKind && mode != ClassificationMode::CongruenceReal) fail("realified kinds are real-mode only");

    if (b.kind == BlockKind::SingularJordan) {
        if (!isZeroScalar(b.lambda, tol) || b.epsilon != 0) fail("lambda must be 0 and epsilon none");
        return;
    }
    if (isZeroScalar(b.lambda, tol)) fail("lambda must be nonzero");
    const bool wantSign = signedKind && mode != ClassificationMode::CongruenceAC;
    if (wantSign ? (b.epsilon != 1 && b.epsilon != -1) : b.epsilon != 0)
        fail(wantSign ? "epsilon must be +1 or -1" : "epsilon must be none");

    switch (b.kind) {
        case BlockKind::SkewSumPair: {
            if (mode == ClassificationMode::CongruenceReal && imSign(b.lambda, tol) != 0) fail("lambda must be real");
            auto [rep, self] = selectRepresentative(b.lambda, b.n, mode, tol);
            (void)self;
            if (!nearlyEqual(rep, b.lambda, tol)) fail("lambda is not the normalized representative");
            return;
        }
        case BlockKind::SignedRoot:
            if (mode == ClassificationMode::StarCongruenceAC) {
                if (absCompareOne(b.lambda, tol) != 0) fail("|lambda| must be 1");
            } else if (!nearlyEqual(b.lambda, signPow<T>(b.n + 1), tol)) {
                fail("lambda must be (-1)^{n+1}");
            }
            return;
        case BlockKind::RealifiedSkewSumPair:
            if (imSign(b.lambda, tol) <= 0 || absCompareOne(b.lambda, tol) <= 0) fail("need b > 0 and a^2 + b^2 > 1");
            return;
        case BlockKind::SignedRealifiedRoot:
            if (imSign(b.lambda, tol) <= 0 || absCompareOne(b.lambda, tol) != 0) fail("need b > 0 and a^2 + b^2 = 1");
            return;
        default: return;
    }
}

template <class T>
Matrix<T> realifyAny(const Matrix<T>& m) {
    if constexpr (std::is_same_v<T, Gaussian>) return convertMatrix<Gaussian>(realify(m));
    else return convertMatrix<Complex>(realify(m));
}

/// The representative matrix of a block.  For GeneralField kinds inv is the
/// field's involution; other modes fix it.
template <class T>
Matrix<T> blockMatrix(const CanonicalBlock<T>& b, ClassificationMode mode, Involution inv = Involution::Identity,
                      double tol = 0) {
    validateBlock(b, mode, tol);
    const std::size_t n = b.n;
    const T eps = b.epsilon == -1 ? T(-1) : T(1);
    switch (b.kind) {
        case BlockKind::SingularJordan: return jordanBlock(n, scalar_traits<T>::zero());
        case BlockKind::SkewSumPair: return skewSum(jordanBlock(n, b.lambda), Matrix<T>::identity(n));
        case BlockKind::SignedRoot: return eps * jordanRoot(n, b.lambda, modeInvolution(mode), tol);
        case BlockKind::RealifiedSkewSumPair:
            return skewSum(realifyAny(jordanBlock(n, b.lambda)), Matrix<T>::identity(2 * n));
        case BlockKind::SignedRealifiedRoot:
            return eps * realifyAny(jordanRoot(n, b.lambda, Involution::ComplexConjugation, tol));
        case BlockKind::GeneralFieldTypeII:
            if constexpr (scalar_traits<T>::exact) return typeIIMatrix(frobeniusBlock(*b.chi));
            else throw DomainError("general-field blocks are exact-only");
        case BlockKind::GeneralFieldTypeIII:
            if constexpr (scalar_traits<T>::exact) return typeIIIMatrix(frobeniusBlock(*b.chi), *b.qform, inv);
            else throw DomainError("general-field blocks are exact-only");
    }
    throw DomainError("blockMatrix: unknown kind");
}

template <class T>
Matrix<T> blockSumMatrix(const BlockSum<T>& s, Involution inv = Involution::Identity, double tol = 0) {
    std::vector<Matrix<T>> parts;
    for (const auto& b : s.blocks) parts.push_back(blockMatrix(b, s.mode, inv, tol));
    return directSum(parts);
}

template <class T>
std::string describe(const CanonicalBlock<T>& b) {
    std::string s = std::string(toString(b.kind)) + "(n=" + std::to_string(b.n);
    if (b.chi) s += ", chi=" + toString(*b.chi);
    else if (b.kind != BlockKind::SingularJordan) s += ", lambda=" + toString(b.lambda);
    if (b.epsilon) s += b.epsilon > 0 ? ", eps=+1" : ", eps=-1";
    return s + ")";
}

}  // namespace congruence

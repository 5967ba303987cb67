#pragma once

#include "congruence/canon.hpp"

#include <optional>
#include <vector>

namespace congruence {

using QMatrix = Matrix<Quaternion>;

struct EpsilonRule {
    Involution involution = Involution::QuaternionConjugation;
    Gaussian lambda{1};
    std::size_t n = 1;
};

inline void requireQuaternionic(Involution inv) {
    if (inv != Involution::QuaternionConjugation && inv != Involution::QuaternionSemiconjugation)
        throw DomainError("quaternion blocks need quaternionic conjugation or semiconjugation");
}

/// {+1} when the sign is absorbed by a j-conjugation, else {+1, -1}.
inline std::vector<int> epsilonChoices(const EpsilonRule& r) {
    requireQuaternionic(r.involution);
    if (r.n == 0) throw DomainError("epsilonChoices: n must be positive");
    if (r.lambda.norm() != 1) throw DomainError("epsilonChoices: lambda must be unimodular");
    const Gaussian sn = r.n % 2 == 0 ? Gaussian(1) : Gaussian(-1);
    const Gaussian forced = r.involution == Involution::QuaternionConjugation ? sn : Gaussian(-sn.re);
    if (r.lambda == forced) return {1};
    return {1, -1};
}

inline QMatrix toQuaternion(const Matrix<Gaussian>& m) {
    QMatrix q(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Quaternion(m(i, j));
    return q;
}

enum class QuatBlockKind { GammaForm, GammaPrimeForm, DeltaForm };

inline const char* toString(QuatBlockKind k) {
    switch (k) {
        case QuatBlockKind::GammaForm: return "gammaForm";
        case QuatBlockKind::GammaPrimeForm: return "gammaPrimeForm";
        case QuatBlockKind::DeltaForm: return "deltaForm";
    }
    return "?";
}

inline QuatBlockKind parseQuatBlockKind(const std::string& s) {
    if (s == "gammaForm" || s == "gamma") return QuatBlockKind::GammaForm;
    if (s == "gammaPrimeForm" || s == "gamma-prime") return QuatBlockKind::GammaPrimeForm;
    if (s == "deltaForm" || s == "delta") return QuatBlockKind::DeltaForm;
    throw DomainError("unknown quaternion block kind: " + s);
}

/// Does (a, b) satisfy the sign table of the block kind?
inline bool quatSignTableHolds(QuatBlockKind kind, const Rational& a, const Rational& b, std::size_t n, Involution inv) {
    const bool conj = inv == Involution::QuaternionConjugation;
    if (kind != QuatBlockKind::DeltaForm) return conj ? sgn(b) >= 0 : sgn(a) >= 0;
    const bool aRule = (conj && n % 2 == 0) || (!conj && n % 2 == 1);
    return aRule ? sgn(a) >= 0 : sgn(b) >= 0;
}

namespace detail {

inline QMatrix quatShape(QuatBlockKind kind, std::size_t n) {
    switch (kind) {
        case QuatBlockKind::GammaForm: return toQuaternion(gamma<Gaussian>(n));
        case QuatBlockKind::GammaPrimeForm: return toQuaternion(gammaPrime<Gaussian>(n));
        case QuatBlockKind::DeltaForm: return toQuaternion(delta<Gaussian>(n, Gaussian(1)));
    }
    throw DomainError("quatBlock: unknown kind");
}

}  // namespace detail

/// (a+bi) Gamma_n, (a+bi) Gamma'_n or (a+bi) Delta_n(1) over H, a^2 + b^2 = 1.
inline QMatrix quatBlock(QuatBlockKind kind, const Rational& a, const Rational& b, std::size_t n, Involution inv) {
    requireQuaternionic(inv);
    if (n == 0) throw DomainError("quatBlock: n must be positive");
    if (a * a + b * b != 1) throw DomainError("quatBlock: a^2 + b^2 must equal 1");
    if (!quatSignTableHolds(kind, a, b, n, inv))
        throw DomainError(std::string("quatBlock: (a, b) violates the sign table of ") + toString(kind));
    return Quaternion(a, b, 0, 0) * detail::quatShape(kind, n);
}

/// S* A S == B exactly, products kept in order.
inline bool verifyWitness(const QMatrix& a, const QMatrix& b, const QMatrix& s, Involution inv) {
    if (!a.isSquare() || !b.isSquare() || !s.isSquare() || a.rows() != b.rows() || a.rows() != s.rows())
        throw DimensionError("verifyWitness: dimension mismatch");
    if (rank(s) < s.rows()) return false;
    return congruent(a, s, inv) == b;
}

/// j I_n
inline QMatrix jScalarWitness(std::size_t n) { return Quaternion::j() * QMatrix::identity(n); }

/// diag(j, -j, j, -j, ...)
inline QMatrix alternatingJ(std::size_t n) {
    QMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i) s(i, i) = i % 2 == 0 ? Quaternion::j() : -Quaternion::j();
    return s;
}

struct QuatPartner {
    Rational a, b;
    QMatrix witness;  // witness* (a+bi)M witness = (a'+b'i)M
};

/// Image of (a+bi)M under the j-conjugation that moves a
/// table-excluded parameter into the table: j I for the Gamma forms,
/// diag(j,-j,...) for Delta_n(1).
inline QuatPartner quatPartner(QuatBlockKind kind, const Rational& a, const Rational& b, std::size_t n, Involution inv) {
    requireQuaternionic(inv);
    QMatrix shape = detail::quatShape(kind, n);
    QMatrix s = kind == QuatBlockKind::DeltaForm ? alternatingJ(n) : jScalarWitness(n);
    QMatrix img = congruent(Quaternion(a, b, 0, 0) * shape, s, inv);
    // read the new scalar off the first nonzero entry of the shape
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (shape(i, j).isZero()) continue;
            Quaternion z = img(i, j) * shape(i, j).inverse();
            if (sgn(z.c) != 0 || sgn(z.d) != 0 || z * shape != img)
                throw DomainError("quatPartner: image is not a complex multiple of the block");
            return {z.a, z.b, s};
        }
    throw DomainError("quatPartner: empty block");
}

/// S with S* B S = -B for B = sqrt* J_n(lambda) when the sign is forced.
inline std::optional<CongruenceWitness<Quaternion>> forcedSignWitness(const EpsilonRule& r) {
    if (epsilonChoices(r).size() != 1) return std::nullopt;
    QMatrix b = toQuaternion(jordanRoot(r.n, r.lambda, Involution::ComplexConjugation));
    QMatrix s = jScalarWitness(r.n);
    CongruenceWitness<Quaternion> w{s, b, Quaternion(-1) * b, r.involution};
    if (!verifyWitness(w.lhs, w.rhs, w.S, r.involution)) throw DomainError("forcedSignWitness: j I does not negate the block");
    return w;
}

/// diag(1, -1, 1, -1, ...) of size 2n; S^T A^P S is the realification of conj(A).
template <class R>
Matrix<R> realificationFlip(std::size_t n) {
    Matrix<R> s(2 * n, 2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i) s(i, i) = i % 2 == 0 ? R(1) : R(-1);
    return s;
}

}  // namespace congruence

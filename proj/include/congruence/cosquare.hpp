#pragma once

#include "congruence/blocks.hpp"

#include <string>
#include <vector>

namespace congruence {

/// A^{-*} A  (A^{-T} A under the identity involution).
template <class T>
Matrix<T> cosquare(const Matrix<T>& a, Involution inv, double tol = 0) {
    if (!a.isSquare()) throw DimensionError("cosquare: matrix not square");
    return inverse(conjTranspose(a, inv), tol) * a;
}

/// f^v(x) = conj(a_n)^{-1} x^n conj(f)(1/x), for f with nonzero constant term.
template <class T>
Poly<T> polyDual(const Poly<T>& f, Involution inv) {
    if (f.isZero() || scalar_traits<T>::isZero(f.coeff(0), 0))
        throw DomainError("polyDual: constant term must be nonzero");
    const std::size_t n = static_cast<std::size_t>(f.degree());
    std::vector<T> v(n + 1);
    for (std::size_t k = 0; k <= n; ++k) v[k] = involve(f.coeff(n - k), inv);
    return Poly<T>(std::move(v)).monic();
}

template <class T>
struct RecurrentVector {
    std::vector<T> values;
    Poly<T> generator;
};

/// Extends seed, placed at positions [offset, offset + seed.size()) of a window
/// of length targetLen, to the unique f-recurrent vector on the window.  With
/// f = g0 x^m + ... + gm the recurrence is g0 a_l + g1 a_{l+1} + ... + gm a_{l+m} = 0.
template <class T>
RecurrentVector<T> recurrentExtend(const std::vector<T>& seed, const Poly<T>& f, std::size_t offset,
                                   std::size_t targetLen, double tol = 0) {
    using tr = scalar_traits<T>;
    if (f.degree() < 1) throw DomainError("recurrentExtend: generator must have degree at least 1");
    if (tr::isZero(f.coeff(0), 0)) throw DomainError("recurrentExtend: generator needs a nonzero constant term");
    const std::size_t m = static_cast<std::size_t>(f.degree());
    if (seed.size() < m) throw DomainError("recurrentExtend: seed shorter than deg f");
    if (offset + seed.size() > targetLen) throw DomainError("recurrentExtend: seed does not fit in the window");

    auto g = [&](std::size_t k) { return f.coeff(m - k); };  // g_k
    auto residual = [&](const std::vector<T>& v, std::size_t l) {
        T s = tr::zero();
        for (std::size_t k = 0; k <= m; ++k) s += g(k) * v[l + k];
        return s;
    };
    double scale = 1;
    if constexpr (!tr::exact) {
        for (const T& x : seed) scale = std::max(scale, tr::magnitude(x));
        for (const T& x : f.coeffs()) scale = std::max(scale, tr::magnitude(x));
    }
    for (std::size_t l = 0; l + m < seed.size(); ++l)
        if (!tr::isZero(residual(seed, l), tol * scale * scale))
            throw DomainError("recurrentExtend: seed is not f-recurrent");

    std::vector<T> v(targetLen, tr::zero());
    std::copy(seed.begin(), seed.end(), v.begin() + static_cast<std::ptrdiff_t>(offset));
    const T gmInv = tr::inverse(g(m)), g0Inv = tr::inverse(g(0));
    for (std::size_t p = offset + seed.size(); p < targetLen; ++p) {
        T s = tr::zero();
        for (std::size_t k = 0; k < m; ++k) s += g(k) * v[p - m + k];
        v[p] = -(s * gmInv);
    }
    for (std::size_t p = offset; p-- > 0;) {
        T s = tr::zero();
        for (std::size_t k = 1; k <= m; ++k) s += g(k) * v[p + k];
        v[p] = -(s * g0Inv);
    }
    return {std::move(v), f};
}

struct RootExistence {
    bool exists = false;
    std::string reason;
    explicit operator bool() const { return exists; }
};

namespace detail {

template <class T>
Poly<T> powPoly(const Poly<T>& p, std::size_t s) {
    Poly<T> r = Poly<T>::constant(scalar_traits<T>::one());
    for (std::size_t k = 0; k < s; ++k) r = r * p;
    return r;
}

/// Writes chi = p^s with p the square-free part; throws if chi is visibly not a
/// prime power.  Irreducibility of p is checked for degree <= 2 only.
template <class T>
std::pair<Poly<T>, std::size_t> primePowerSplit(const Poly<T>& chi) {
    Poly<T> p = chi.divmod(gcd(chi, chi.derivative())).first.monic();
    const std::size_t d = static_cast<std::size_t>(p.degree());
    const std::size_t n = static_cast<std::size_t>(chi.degree());
    if (d == 0 || n % d != 0 || powPoly(p, n / d) != chi)
        throw DomainError("characteristic polynomial is not a power of an irreducible polynomial");
    if (d == 2) {
        T disc = p.coeff(1) * p.coeff(1) - T(4) * p.coeff(0);
        bool split;
        if constexpr (std::is_same_v<T, Gaussian>) split = gaussianSqrt(disc).has_value();
        else split = rationalSqrt(disc).has_value();
        if (split) throw DomainError("characteristic polynomial is not a power of an irreducible polynomial");
    }
    return {p, n / d};
}

/// Degree of the minimal polynomial = dim span{I, F, F^2, ...}.
template <class T>
std::size_t minimalPolyDegree(const Matrix<T>& f) {
    const std::size_t n = f.rows();
    Matrix<T> vecs(n * n, n + 1);
    Matrix<T> pw = Matrix<T>::identity(n);
    for (std::size_t k = 0; k <= n; ++k) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) vecs(i * n + j, k) = pw(i, j);
        pw = pw * f;
    }
    return rank(vecs);
}

}  // namespace detail

/// Existence of a *cosquare root of a nonsingular Phi that is indecomposable
/// for similarity: p = p^v, and with the identity involution also
/// p != x + (-1)^{n+1}.
template <class T>
RootExistence rootExists(const Matrix<T>& phi, Involution inv) {
    static_assert(scalar_traits<T>::exact && scalar_traits<T>::commutative, "rootExists is exact-only");
    if (!phi.isSquare() || phi.rows() == 0) throw DimensionError("rootExists: need a nonempty square matrix");
    if (det(phi) == scalar_traits<T>::zero()) throw DomainError("rootExists: matrix is singular");
    const std::size_t n = phi.rows();
    Poly<T> chi = charPoly(phi);
    auto [p, s] = detail::primePowerSplit(chi);
    if (detail::minimalPolyDegree(phi) != n)
        throw DomainError("rootExists: matrix is decomposable for similarity (not cyclic)");
    if (polyDual(p, inv) != p) return {false, "p differs from its dual p^v"};
    if (inv == Involution::Identity) {
        T c = (n % 2 == 1) ? T(1) : T(-1);  // (-1)^{n+1}
        if (p == Poly<T>({c, T(1)}))
            return {false, "identity involution and p = x + (-1)^{n+1}"};
    }
    return {true, "p = p^v" + std::string(inv == Involution::Identity ? " and p != x + (-1)^{n+1}" : "")};
}

namespace detail {

template <class T>
bool nearlyEqual(const T& a, const T& b, double tol) {
    if constexpr (scalar_traits<T>::exact) return a == b;
    else {
        double sc = std::max({1.0, scalar_traits<T>::magnitude(a), scalar_traits<T>::magnitude(b)});
        return scalar_traits<T>::magnitude(T(a - b)) <= tol * sc;
    }
}

/// The seed value a: 1 for even n unless p = x + c with c^{n-1} = -1;
/// chi(-1) for odd n unless p = x + 1; otherwise e - conj(e) with e = i.
template <class T>
T seedValue(std::size_t n, const Poly<T>& chi, const Poly<T>& p, Involution inv, double tol) {
    auto fallback = [&]() -> T {
        if (inv == Involution::Identity) throw DomainError("toeplitzRoot: fallback needs a nontrivial involution");
        T e = imagUnit<T>();
        return e - involve(e, inv);
    };
    if (n % 2 == 0) {
        if (p.degree() == 1) {
            T cp = scalar_traits<T>::one();
            for (std::size_t k = 0; k + 1 < n; ++k) cp = cp * p.coeff(0);
            if (nearlyEqual(cp, T(-1), tol)) return fallback();
        }
        return scalar_traits<T>::one();
    }
    bool pIsXPlusOne = p.degree() == 1 && nearlyEqual(p.coeff(0), T(1), tol);
    return pIsXPlusOne ? fallback() : chi(T(-1));
}

/// [a_{i-j}] with entry vector the chi-recurrent extension of (a, 0, ..., 0, conj a).
template <class T>
Matrix<T> toeplitzFromSeed(const Poly<T>& chi, const T& a, Involution inv, double tol) {
    const std::size_t n = static_cast<std::size_t>(chi.degree());
    Matrix<T> root(n, n);
    if (n == 1) {
        root(0, 0) = a;
        return root;
    }
    const std::size_t m = (n % 2 == 0) ? n / 2 : (n + 1) / 2;
    std::vector<T> seed(2 * m, scalar_traits<T>::zero());
    seed.front() = a;
    seed.back() = involve(a, inv);
    // seed covers indices 1-m .. m; the window covers 1-n .. n-1
    auto ext = recurrentExtend(seed, chi, n - m, 2 * n - 1, tol);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) root(i, j) = ext.values[i + n - 1 - j];
    return root;
}

}  // namespace detail

/// The Toeplitz *cosquare root [a_{i-j}] of a Frobenius block.  The fallback
/// value e - conj(e) uses e = i.
template <class T>
Matrix<T> toeplitzRoot(const Matrix<T>& phi, Involution inv) {
    Poly<T> chi = frobeniusPoly(phi);
    auto ok = rootExists(phi, inv);
    if (!ok) throw DomainError("toeplitzRoot: no cosquare root (" + ok.reason + ")");
    Poly<T> p = detail::primePowerSplit(chi).first;
    T a = detail::seedValue(phi.rows(), chi, p, inv, 0);
    return detail::toeplitzFromSeed(chi, a, inv, 0);
}

/// The canonical root of J_n(lambda): the Toeplitz root of the Frobenius block
/// of (x - lambda)^n carried to the Jordan basis v_n = e_1, v_{k-1} = (C - lambda) v_k.
/// Works for floats too; the existence condition is the caller's business.
template <class T>
Matrix<T> jordanRoot(std::size_t n, const T& lambda, Involution inv, double tol = 0) {
    if (n == 0) throw DomainError("jordanRoot: n must be positive");
    Poly<T> p = Poly<T>::linear(lambda);
    Poly<T> chi = Poly<T>::constant(scalar_traits<T>::one());
    for (std::size_t k = 0; k < n; ++k) chi = chi * p;
    Matrix<T> c = frobeniusBlock(chi);
    Matrix<T> root = detail::toeplitzFromSeed(chi, detail::seedValue(n, chi, p, inv, tol), inv, tol);
    Matrix<T> s(n, n);
    Matrix<T> v(n, 1);
    v(0, 0) = scalar_traits<T>::one();
    Matrix<T> shift = c;
    for (std::size_t i = 0; i < n; ++i) shift(i, i) -= lambda;
    for (std::size_t k = n; k-- > 0;) {
        s.setBlock(0, k, v);
        v = shift * v;
    }
    root = congruent(root, s, inv);
    // real rescaling keeps the cosquare; make the leading component +1
    for (const T& x : root.data()) {
        if (scalar_traits<T>::isZero(x, tol)) continue;
        T r = x;
        if constexpr (std::is_same_v<T, Gaussian>) r = x.re != 0 ? Gaussian(x.re) : Gaussian(x.im);
        else if constexpr (std::is_same_v<T, Complex>)
            r = std::fabs(x.real()) > tol * std::abs(x) ? Complex(x.real()) : Complex(x.imag());
        return scalar_traits<T>::inverse(r) * root;
    }
    return root;
}

/// S* R S, whose *cosquare is S^{-1} Phi S when R^{-*} R = Phi.
template <class T>
Matrix<T> transportRoot(const Matrix<T>& r, const Matrix<T>& s, Involution inv, double tol = 0) {
    if (rank(s, tol) < s.rows() || !s.isSquare()) throw SingularMatrix("transportRoot: S must be nonsingular");
    return congruent(r, s, inv);
}

/// q(x) = a_r x^r + ... + a_1 x + a_0 + conj(a_1) x^{-1} + ... + conj(a_r) x^{-r}
template <class T>
struct QForm {
    std::vector<T> a;  // a_0 .. a_r

    std::size_t r() const { return a.empty() ? 0 : a.size() - 1; }

    void validate(Involution inv) const {
        if (a.empty()) throw DomainError("QForm: no coefficients");
        if (involve(a[0], inv) != a[0]) throw DomainError("QForm: a_0 must be fixed by the involution");
        bool allZero = true;
        for (const T& x : a) allZero = allZero && scalar_traits<T>::isZero(x, 0);
        if (allZero) throw DomainError("QForm: q is identically zero");
    }
};

template <class T>
Matrix<T> qEval(const QForm<T>& q, const Matrix<T>& phi, Involution inv) {
    q.validate(inv);
    const std::size_t n = phi.rows();
    Matrix<T> out = q.a[0] * Matrix<T>::identity(n);
    Matrix<T> phiInv = inverse(phi);
    Matrix<T> up = Matrix<T>::identity(n), down = up;
    for (std::size_t k = 1; k < q.a.size(); ++k) {
        up = up * phi;
        down = down * phiInv;
        out += q.a[k] * up;
        out += involve(q.a[k], inv) * down;
    }
    return out;
}

/// Type (iii) general-field block: the Toeplitz root times q(Phi).
template <class T>
Matrix<T> typeIIIMatrix(const Matrix<T>& phi, const QForm<T>& q, Involution inv) {
    return toeplitzRoot(phi, inv) * qEval(q, phi, inv);
}

/// Type (ii) block of a general field: [Phi \ I].
template <class T>
Matrix<T> typeIIMatrix(const Matrix<T>& phi) {
    return skewSum(phi, Matrix<T>::identity(phi.rows()));
}

}  // namespace congruence

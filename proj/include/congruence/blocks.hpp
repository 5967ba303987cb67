#pragma once

#include "congruence/poly.hpp"

#include <utility>
#include <vector>

namespace congruence {

template <class T>
T imagUnit() {
    if constexpr (std::is_same_v<T, Gaussian>) return Gaussian::i();
    else if constexpr (std::is_same_v<T, Complex>) return Complex(0.0, 1.0);
    else if constexpr (std::is_same_v<T, Quaternion>) return Quaternion::i();
    else throw DomainError("this base does not contain i");
}

template <class T>
Matrix<T> jordanBlock(std::size_t n, const T& lambda) {
    Matrix<T> j(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        j(i, i) = lambda;
        if (i + 1 < n) j(i, i + 1) = scalar_traits<T>::one();
    }
    return j;
}

/// Companion block of a monic chi = x^n + c1 x^{n-1} + ... + cn: ones on the
/// subdiagonal, last column (-cn, ..., -c1) from the top.
template <class T>
Matrix<T> frobeniusBlock(const Poly<T>& chi) {
    if (chi.degree() < 1) throw DomainError("frobeniusBlock: degree must be at least 1");
    if (!chi.isMonic()) throw DomainError("frobeniusBlock: polynomial must be monic");
    const std::size_t n = static_cast<std::size_t>(chi.degree());
    Matrix<T> f(n, n);
    for (std::size_t i = 1; i < n; ++i) f(i, i - 1) = scalar_traits<T>::one();
    for (std::size_t i = 0; i < n; ++i) f(i, n - 1) = -chi.coeff(i);
    return f;
}

/// Recovers chi from a matrix in Frobenius form, or throws if the shape is wrong.
template <class T>
Poly<T> frobeniusPoly(const Matrix<T>& f) {
    const std::size_t n = f.rows();
    if (!f.isSquare() || n == 0) throw DomainError("not a Frobenius block");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j + 1 < n; ++j) {
            bool one = (i == j + 1);
            if (one ? f(i, j) != scalar_traits<T>::one() : !scalar_traits<T>::isZero(f(i, j), 0))
                throw DomainError("not a Frobenius block");
        }
    std::vector<T> c(n + 1);
    for (std::size_t i = 0; i < n; ++i) c[i] = -f(i, n - 1);
    c[n] = scalar_traits<T>::one();
    return Poly<T>(std::move(c));
}

/// (M_n, N_n) = ([I_{n-1} | 0], [0 | I_{n-1}]), both (n-1) x n.
template <class T>
std::pair<Matrix<T>, Matrix<T>> mPair(std::size_t n) {
    if (n == 0) throw DomainError("mPair: n must be positive");
    Matrix<T> m(n - 1, n), k(n - 1, n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        m(i, i) = scalar_traits<T>::one();
        k(i, i + 1) = scalar_traits<T>::one();
    }
    return {m, k};
}

/// Anti-triangular Gamma_n: row n-1-r carries (-1)^r in columns r and r+1.
template <class T>
Matrix<T> gamma(std::size_t n) {
    if (n == 0) throw DomainError("gamma: n must be positive");
    Matrix<T> g(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        T s = (r % 2 == 0) ? scalar_traits<T>::one() : T(-scalar_traits<T>::one());
        g(n - 1 - r, r) = s;
        if (r + 1 < n) g(n - 1 - r, r + 1) = s;
    }
    return g;
}

template <class T>
Matrix<T> gammaPrime(std::size_t n) {
    if (n == 0) throw DomainError("gammaPrime: n must be positive");
    const T one = scalar_traits<T>::one();
    Matrix<T> g(n, n);
    const std::size_t upper = (n % 2 == 0) ? n / 2 : (n + 1) / 2;
    for (std::size_t row = 0; row < n; ++row) {
        const std::size_t anti = n - 1 - row;
        if (row < upper) {
            if (n % 2 == 0) {
                g(row, anti) = -one;
                if (row >= 1) g(row, anti + 1) = one;
            } else {
                g(row, anti) = one;
            }
        } else {
            g(row, anti) = one;
            g(row, anti + 1) = one;
        }
    }
    return g;
}

/// Delta_n(mu): mu on the anti-diagonal, i just right of it.
template <class T>
Matrix<T> delta(std::size_t n, const T& mu) {
    if (n == 0) throw DomainError("delta: n must be positive");
    if (scalar_traits<T>::isZero(mu, 0)) throw DomainError("delta: mu must be nonzero");
    const T i = imagUnit<T>();
    Matrix<T> d(n, n);
    for (std::size_t row = 0; row < n; ++row) {
        d(row, n - 1 - row) = mu;
        if (row >= 1) d(row, n - row) = i;
    }
    return d;
}

/// For a 0/1 matrix whose ones form a single path v_0 -> v_1 -> ... (entry
/// (v_k, v_{k+1}) = 1), the permutation P with P^T K P = J_m(0).  Throws if K
/// is not of that shape.
template <class T>
Matrix<T> pathPermutation(const Matrix<T>& k) {
    const std::size_t m = k.rows();
    if (!k.isSquare()) throw DimensionError("pathPermutation: not square");
    std::vector<int> next(m, -1), indeg(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (scalar_traits<T>::isZero(k(i, j), 0)) continue;
            if (k(i, j) != scalar_traits<T>::one() || next[i] != -1) throw DomainError("not a single path");
            next[i] = static_cast<int>(j);
            ++indeg[j];
        }
    std::vector<std::size_t> order;
    for (std::size_t s = 0; s < m; ++s)
        if (indeg[s] == 0) {
            for (int v = static_cast<int>(s); v != -1 && order.size() <= m; v = next[v]) order.push_back(v);
            break;
        }
    if (order.size() != m) throw DomainError("not a single path");
    Matrix<T> p(m, m);
    for (std::size_t c = 0; c < m; ++c) p(order[c], c) = scalar_traits<T>::one();
    return p;
}

}  // namespace congruence

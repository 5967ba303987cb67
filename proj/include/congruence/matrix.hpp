#pragma once

#include "congruence/scalar.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace congruence {

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SingularMatrix : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Dense row-major matrix.  Zero-dimension shapes (m x 0, 0 x n) are legal.
template <class T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : r_(r), c_(c), a_(r * c, scalar_traits<T>::zero()) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        r_ = rows.size();
        c_ = r_ ? rows.begin()->size() : 0;
        a_.reserve(r_ * c_);
        for (const auto& row : rows) {
            if (row.size() != c_) throw DimensionError("ragged matrix literal");
            a_.insert(a_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = scalar_traits<T>::one();
        return m;
    }

    static Matrix diagonal(const std::vector<T>& d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool isSquare() const { return r_ == c_; }
    bool empty() const { return r_ == 0 || c_ == 0; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        if (r0 + nr > r_ || c0 + nc > c_) throw DimensionError("block out of range");
        Matrix b(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    void setBlock(std::size_t r0, std::size_t c0, const Matrix& b) {
        if (r0 + b.r_ > r_ || c0 + b.c_ > c_) throw DimensionError("block out of range");
        for (std::size_t i = 0; i < b.r_; ++i)
            for (std::size_t j = 0; j < b.c_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    Matrix col(std::size_t j) const { return block(0, j, r_, 1); }
    Matrix row(std::size_t i) const { return block(i, 0, 1, c_); }

    void swapRows(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(i, j), (*this)(k, j));
    }
    void swapCols(std::size_t j, std::size_t k) {
        if (j == k) return;
        for (std::size_t i = 0; i < r_; ++i) std::swap((*this)(i, j), (*this)(i, k));
    }

    Matrix& operator+=(const Matrix& o) {
        sameShape(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        sameShape(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }

    const std::vector<T>& data() const { return a_; }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

private:
    void sameShape(const Matrix& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw DimensionError("shape mismatch");
    }

    std::size_t r_ = 0, c_ = 0;
    std::vector<T> a_;
};

template <class T>
Matrix<T> operator+(Matrix<T> a, const Matrix<T>& b) { return a += b; }
template <class T>
Matrix<T> operator-(Matrix<T> a, const Matrix<T>& b) { return a -= b; }
template <class T>
Matrix<T> operator-(const Matrix<T>& a) {
    Matrix<T> r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = -a(i, j);
    return r;
}

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw DimensionError("multiply: inner dimensions differ");
    Matrix<T> r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T& x = a(i, k);
            if (scalar_traits<T>::isZero(x, 0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += x * b(k, j);
        }
    return r;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) { return multiply(a, b); }

// scalar * matrix multiplies on the left, matrix * scalar on the right; the
// distinction matters over the quaternions.
template <class T>
Matrix<T> operator*(const T& s, Matrix<T> m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = s * m(i, j);
    return m;
}
template <class T>
Matrix<T> operator*(Matrix<T> m, const T& s) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) * s;
    return m;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
    Matrix<T> r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
    return r;
}

template <class T>
Matrix<T> conjTranspose(const Matrix<T>& a, Involution inv) {
    Matrix<T> r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = involve(a(i, j), inv);
    return r;
}

template <class T>
Matrix<T> conjugate(const Matrix<T>& a, Involution inv) {
    Matrix<T> r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = involve(a(i, j), inv);
    return r;
}

/// S* A S
template <class T>
Matrix<T> congruent(const Matrix<T>& a, const Matrix<T>& s, Involution inv) {
    return conjTranspose(s, inv) * a * s;
}

template <class To, class From>
Matrix<To> convertMatrix(const Matrix<From>& a) {
    Matrix<To> r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = convertScalar<To>(a(i, j));
    return r;
}

template <class T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() && !a.empty() && !b.empty()) throw DimensionError("hstack: row counts differ");
    std::size_t r = std::max(a.rows(), b.rows());
    Matrix<T> m(r, a.cols() + b.cols());
    m.setBlock(0, 0, a);
    m.setBlock(0, a.cols(), b);
    return m;
}

template <class T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.cols() && !a.empty() && !b.empty()) throw DimensionError("vstack: column counts differ");
    std::size_t c = std::max(a.cols(), b.cols());
    Matrix<T> m(a.rows() + b.rows(), c);
    m.setBlock(0, 0, a);
    m.setBlock(a.rows(), 0, b);
    return m;
}

template <class T>
Matrix<T> directSum(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> m(a.rows() + b.rows(), a.cols() + b.cols());
    m.setBlock(0, 0, a);
    m.setBlock(a.rows(), a.cols(), b);
    return m;
}

template <class T>
Matrix<T> directSum(const std::vector<Matrix<T>>& parts) {
    std::size_t r = 0, c = 0;
    for (const auto& p : parts) { r += p.rows(); c += p.cols(); }
    Matrix<T> m(r, c);
    r = c = 0;
    for (const auto& p : parts) {
        m.setBlock(r, c, p);
        r += p.rows();
        c += p.cols();
    }
    return m;
}

/// [A \ B] = [[0, B], [A, 0]]
template <class T>
Matrix<T> skewSum(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> m(b.rows() + a.rows(), a.cols() + b.cols());
    m.setBlock(0, a.cols(), b);
    m.setBlock(b.rows(), 0, a);
    return m;
}

inline Matrix<Rational> realify(const Matrix<Gaussian>& m) {
    Matrix<Rational> r(2 * m.rows(), 2 * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Gaussian& z = m(i, j);
            r(2 * i, 2 * j) = z.re;
            r(2 * i, 2 * j + 1) = -z.im;
            r(2 * i + 1, 2 * j) = z.im;
            r(2 * i + 1, 2 * j + 1) = z.re;
        }
    return r;
}

inline Matrix<double> realify(const Matrix<Complex>& m) {
    Matrix<double> r(2 * m.rows(), 2 * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Complex& z = m(i, j);
            r(2 * i, 2 * j) = z.real();
            r(2 * i, 2 * j + 1) = -z.imag();
            r(2 * i + 1, 2 * j) = z.imag();
            r(2 * i + 1, 2 * j + 1) = z.real();
        }
    return r;
}

template <class T>
T trace(const Matrix<T>& a) {
    T t = scalar_traits<T>::zero();
    for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
    return t;
}

template <class T>
Matrix<T> power(const Matrix<T>& a, unsigned k) {
    Matrix<T> r = Matrix<T>::identity(a.rows());
    for (unsigned i = 0; i < k; ++i) r = r * a;
    return r;
}

template <class T>
double maxAbs(const Matrix<T>& a) {
    double m = 0;
    for (const T& x : a.data()) m = std::max(m, scalar_traits<T>::magnitude(x));
    return m;
}

template <class T>
bool isZeroMatrix(const Matrix<T>& a, double tol = 0) {
    for (const T& x : a.data())
        if (!scalar_traits<T>::isZero(x, tol)) return false;
    return true;
}

/// Exact equality for exact scalars; relative tolerance tol * max(1, |a|, |b|)
/// for floats.
template <class T>
bool approxEqual(const Matrix<T>& a, const Matrix<T>& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    if constexpr (scalar_traits<T>::exact) {
        return a == b;
    } else {
        double scale = std::max({1.0, maxAbs(a), maxAbs(b)});
        return maxAbs(Matrix<T>(a - b)) <= tol * scale;
    }
}

template <class T>
std::string toString(const Matrix<T>& a) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? ", " : "") << toString(a(i, j));
        os << "]";
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// Eigen bridge (float scalars only)

template <class T>
using EigenMatrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

template <class T>
EigenMatrix<T> toEigen(const Matrix<T>& a) {
    EigenMatrix<T> e(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) e(i, j) = a(i, j);
    return e;
}

template <class T>
Matrix<T> fromEigen(const EigenMatrix<T>& e) {
    Matrix<T> a(e.rows(), e.cols());
    for (Eigen::Index i = 0; i < e.rows(); ++i)
        for (Eigen::Index j = 0; j < e.cols(); ++j) a(i, j) = e(i, j);
    return a;
}

// ---------------------------------------------------------------------------
// Elimination

template <class T>
struct Echelon {
    Matrix<T> R;                      // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan with left row operations only, so it is valid over the
/// quaternions as well.  Float scalars use partial pivoting and treat entries
/// below tol * max|A| as zero.
template <class T>
Echelon<T> rref(Matrix<T> a, double tol = 0) {
    using tr = scalar_traits<T>;
    const double cut = tr::exact ? 0.0 : tol * std::max(1.0, maxAbs(a));
    Echelon<T> out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = a.rows();
        if constexpr (tr::exact) {
            for (std::size_t i = r; i < a.rows(); ++i)
                if (!tr::isZero(a(i, c))) { p = i; break; }
        } else {
            double best = cut;
            for (std::size_t i = r; i < a.rows(); ++i)
                if (tr::magnitude(a(i, c)) > best) { best = tr::magnitude(a(i, c)); p = i; }
        }
        if (p == a.rows()) {
            if constexpr (!tr::exact)
                for (std::size_t i = r; i < a.rows(); ++i) a(i, c) = tr::zero();
            continue;
        }
        a.swapRows(r, p);
        T inv = tr::inverse(a(r, c));
        for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) = inv * a(r, j);
        a(r, c) = tr::one();
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || tr::isZero(a(i, c), 0)) continue;
            T f = a(i, c);
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
            a(i, c) = tr::zero();
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.R = std::move(a);
    return out;
}

/// Fraction-free elimination with full pivoting; returns (rank, det of the
/// leading rank x rank minor after pivoting, sign of the permutation).
template <class T>
struct BareissResult {
    std::size_t rank = 0;
    T last = scalar_traits<T>::one();
    int sign = 1;
};

template <class T>
BareissResult<T> bareiss(Matrix<T> m) {
    static_assert(scalar_traits<T>::exact && scalar_traits<T>::commutative,
                  "Bareiss elimination needs an exact commutative ring");
    using tr = scalar_traits<T>;
    BareissResult<T> out;
    T prev = tr::one();
    const std::size_t lim = std::min(m.rows(), m.cols());
    for (std::size_t k = 0; k < lim; ++k) {
        std::size_t pi = m.rows(), pj = m.cols();
        for (std::size_t i = k; i < m.rows() && pi == m.rows(); ++i)
            for (std::size_t j = k; j < m.cols(); ++j)
                if (!tr::isZero(m(i, j))) { pi = i; pj = j; break; }
        if (pi == m.rows()) break;
        if (pi != k) { m.swapRows(pi, k); out.sign = -out.sign; }
        if (pj != k) { m.swapCols(pj, k); out.sign = -out.sign; }
        for (std::size_t i = k + 1; i < m.rows(); ++i) {
            for (std::size_t j = k + 1; j < m.cols(); ++j)
                m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
            m(i, k) = tr::zero();
        }
        prev = m(k, k);
        out.last = prev;
        ++out.rank;
    }
    return out;
}

template <class T>
std::size_t rank(const Matrix<T>& a, double tol = 0) {
    if (a.empty()) return 0;
    if constexpr (!scalar_traits<T>::exact) {
        Eigen::JacobiSVD<EigenMatrix<T>> svd(toEigen(a));
        const auto& s = svd.singularValues();
        double cut = tol * std::max(1.0, s.size() ? double(s(0)) : 0.0);
        std::size_t r = 0;
        for (Eigen::Index i = 0; i < s.size(); ++i)
            if (s(i) > cut) ++r;
        return r;
    } else if constexpr (scalar_traits<T>::commutative) {
        return bareiss(a).rank;
    } else {
        return rref(a).pivots.size();
    }
}

template <class T>
T det(const Matrix<T>& a) {
    if (!a.isSquare()) throw DimensionError("det: matrix not square");
    if (a.rows() == 0) return scalar_traits<T>::one();
    if constexpr (!scalar_traits<T>::exact) {
        return toEigen(a).determinant();
    } else {
        auto b = bareiss(a);
        if (b.rank < a.rows()) return scalar_traits<T>::zero();
        return b.sign > 0 ? b.last : T(-b.last);
    }
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a, double tol = 0) {
    if (!a.isSquare()) throw DimensionError("inverse: matrix not square");
    const std::size_t n = a.rows();
    auto e = rref(hstack(a, Matrix<T>::identity(n)), tol);
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) throw SingularMatrix("inverse: singular matrix");
    return e.R.block(0, n, n, n);
}

/// Columns spanning { x : A x = 0 }.  Exact scalars: the standard rref basis.
/// Floats: right singular vectors with singular value <= tol * sigma_max.
template <class T>
Matrix<T> nullspace(const Matrix<T>& a, double tol = 0) {
    const std::size_t n = a.cols();
    if constexpr (!scalar_traits<T>::exact) {
        if (a.rows() == 0) return Matrix<T>::identity(n);
        if (n == 0) return Matrix<T>(0, 0);
        Eigen::JacobiSVD<EigenMatrix<T>> svd(toEigen(a), Eigen::ComputeFullV);
        const auto& s = svd.singularValues();
        double cut = tol * std::max(1.0, s.size() ? double(s(0)) : 0.0);
        std::size_t r = 0;
        for (Eigen::Index i = 0; i < s.size(); ++i)
            if (s(i) > cut) ++r;
        EigenMatrix<T> v = svd.matrixV().rightCols(n - r);
        return fromEigen<T>(v);
    } else {
        auto e = rref(a);
        std::vector<bool> isPivot(n, false);
        for (auto p : e.pivots) isPivot[p] = true;
        Matrix<T> basis(n, n - e.pivots.size());
        std::size_t k = 0;
        for (std::size_t f = 0; f < n; ++f) {
            if (isPivot[f]) continue;
            basis(f, k) = scalar_traits<T>::one();
            for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], k) = -e.R(r, f);
            ++k;
        }
        return basis;
    }
}

/// A particular X with A X = B, or nullopt if the system is inconsistent.
template <class T>
std::optional<Matrix<T>> solve(const Matrix<T>& a, const Matrix<T>& b, double tol = 0) {
    if (a.rows() != b.rows()) throw DimensionError("solve: row counts differ");
    const std::size_t n = a.cols();
    auto e = rref(hstack(a, b), tol);
    Matrix<T> x(n, b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] >= n) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.R(r, n + j);
    }
    if constexpr (!scalar_traits<T>::exact) {
        if (!approxEqual(Matrix<T>(a * x), b, std::max(tol, 1e-9) * 10)) return std::nullopt;
    }
    return x;
}

/// Indices of a maximal linearly independent set of columns, greedy from the left.
template <class T>
std::vector<std::size_t> independentColumns(const Matrix<T>& a, double tol = 0) {
    return rref(a, tol).pivots;
}

template <class T>
Matrix<T> selectColumns(const Matrix<T>& a, const std::vector<std::size_t>& idx) {
    Matrix<T> r(a.rows(), idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k)
        for (std::size_t i = 0; i < a.rows(); ++i) r(i, k) = a(i, idx[k]);
    return r;
}

}  // namespace congruence

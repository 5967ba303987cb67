#pragma once

#include "congruence/poly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace congruence {

/// The characteristic polynomial has a root outside the working field, so the
/// exact pipeline cannot split it.
class UnsplittablePolynomial : public std::domain_error {
public:
    explicit UnsplittablePolynomial(const std::string& poly)
        : std::domain_error("polynomial does not split over the working field: " + poly), poly_(poly) {}
    const std::string& polynomial() const { return poly_; }

private:
    std::string poly_;
};

template <class T>
struct Eigenvalue {
    T value;
    std::size_t multiplicity = 0;
    double spread = 0;  // floats: radius of the eigenvalue cluster
};

template <class T>
struct JordanEntry {
    T lambda;
    std::vector<std::size_t> sizes;  // descending
    friend bool operator==(const JordanEntry&, const JordanEntry&) = default;
};

template <class T>
struct JordanStructure {
    std::vector<JordanEntry<T>> entries;
    std::optional<Matrix<T>> basis;  // S with S^{-1} A S = direct sum of the blocks in order
};

// ---------------------------------------------------------------------------
// Ordering of eigenvalues

inline bool lessScalar(const Gaussian& a, const Gaussian& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
}
inline bool lessScalar(const Rational& a, const Rational& b) { return a < b; }
inline bool lessScalar(const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

namespace detail {

using LComplex = std::complex<long double>;

inline LComplex toL(const Gaussian& g) { return {g.re.get_d(), g.im.get_d()}; }

inline std::vector<Complex> numericRoots(const Poly<Gaussian>& g) {
    const int d = g.degree();
    std::vector<Complex> out;
    if (d < 1) return out;
    EigenMatrix<Complex> comp = EigenMatrix<Complex>::Zero(d, d);
    Gaussian li = g.lead().inverse();
    for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) {
        Gaussian c = g.coeff(static_cast<std::size_t>(i)) * li;
        comp(i, d - 1) = -Complex(c.re.get_d(), c.im.get_d());
    }
    Eigen::ComplexEigenSolver<EigenMatrix<Complex>> es(comp, false);
    std::vector<LComplex> lc;
    for (const auto& x : g.coeffs()) lc.push_back(toL(x));
    for (int k = 0; k < d; ++k) {
        LComplex z = es.eigenvalues()(k);
        for (int it = 0; it < 30; ++it) {  // Newton polish; the roots of g are simple
            LComplex p = 0, dp = 0;
            for (auto c = lc.rbegin(); c != lc.rend(); ++c) {
                dp = dp * z + p;
                p = p * z + *c;
            }
            if (std::abs(dp) == 0) break;
            LComplex step = p / dp;
            z -= step;
            if (std::abs(step) <= 1e-18L * std::max<long double>(1, std::abs(z))) break;
        }
        out.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    }
    return out;
}

inline std::optional<Rational> roundToRational(double x, const mpz_class& den) {
    if (!std::isfinite(x)) return std::nullopt;
    double s = x * den.get_d();
    if (std::fabs(s) > 9e15) return std::nullopt;
    Rational r(mpz_class(static_cast<long>(std::llround(s))), den);
    r.canonicalize();
    return r;
}

/// Continued-fraction approximation with bounded denominator.
inline Rational continuedFraction(double x, long maxDen) {
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double v = x;
    for (int k = 0; k < 64; ++k) {
        double a = std::floor(v);
        if (std::fabs(a) > 1e15) break;
        long ai = static_cast<long>(a);
        long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
        if (q2 > maxDen || q2 <= 0) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double f = v - a;
        if (f < 1e-15) break;
        v = 1.0 / f;
    }
    return frac(p1, q1 == 0 ? 1 : q1);
}

/// Distinct roots of a square-free monic g over Q(i), or nullopt if some root
/// lies outside Q(i).
inline std::optional<std::vector<Gaussian>> gaussianRootsSquareFree(const Poly<Gaussian>& g) {
    // D g has Gaussian-integer coefficients and integer leading coefficient D,
    // so every root in Q(i) has the form z / D with z a Gaussian integer.
    mpz_class den = 1;
    for (const auto& c : g.coeffs()) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.re.get_den_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.im.get_den_mpz_t());
    }
    std::vector<Gaussian> roots;
    for (const Complex& r : numericRoots(g)) {
        std::vector<Gaussian> candidates;
        auto re = roundToRational(r.real(), den), im = roundToRational(r.imag(), den);
        if (re && im) candidates.emplace_back(*re, *im);
        candidates.emplace_back(continuedFraction(r.real(), 1000000000L), continuedFraction(r.imag(), 1000000000L));
        bool found = false;
        for (const auto& c : candidates) {
            if (!g(c).isZero()) continue;
            if (std::find(roots.begin(), roots.end(), c) == roots.end()) roots.push_back(c);
            found = true;
            break;
        }
        if (!found) return std::nullopt;
    }
    if (roots.size() != static_cast<std::size_t>(g.degree())) return std::nullopt;
    return roots;
}

inline Poly<Gaussian> toGaussianPoly(const Poly<Rational>& p) {
    std::vector<Gaussian> v;
    for (const auto& c : p.coeffs()) v.emplace_back(c);
    return Poly<Gaussian>(std::move(v));
}
inline Poly<Gaussian> toGaussianPoly(const Poly<Gaussian>& p) { return p; }

}  // namespace detail

/// Roots with multiplicity of f over Q(i) (T = Gaussian) or Q (T = Rational).
template <class T>
std::vector<Eigenvalue<T>> polyRoots(const Poly<T>& f) {
    static_assert(std::is_same_v<T, Gaussian> || std::is_same_v<T, Rational>);
    if (f.isZero()) throw DomainError("polyRoots: zero polynomial");
    std::vector<Eigenvalue<T>> out;
    if (f.degree() == 0) return out;
    Poly<Gaussian> fg = detail::toGaussianPoly(f).monic();
    Poly<Gaussian> g = fg.divmod(gcd(fg, fg.derivative())).first.monic();
    auto roots = detail::gaussianRootsSquareFree(g);
    if (!roots) throw UnsplittablePolynomial(toString(f));
    for (const Gaussian& r : *roots) {
        if constexpr (std::is_same_v<T, Rational>) {
            if (!r.isReal()) throw UnsplittablePolynomial(toString(f));
        }
        std::size_t mult = 0;
        Poly<Gaussian> rest = fg, lin = Poly<Gaussian>::linear(r);
        for (;;) {
            auto [q, rem] = rest.divmod(lin);
            if (!rem.isZero()) break;
            rest = q;
            ++mult;
        }
        if constexpr (std::is_same_v<T, Rational>) out.push_back({r.re, mult, 0});
        else out.push_back({r, mult, 0});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return lessScalar(a.value, b.value); });
    return out;
}

/// Float eigenvalue clusters.  Eigenvalues closer than the cluster radius are
/// merged (single linkage) and represented by their mean.  The radius is
/// max(sqrt(tol), min(0.1, 10 (u |A|)^{1/n})): the second term covers the
/// spread u^{1/k} of a perturbed k x k Jordan block.
inline std::vector<Eigenvalue<Complex>> floatEigenvalues(const Matrix<Complex>& a, double tol) {
    const std::size_t n = a.rows();
    std::vector<Eigenvalue<Complex>> out;
    if (n == 0) return out;
    Eigen::ComplexEigenSolver<EigenMatrix<Complex>> es(toEigen(a), false);
    std::vector<Complex> ev(es.eigenvalues().data(), es.eigenvalues().data() + n);
    const double u = std::numeric_limits<double>::epsilon();
    const double scale = std::max(1.0, maxAbs(a));
    const double radius =
        std::max(std::sqrt(tol), std::min(0.1, 10.0 * std::pow(u * scale, 1.0 / static_cast<double>(n))));
    std::vector<int> comp(n, -1);
    int nc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (comp[i] != -1) continue;
        comp[i] = nc;
        std::vector<std::size_t> stack{i};
        while (!stack.empty()) {
            std::size_t k = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < n; ++j)
                if (comp[j] == -1 && std::abs(ev[j] - ev[k]) <= radius) {
                    comp[j] = nc;
                    stack.push_back(j);
                }
        }
        ++nc;
    }
    for (int c = 0; c < nc; ++c) {
        Complex sum = 0;
        std::size_t m = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (comp[j] == c) { sum += ev[j]; ++m; }
        Complex mean = sum / double(m);
        double spread = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (comp[j] == c) spread = std::max(spread, std::abs(ev[j] - mean));
        out.push_back({mean, m, spread});
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return lessScalar(x.value, y.value); });
    return out;
}

template <class T>
std::vector<Eigenvalue<T>> eigenvalues(const Matrix<T>& a, double tol = 0) {
    if (!a.isSquare()) throw DimensionError("eigenvalues: matrix not square");
    if constexpr (std::is_same_v<T, Complex>) return floatEigenvalues(a, tol > 0 ? tol : kDefaultTolerance);
    else return polyRoots(charPoly(a));
}

/// Flat multiset view, ascending.
template <class T>
std::vector<T> eigenvalueMultiset(const Matrix<T>& a, double tol = 0) {
    std::vector<T> out;
    for (const auto& e : eigenvalues(a, tol))
        for (std::size_t k = 0; k < e.multiplicity; ++k) out.push_back(e.value);
    return out;
}

namespace detail {

template <class T>
Matrix<T> shifted(const Matrix<T>& a, const T& lambda) {
    Matrix<T> n = a;
    for (std::size_t i = 0; i < a.rows(); ++i) n(i, i) -= lambda;
    return n;
}

/// Block sizes (descending) of lambda from the rank chain of N = A - lambda I.
template <class T>
std::vector<std::size_t> sizesFromRanks(const Matrix<T>& a, const T& lambda, std::size_t mult, double tol) {
    const std::size_t n = a.rows();
    Matrix<T> nm = shifted(a, lambda);
    std::vector<std::size_t> r{n};
    Matrix<T> p = Matrix<T>::identity(n);
    while (r.back() > n - mult) {
        p = p * nm;
        std::size_t rk = rank(p, tol);
        if (rk >= r.back()) throw DomainError("jordanStructure: rank chain stalled (inconsistent multiplicity)");
        r.push_back(rk);
        if (r.size() > mult + 1) throw DomainError("jordanStructure: rank chain exceeds multiplicity");
    }
    if (r.back() != n - mult) throw DomainError("jordanStructure: rank chain inconsistent with multiplicity");
    // at least k blocks of size >= k:  g_k = r_{k-1} - r_k
    std::vector<std::size_t> sizes;
    for (std::size_t k = 1; k < r.size(); ++k) {
        std::size_t atLeastK = r[k - 1] - r[k];
        std::size_t atLeastK1 = (k + 1 < r.size()) ? r[k] - r[k + 1] : 0;
        for (std::size_t c = 0; c < atLeastK - atLeastK1; ++c) sizes.push_back(k);
    }
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

}  // namespace detail

/// Jordan chains for lambda, columns [N^{k-1} t, ..., N t, t] per chain, chains
/// by descending size.  A restricted to the span acts as the direct sum of
/// J_k(lambda) in this basis.
template <class T>
Matrix<T> generalizedEigenbasis(const Matrix<T>& a, const T& lambda, double tol = 0) {
    const std::size_t n = a.rows();
    Matrix<T> nm = detail::shifted(a, lambda);
    // kernels of N^k until they stabilize
    std::vector<Matrix<T>> ker{Matrix<T>(n, 0)};
    Matrix<T> p = Matrix<T>::identity(n);
    for (;;) {
        p = p * nm;
        Matrix<T> k = nullspace(p, tol);
        if (k.cols() == ker.back().cols()) break;
        ker.push_back(k);
        if (k.cols() == n) break;
    }
    if (ker.size() == 1) throw DomainError("generalizedEigenbasis: not an eigenvalue");
    const std::size_t top = ker.size() - 1;

    struct Chain { Matrix<T> t; std::size_t size; };
    std::vector<Chain> chains;
    for (std::size_t k = top; k >= 1; --k) {
        Matrix<T> covered = ker[k - 1];
        for (const auto& c : chains) {
            Matrix<T> v = c.t;
            for (std::size_t j = 0; j < c.size - k; ++j) v = nm * v;
            covered = hstack(covered, v);
        }
        std::size_t base = rank(covered, tol);
        for (std::size_t j = 0; j < ker[k].cols(); ++j) {
            Matrix<T> cand = hstack(covered, ker[k].col(j));
            std::size_t rk = rank(cand, tol);
            if (rk > base) {
                covered = cand;
                base = rk;
                chains.push_back({ker[k].col(j), k});
            }
        }
    }
    std::size_t total = 0;
    for (const auto& c : chains) total += c.size;
    Matrix<T> s(n, total);
    std::size_t col = 0;
    for (const auto& c : chains) {
        std::vector<Matrix<T>> vs{c.t};
        for (std::size_t j = 1; j < c.size; ++j) vs.push_back(nm * vs.back());
        for (std::size_t j = c.size; j-- > 0;) s.setBlock(0, col++, vs[j]);
    }
    return s;
}

template <class T>
JordanStructure<T> jordanStructure(const Matrix<T>& a, double tol = 0, bool withBasis = false) {
    if (!a.isSquare()) throw DimensionError("jordanStructure: matrix not square");
    double rtol = tol;
    if constexpr (!scalar_traits<T>::exact) rtol = tol > 0 ? tol : kDefaultTolerance;
    JordanStructure<T> js;
    Matrix<T> basis(a.rows(), 0);
    for (const auto& ev : eigenvalues(a, rtol)) {
        js.entries.push_back({ev.value, detail::sizesFromRanks(a, ev.value, ev.multiplicity, rtol)});
        if (withBasis) basis = hstack(basis, generalizedEigenbasis(a, ev.value, rtol));
    }
    if (withBasis) js.basis = basis;
    return js;
}

/// Direct sum of the Jordan blocks described by js, in order.
template <class T>
Matrix<T> jordanMatrix(const JordanStructure<T>& js) {
    std::vector<Matrix<T>> parts;
    for (const auto& e : js.entries)
        for (auto s : e.sizes) {
            Matrix<T> j(s, s);
            for (std::size_t i = 0; i < s; ++i) {
                j(i, i) = e.lambda;
                if (i + 1 < s) j(i, i + 1) = scalar_traits<T>::one();
            }
            parts.push_back(j);
        }
    return directSum(parts);
}

}  // namespace congruence

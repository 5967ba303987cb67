#pragma once

#include "congruence/canonical_block.hpp"
#include "congruence/jordan.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace congruence {

template <class T>
struct CongruenceWitness {
    Matrix<T> S, lhs, rhs;
    Involution involution = Involution::Identity;

    /// S* lhs S == rhs, exactly or to relative tolerance.
    bool verify(double tol = 0) const {
        if (!S.isSquare() || S.rows() != lhs.rows() || !lhs.isSquare()) return false;
        if (rank(S, tol) < S.rows()) return false;
        return approxEqual(congruent(lhs, S, involution), rhs, tol);
    }
};

template <class T>
struct RegularizationResult {
    std::vector<std::size_t> singularBlocks;  // sizes m of the J_m(0) summands, in discovery order
    Matrix<T> core;
    CongruenceWitness<T> witness;  // S* A S = core + J_{m1}(0) + J_{m2}(0) + ...
};

namespace detail {

template <class T>
T pickLargest(const Matrix<T>& p, std::size_t& bi, std::size_t& bj, double tol) {
    using tr = scalar_traits<T>;
    double best = -1;
    const double cut = tr::exact ? 0.0 : tol * std::max(1.0, maxAbs(p));
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j) {
            if (tr::isZero(p(i, j), cut)) continue;
            double mag = tr::magnitude(p(i, j));
            if constexpr (tr::exact) {
                bi = i; bj = j;
                return p(i, j);
            }
            if (mag > best) { best = mag; bi = i; bj = j; }
        }
    if (best < 0) throw DomainError("no pivot");
    return p(bi, bj);
}

/// Kernel of the stacked chain conditions.  blocks[r] lists (column block,
/// which matrix) pairs whose sum must vanish.
template <class T>
Matrix<T> chainKernel(const Matrix<T>& a, const Matrix<T>& as, std::size_t nBlocks,
                      const std::vector<std::vector<std::pair<std::size_t, int>>>& rowsSpec, double tol) {
    const std::size_t k = a.rows();
    if (rowsSpec.empty()) return Matrix<T>::identity(nBlocks * k);
    Matrix<T> m(rowsSpec.size() * k, nBlocks * k);
    for (std::size_t r = 0; r < rowsSpec.size(); ++r)
        for (auto [blk, which] : rowsSpec[r]) {
            // which: +1 -> +A, -1 -> -A*, +2 -> +A*
            Matrix<T> piece = which == 1 ? a : (which == -1 ? Matrix<T>(-as) : as);
            m.setBlock(r * k, blk * k, piece);
        }
    return nullspace(m, tol);
}

/// Basis e_1..e_m of a subspace on which the form x* A y is J_m(0) and which
/// splits off, or nullopt if no such chain exists for this m.
template <class T>
std::optional<Matrix<T>> findChain(const Matrix<T>& a, std::size_t m, Involution inv, double tol) {
    using tr = scalar_traits<T>;
    const std::size_t k = a.rows();
    const Matrix<T> as = conjTranspose(a, inv);
    auto f = [&](const Matrix<T>& x, const Matrix<T>& y) { return (conjTranspose(x, inv) * a * y)(0, 0); };
    auto seg = [&](const Matrix<T>& v, std::size_t i) { return v.block(i * k, 0, k, 1); };

    Matrix<T> e(k, m);
    if (m % 2 == 1) {
        const std::size_t np = (m + 1) / 2;
        // A x1 = 0, A x_{i+1} = A* x_i, A* x_np = 0
        std::vector<std::vector<std::pair<std::size_t, int>>> xs{{{0, 1}}};
        for (std::size_t i = 0; i + 1 < np; ++i) xs.push_back({{i + 1, 1}, {i, -1}});
        xs.push_back({{np - 1, 2}});
        Matrix<T> kx = chainKernel(a, as, np, xs, tol);
        if (kx.cols() == 0) return std::nullopt;
        if (m == 1) {
            std::size_t best = 0;
            double bm = -1;
            for (std::size_t c = 0; c < kx.cols(); ++c) {
                double mag = maxAbs(kx.col(c));
                if (mag > bm) { bm = mag; best = c; }
            }
            e.setBlock(0, 0, kx.col(best));
            return e;
        }
        // A y_{k+1} = A* y_k
        std::vector<std::vector<std::pair<std::size_t, int>>> ys;
        for (std::size_t i = 0; i + 2 < np; ++i) ys.push_back({{i + 1, 1}, {i, -1}});
        Matrix<T> ky = chainKernel(a, as, np - 1, ys, tol);
        Matrix<T> pm = conjTranspose(kx.block(0, 0, k, kx.cols()), inv) * a * ky.block(0, 0, k, ky.cols());
        std::size_t bi = 0, bj = 0;
        T p0;
        try { p0 = pickLargest(pm, bi, bj, tol); } catch (const DomainError&) { return std::nullopt; }
        Matrix<T> xv = kx.col(bi), yv = ky.col(bj) * tr::inverse(p0);
        std::vector<Matrix<T>> x, y;
        for (std::size_t i = 0; i < np; ++i) x.push_back(seg(xv, i));
        for (std::size_t i = 0; i + 1 < np; ++i) y.push_back(seg(yv, i));
        // tau_d, d = 1 .. np-1; h(d) = f(y_1, y_{1+d})
        std::vector<T> tau(np, tr::zero());
        for (std::size_t d = 1; d + 2 <= np; ++d) tau[d] = -involve(f(y[0], y[d]), inv);
        tau[np - 1] = -f(y[np - 2], y[0]);
        std::vector<Matrix<T>> yc = y;
        for (std::size_t kk = 0; kk + 1 < np; ++kk)
            for (std::size_t j = kk + 1; j < np; ++j) yc[kk] += x[j] * tau[j - kk];
        for (std::size_t i = 0; i < np; ++i) e.setBlock(0, 2 * i, x[i]);
        for (std::size_t i = 0; i + 1 < np; ++i) e.setBlock(0, 2 * i + 1, yc[i]);
    } else {
        const std::size_t np = m / 2;
        std::vector<std::vector<std::pair<std::size_t, int>>> xs{{{0, 1}}};
        for (std::size_t i = 0; i + 1 < np; ++i) xs.push_back({{i + 1, 1}, {i, -1}});
        Matrix<T> kx = chainKernel(a, as, np, xs, tol);
        std::vector<std::vector<std::pair<std::size_t, int>>> ys;
        for (std::size_t i = 0; i + 1 < np; ++i) ys.push_back({{i + 1, 1}, {i, -1}});
        ys.push_back({{np - 1, 2}});
        Matrix<T> ky = chainKernel(a, as, np, ys, tol);
        if (kx.cols() == 0 || ky.cols() == 0) return std::nullopt;
        Matrix<T> pm = conjTranspose(kx.block(0, 0, k, kx.cols()), inv) * a * ky.block(0, 0, k, ky.cols());
        std::size_t bi = 0, bj = 0;
        try { pickLargest(pm, bi, bj, tol); } catch (const DomainError&) { return std::nullopt; }
        Matrix<T> xv = kx.col(bi), yv = ky.col(bj);
        std::vector<Matrix<T>> x, y;
        for (std::size_t i = 0; i < np; ++i) { x.push_back(seg(xv, i)); y.push_back(seg(yv, i)); }
        // p(d) = f(x_{1+d}, y_1); sigma = 1/p as a power series
        std::vector<T> p(np), sigma(np, tr::zero());
        for (std::size_t d = 0; d < np; ++d) p[d] = f(x[d], y[0]);
        T p0inv = tr::inverse(p[0]);
        sigma[0] = p0inv;
        for (std::size_t d = 1; d < np; ++d) {
            T s = tr::zero();
            for (std::size_t j = 1; j <= d; ++j) s += p[j] * sigma[d - j];
            sigma[d] = -(s * p0inv);
        }
        for (std::size_t i = 0; i < np; ++i) {
            Matrix<T> yc(k, 1);
            for (std::size_t d = 0; i + d < np; ++d) yc += y[i + d] * sigma[d];
            e.setBlock(0, 2 * i, x[i]);
            e.setBlock(0, 2 * i + 1, yc);
        }
    }
    Matrix<T> gram = conjTranspose(e, inv) * a * e;
    if (!approxEqual(gram, jordanBlock(m, tr::zero()), tol > 0 ? std::sqrt(tol) : 0)) return std::nullopt;
    return e;
}

}  // namespace detail

/// Splits A as core + J_{m1}(0) + ... under S* A S.  Chains are peeled one at a
/// time, smallest m first, each verified against J_m(0) before splitting.
template <class T>
RegularizationResult<T> regularize(const Matrix<T>& a, Involution inv, double tol = 0) {
    if (!a.isSquare()) throw DimensionError("regularize: matrix not square");
    const std::size_t n = a.rows();
    RegularizationResult<T> res;
    Matrix<T> basis = Matrix<T>::identity(n), cur = a, singularCols(n, 0);
    std::vector<Matrix<T>> jordanParts;
    while (cur.rows() > 0 && rank(cur, tol) < cur.rows()) {
        const std::size_t k = cur.rows();
        bool found = false;
        for (std::size_t m = 1; m <= k && !found; ++m) {
            auto e = detail::findChain(cur, m, inv, tol);
            if (!e) continue;
            Matrix<T> w;
            if (m == 1) {
                auto idx = independentColumns(hstack(*e, Matrix<T>::identity(k)), tol);
                std::vector<std::size_t> pick;
                for (auto c : idx)
                    if (c > 0) pick.push_back(c - 1);
                w = selectColumns(Matrix<T>::identity(k), pick);
            } else {
                Matrix<T> rowsA = conjTranspose(*e, inv) * cur;
                Matrix<T> rowsB = conjTranspose(Matrix<T>(cur * *e), inv);
                w = nullspace(vstack(rowsA, rowsB), tol);
            }
            if (w.cols() != k - m || rank(hstack(*e, w), tol) != k) continue;
            singularCols = hstack(singularCols, Matrix<T>(basis * *e));
            jordanParts.push_back(jordanBlock(m, scalar_traits<T>::zero()));
            res.singularBlocks.push_back(m);
            basis = basis * w;
            cur = congruent(cur, w, inv);
            found = true;
        }
        if (!found) throw DomainError("regularize: failed to split a singular summand");
    }
    res.core = cur;
    std::vector<Matrix<T>> parts{cur};
    parts.insert(parts.end(), jordanParts.begin(), jordanParts.end());
    res.witness = {hstack(basis, singularCols), a, directSum(parts), inv};
    if constexpr (!scalar_traits<T>::exact) res.witness.rhs = congruent(a, res.witness.S, inv);
    return res;
}

// ---------------------------------------------------------------------------
// Sign extraction

/// (positive, negative) counts of a Hermitian matrix.
template <class T>
std::pair<std::size_t, std::size_t> hermitianInertia(const Matrix<T>& h, double tol = 0) {
    const auto cc = Involution::ComplexConjugation;
    if constexpr (!scalar_traits<T>::exact) {
        if (h.rows() == 0) return {0, 0};
        EigenMatrix<Complex> e = toEigen(Matrix<Complex>((h + conjTranspose(h, cc)) * Complex(0.5)));
        Eigen::SelfAdjointEigenSolver<EigenMatrix<Complex>> es(e, Eigen::EigenvaluesOnly);
        const auto& ev = es.eigenvalues();
        double sc = std::max(1.0, ev.cwiseAbs().maxCoeff());
        std::size_t p = 0, q = 0;
        for (Eigen::Index i = 0; i < ev.size(); ++i) {
            if (ev(i) > tol * sc) ++p;
            else if (ev(i) < -tol * sc) ++q;
        }
        return {p, q};
    } else {
        if (h != conjTranspose(h, cc)) throw DomainError("hermitianInertia: matrix is not Hermitian");
        Matrix<T> m = h;
        std::size_t p = 0, q = 0;
        while (m.rows() > 0) {
            const std::size_t n = m.rows();
            std::size_t piv = n;
            for (std::size_t i = 0; i < n && piv == n; ++i)
                if (!m(i, i).isZero()) piv = i;
            if (piv == n) {
                std::size_t pi = n, pj = n;
                for (std::size_t i = 0; i < n && pi == n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        if (!m(i, j).isZero()) { pi = i; pj = j; break; }
                if (pi == n) break;
                // v_i <- v_i + t v_j with t = conj(m_ij) makes the diagonal 2|m_ij|^2
                T t = m(pi, pj).conj();
                for (std::size_t r = 0; r < n; ++r) m(r, pi) += m(r, pj) * t;
                for (std::size_t c = 0; c < n; ++c) m(pi, c) += t.conj() * m(pj, c);
                piv = pi;
            }
            T d = m(piv, piv);
            (sgn(d.re) > 0 ? p : q)++;
            Matrix<T> next(n - 1, n - 1);
            for (std::size_t i = 0, ii = 0; i < n; ++i) {
                if (i == piv) continue;
                for (std::size_t j = 0, jj = 0; j < n; ++j) {
                    if (j == piv) continue;
                    next(ii, jj++) = m(i, j) - m(i, piv) * m(piv, j) / d;
                }
                ++ii;
            }
            m = std::move(next);
        }
        return {p, q};
    }
}

/// Inertia of c K* C N^{k-1} K on K = ker N^k, N = Phi/lambda - I, with c chosen
/// so the form is Hermitian.  Only the size-k chains of lambda contribute.
template <class T>
std::pair<std::size_t, std::size_t> chainFormInertia(const Matrix<T>& c, const Matrix<T>& phi, const T& lambda,
                                                     std::size_t k, double tol = 0) {
    const auto cc = Involution::ComplexConjugation;
    const std::size_t n = c.rows();
    Matrix<T> nm = scalar_traits<T>::inverse(lambda) * phi - Matrix<T>::identity(n);
    Matrix<T> kk = nullspace(power(nm, static_cast<unsigned>(k)), tol);
    Matrix<T> h = conjTranspose(kk, cc) * c * power(nm, static_cast<unsigned>(k - 1)) * kk;
    T nu = involve(lambda, cc) * ((k % 2 == 1) ? T(1) : T(-1));
    T scale = detail::nearlyEqual(nu, T(-1), tol > 0 ? std::sqrt(tol) : 0) ? imagUnit<T>() : T(T(1) + nu);
    return hermitianInertia(Matrix<T>(scale * h), tol > 0 ? std::sqrt(tol) : 0);
}

/// Sign multiset (n, eps) of the blocks of core at the unimodular eigenvalue
/// lambda of its cosquare.  sizes lists the Jordan sizes of lambda to resolve.
template <class T>
std::vector<std::pair<std::size_t, int>> extractSigns(const Matrix<T>& core, const T& lambda,
                                                      const std::vector<std::size_t>& sizes, ClassificationMode mode,
                                                      double tol = 0) {
    if (mode != ClassificationMode::StarCongruenceAC && mode != ClassificationMode::CongruenceReal)
        throw DomainError("extractSigns: mode has no sign data");
    const auto cc = Involution::ComplexConjugation;
    Matrix<T> phi = cosquare(core, cc, tol);
    const bool realified = mode == ClassificationMode::CongruenceReal && detail::imSign(lambda, tol) != 0;
    std::map<std::size_t, std::size_t> count;
    for (auto s : sizes) ++count[s];
    std::vector<std::pair<std::size_t, int>> out;
    for (auto it = count.rbegin(); it != count.rend(); ++it) {
        const std::size_t k = it->first;
        auto [p, q] = chainFormInertia(core, phi, lambda, k, tol);
        if (p + q != it->second)
            throw DomainError("extractSigns: sizes do not match the Jordan structure of the cosquare");
        CanonicalBlock<T> ref = realified ? signedRealifiedRoot(k, lambda, 1) : signedRoot(k, lambda, 1);
        Matrix<T> r = blockMatrix(ref, mode, Involution::Identity, tol > 0 ? std::sqrt(tol) : 0);
        auto [rp, rq] = chainFormInertia(r, cosquare(r, cc, tol), lambda, k, tol);
        if (rp + rq != 1) throw DomainError("extractSigns: reference block does not calibrate");
        std::size_t plus = rp == 1 ? p : q, minus = rp == 1 ? q : p;
        for (std::size_t i = 0; i < plus; ++i) out.emplace_back(k, 1);
        for (std::size_t i = 0; i < minus; ++i) out.emplace_back(k, -1);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Canonicalization

struct ConfidenceReport {
    bool exact = true;
    double tolerance = 0;
    double minCoreSingularValue = 0;  // smallest singular value of the nonsingular core
    double maxClusterSpread = 0;      // largest eigenvalue cluster radius of the cosquare
    double minClusterGap = 0;         // smallest distance between distinct eigenvalue clusters
    std::vector<std::string> notes;
};

template <class T>
struct CanonicalizationResult {
    BlockSum<T> blocks;
    RegularizationResult<T> regularization;
    ConfidenceReport report;
};

namespace detail {

/// Snaps float eigenvalues onto +-1, the unit circle and the real axis.
template <class T>
T snapEigenvalue(const T& l, double ltol) {
    if constexpr (std::is_same_v<T, Complex>) {
        Complex z = l;
        if (std::fabs(z.imag()) <= ltol) z = Complex(z.real(), 0.0);
        if (std::fabs(std::abs(z) - 1.0) <= ltol) z /= std::abs(z);
        if (std::abs(z - 1.0) <= ltol) z = 1.0;
        if (std::abs(z + 1.0) <= ltol) z = -1.0;
        return z;
    } else {
        return l;
    }
}

template <class T>
bool isSignPow(const T& l, std::size_t k, double ltol) { return nearlyEqual(l, signPow<T>(k), ltol); }

}  // namespace detail

template <class T>
CanonicalizationResult<T> canonicalizeDetailed(const Matrix<T>& a, ClassificationMode mode, double tol = 0) {
    static_assert(std::is_same_v<T, Gaussian> || std::is_same_v<T, Complex>,
                  "canonicalize works over Q(i) or complex floats");
    using namespace detail;
    constexpr bool exact = scalar_traits<T>::exact;
    if (!a.isSquare()) throw DimensionError("canonicalize: matrix not square");
    if (mode != ClassificationMode::CongruenceAC && mode != ClassificationMode::StarCongruenceAC &&
        mode != ClassificationMode::CongruenceReal)
        throw DomainError(std::string("canonicalize: unsupported mode ") + toString(mode));
    if (!exact && tol <= 0) tol = kDefaultTolerance;
    const double ltol = exact ? 0.0 : std::sqrt(tol);
    if (mode == ClassificationMode::CongruenceReal)
        for (const T& x : a.data())
            if (imSign(x, exact ? 0.0 : tol * std::max(1.0, maxAbs(a))) != 0)
                throw DomainError("canonicalize: real mode needs a real matrix");

    CanonicalizationResult<T> out;
    out.report.exact = exact;
    out.report.tolerance = tol;
    const Involution inv = modeInvolution(mode);
    out.regularization = regularize(a, inv, tol);
    BlockSum<T>& bs = out.blocks;
    bs.mode = mode;
    for (auto m : out.regularization.singularBlocks) bs.blocks.push_back(singularJordan<T>(m));

    const Matrix<T>& core = out.regularization.core;
    if (core.rows() > 0) {
        if constexpr (!exact) {
            Eigen::JacobiSVD<EigenMatrix<T>> svd(toEigen(core));
            out.report.minCoreSingularValue = svd.singularValues()(svd.singularValues().size() - 1);
        }
        Matrix<T> phi = cosquare(core, inv, tol);
        JordanStructure<T> js = jordanStructure(phi, tol);
        if constexpr (!exact) {
            auto ev = eigenvalues(phi, tol);
            double gap = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < ev.size(); ++i) {
                out.report.maxClusterSpread = std::max(out.report.maxClusterSpread, ev[i].spread);
                for (std::size_t j = i + 1; j < ev.size(); ++j) gap = std::min(gap, std::abs(ev[i].value - ev[j].value));
            }
            out.report.minClusterGap = std::isfinite(gap) ? gap : 0;
        }
        // eigenvalue -> size -> count
        struct Entry { T lambda; std::map<std::size_t, std::size_t> count; std::vector<std::size_t> sizes; };
        std::vector<Entry> entries;
        for (const auto& e : js.entries) {
            Entry en{snapEigenvalue(e.lambda, ltol), {}, e.sizes};
            for (auto s : e.sizes) ++en.count[s];
            entries.push_back(en);
        }
        auto partnerCount = [&](const T& mu, std::size_t k) -> std::size_t {
            for (const auto& e : entries)
                if (nearlyEqual(e.lambda, mu, ltol)) {
                    auto it = e.count.find(k);
                    return it == e.count.end() ? 0 : it->second;
                }
            return 0;
        };
        auto requireEven = [](std::size_t c) {
            if (c % 2 != 0) throw DomainError("canonicalize: unpaired Jordan blocks at a self-paired eigenvalue");
            return c / 2;
        };

        for (const auto& e : entries) {
            const T& l = e.lambda;
            const int absCmp = absCompareOne(l, ltol);
            const bool real = imSign(l, ltol) == 0;
            std::vector<std::size_t> signedSizes;
            for (auto [k, c] : e.count) {
                switch (mode) {
                    case ClassificationMode::CongruenceAC: {
                        if (isSignPow(l, k + 1, ltol)) {
                            for (std::size_t i = 0; i < c; ++i) bs.blocks.push_back(signedRoot(k, signPow<T>(k + 1), 0));
                        } else if (isSignPow(l, k, ltol)) {
                            std::size_t pairs = requireEven(c);
                            for (std::size_t i = 0; i < pairs; ++i) bs.blocks.push_back(skewSumPair(k, signPow<T>(k)));
                        } else {
                            auto [rep, self] = selectRepresentative(l, k, mode, ltol);
                            (void)self;
                            if (!nearlyEqual(rep, l, ltol)) break;
                            if (partnerCount(detail::inv(l), k) != c)
                                throw DomainError("canonicalize: eigenvalue and its inverse have different structure");
                            for (std::size_t i = 0; i < c; ++i) bs.blocks.push_back(skewSumPair(k, l));
                        }
                        break;
                    }
                    case ClassificationMode::StarCongruenceAC: {
                        if (absCmp == 0) {
                            for (std::size_t i = 0; i < c; ++i) signedSizes.push_back(k);
                        } else if (absCmp > 0) {
                            if (partnerCount(detail::inv(conjOf(l)), k) != c)
                                throw DomainError("canonicalize: eigenvalue pairing inconsistent");
                            for (std::size_t i = 0; i < c; ++i) bs.blocks.push_back(skewSumPair(k, l));
                        }
                        break;
                    }
                    case ClassificationMode::CongruenceReal: {
                        if (real) {
                            if (isSignPow(l, k + 1, ltol)) {
                                for (std::size_t i = 0; i < c; ++i) signedSizes.push_back(k);
                            } else if (isSignPow(l, k, ltol)) {
                                std::size_t pairs = requireEven(c);
                                for (std::size_t i = 0; i < pairs; ++i) bs.blocks.push_back(skewSumPair(k, signPow<T>(k)));
                            } else if (absCmp > 0) {
                                for (std::size_t i = 0; i < c; ++i) bs.blocks.push_back(skewSumPair(k, l));
                            }
                        } else if (imSign(l, ltol) > 0) {
                            if (absCmp == 0) {
                                for (std::size_t i = 0; i < c; ++i) signedSizes.push_back(k);
                            } else if (absCmp > 0) {
                                for (std::size_t i = 0; i < c; ++i) bs.blocks.push_back(realifiedSkewSumPair(k, l));
                            }
                        }
                        break;
                    }
                    default: break;
                }
            }
            if (!signedSizes.empty()) {
                for (auto [k, eps] : extractSigns(core, l, signedSizes, mode, tol)) {
                    if (mode == ClassificationMode::CongruenceReal && !real)
                        bs.blocks.push_back(signedRealifiedRoot(k, l, eps));
                    else
                        bs.blocks.push_back(signedRoot(k, mode == ClassificationMode::CongruenceReal ? signPow<T>(k + 1) : l, eps));
                }
            }
        }
    }
    if (bs.dimension() != a.rows()) throw DomainError("canonicalize: recovered blocks do not account for the whole matrix");
    bs.normalize();
    if constexpr (!exact) {
        out.report.notes.push_back("float mode: eigenvalues within sqrt(tolerance) of +-1, the unit circle or the real axis were snapped onto it");
    }
    return out;
}

template <class T>
BlockSum<T> canonicalize(const Matrix<T>& a, ClassificationMode mode, double tol = 0) {
    return canonicalizeDetailed(a, mode, tol).blocks;
}

/// Float block sums agree if kinds, sizes and signs match and parameters are
/// within tol.
template <class T>
bool blockSumsMatch(const BlockSum<T>& x, const BlockSum<T>& y, double tol = 0) {
    if (x.mode != y.mode || x.blocks.size() != y.blocks.size()) return false;
    for (std::size_t i = 0; i < x.blocks.size(); ++i) {
        const auto &a = x.blocks[i], &b = y.blocks[i];
        if (a.kind != b.kind || a.n != b.n || a.epsilon != b.epsilon) return false;
        if (!detail::nearlyEqual(a.lambda, b.lambda, tol)) return false;
        if (a.chi != b.chi) return false;
    }
    return true;
}

template <class T>
bool areEquivalent(const Matrix<T>& a, const Matrix<T>& b, ClassificationMode mode, double tol = 0) {
    if (!a.isSquare() || !b.isSquare()) throw DimensionError("areEquivalent: matrices must be square");
    if (a.rows() != b.rows()) return false;
    auto ca = canonicalize(a, mode, tol), cb = canonicalize(b, mode, tol);
    if constexpr (scalar_traits<T>::exact) return ca == cb;
    else return blockSumsMatch(ca, cb, std::sqrt(tol > 0 ? tol : kDefaultTolerance));
}

/// Deterministic scrambling S* K S with a small-height nonsingular S drawn from
/// the seed (real S in real mode).  mt19937_64 output is fixed by the standard;
/// the bounded draw is done here so results match across standard libraries.
template <class T>
std::pair<Matrix<T>, CongruenceWitness<T>> randomCongruence(const Matrix<T>& k, std::uint64_t seed,
                                                            ClassificationMode mode) {
    if (!k.isSquare()) throw DimensionError("randomCongruence: matrix not square");
    std::mt19937_64 gen(seed);
    auto draw = [&](long lo, long hi) { return lo + static_cast<long>(gen() % static_cast<std::uint64_t>(hi - lo + 1)); };
    const std::size_t n = k.rows();
    const bool complexEntries = mode != ClassificationMode::CongruenceReal;
    Matrix<Gaussian> s(n, n);
    for (;;) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) s(i, j) = Gaussian(draw(-2, 2), complexEntries ? draw(-1, 1) : 0);
        if (!det(s).isZero()) break;
    }
    Matrix<T> st;
    if constexpr (std::is_same_v<T, Gaussian>) st = s;
    else st = convertMatrix<T>(s);
    const Involution inv = modeInvolution(mode);
    Matrix<T> out = congruent(k, st, inv);
    return {out, CongruenceWitness<T>{st, k, out, inv}};
}

}  // namespace congruence

#pragma once

#include "congruence/matrix.hpp"

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace congruence {

/// Univariate polynomial over a commutative scalar type.  Coefficients are
/// stored low degree first with no trailing zeros; the zero polynomial is empty.
template <class T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> lowToHigh) : c_(std::move(lowToHigh)) { trim(); }
    Poly(std::initializer_list<T> lowToHigh) : c_(lowToHigh) { trim(); }

    static Poly constant(const T& c) { return Poly(std::vector<T>{c}); }
    static Poly monomial(std::size_t k, const T& c = scalar_traits<T>::one()) {
        std::vector<T> v(k + 1, scalar_traits<T>::zero());
        v[k] = c;
        return Poly(std::move(v));
    }
    /// x - r
    static Poly linear(const T& r) { return Poly({-r, scalar_traits<T>::one()}); }

    bool isZero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<T>& coeffs() const { return c_; }
    T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : scalar_traits<T>::zero(); }
    const T& lead() const { return c_.back(); }
    bool isMonic() const { return !c_.empty() && c_.back() == scalar_traits<T>::one(); }

    Poly monic() const {
        if (isZero()) return *this;
        T inv = scalar_traits<T>::inverse(lead());
        std::vector<T> v = c_;
        for (auto& x : v) x = x * inv;
        return Poly(std::move(v));
    }

    T operator()(const T& x) const {
        T r = scalar_traits<T>::zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    Poly derivative() const {
        std::vector<T> v;
        for (std::size_t k = 1; k < c_.size(); ++k) v.push_back(c_[k] * T(static_cast<long>(k)));
        return Poly(std::move(v));
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), scalar_traits<T>::zero());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), scalar_traits<T>::zero());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.isZero() || b.isZero()) return {};
        std::vector<T> v(a.c_.size() + b.c_.size() - 1, scalar_traits<T>::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(v));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Euclidean division: *this = q * d + r with deg r < deg d.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.isZero()) throw DomainError("polynomial division by zero");
        std::vector<T> r = c_;
        if (r.size() < d.c_.size()) return {Poly{}, *this};
        std::vector<T> q(r.size() - d.c_.size() + 1, scalar_traits<T>::zero());
        T li = scalar_traits<T>::inverse(d.lead());
        for (std::size_t k = q.size(); k-- > 0;) {
            T f = r[k + d.c_.size() - 1] * li;
            q[k] = f;
            for (std::size_t j = 0; j < d.c_.size(); ++j) r[k + j] -= f * d.c_[j];
        }
        r.resize(d.c_.size() - 1);
        return {Poly(std::move(q)), Poly(std::move(r))};
    }

    Poly mapCoeffs(auto&& f) const {
        std::vector<T> v;
        for (const auto& x : c_) v.push_back(f(x));
        return Poly(std::move(v));
    }

private:
    void trim() {
        while (!c_.empty() && scalar_traits<T>::isZero(c_.back(), 0)) c_.pop_back();
    }
    std::vector<T> c_;
};

/// Monic gcd.
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
    while (!b.isZero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Coefficientwise involution.
template <class T>
Poly<T> bar(const Poly<T>& f, Involution inv) {
    return f.mapCoeffs([inv](const T& x) { return involve(x, inv); });
}

/// p(A) by Horner.
template <class T>
Matrix<T> evalAt(const Poly<T>& p, const Matrix<T>& a) {
    Matrix<T> r(a.rows(), a.cols());
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        r = r * a;
        for (std::size_t i = 0; i < a.rows(); ++i) r(i, i) += *it;
    }
    return r;
}

/// Monic characteristic polynomial det(xI - A) by Faddeev-LeVerrier.
template <class T>
Poly<T> charPoly(const Matrix<T>& a) {
    static_assert(scalar_traits<T>::commutative, "charPoly needs a commutative base");
    if (!a.isSquare()) throw DimensionError("charPoly: matrix not square");
    const std::size_t n = a.rows();
    std::vector<T> c(n + 1, scalar_traits<T>::zero());
    c[n] = scalar_traits<T>::one();
    Matrix<T> m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
        T t = trace(Matrix<T>(a * m));
        c[n - k] = -t / T(static_cast<long>(k));
    }
    return Poly<T>(std::move(c));
}

// ---------------------------------------------------------------------------
// Text form: "x^2+2x+1", "x^2+(3+3i)x+i", "x-1/2", "2i*x^3 - x".

namespace detail {

template <class T>
T scalarFromText(std::string_view s);

template <>
inline Rational scalarFromText<Rational>(std::string_view s) {
    if (s.find('i') != std::string_view::npos) throw DomainError("imaginary coefficient over Q");
    return parseRational(s);
}

// a, a/b, bi, b/ci, a+bi, a-bi, i, -i
inline Gaussian parseGaussianText(std::string_view s) {
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw DomainError("empty scalar");
    if (t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
    if (t.back() != 'i') return parseRational(t);
    // split at the last sign that is not leading and not part of an exponent
    std::size_t split = std::string::npos;
    for (std::size_t k = t.size(); k-- > 1;)
        if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') { split = k; break; }
    std::string re = split == std::string::npos ? "" : t.substr(0, split);
    std::string im = t.substr(split == std::string::npos ? 0 : split);
    im.pop_back();
    if (!im.empty() && im.back() == '*') im.pop_back();
    if (im.empty() || im == "+") im = "1";
    if (im == "-") im = "-1";
    return {re.empty() ? Rational(0) : parseRational(re), parseRational(im)};
}

template <>
inline Gaussian scalarFromText<Gaussian>(std::string_view s) { return parseGaussianText(s); }

template <>
inline Complex scalarFromText<Complex>(std::string_view s) {
    Gaussian g = parseGaussianText(s);
    return {g.re.get_d(), g.im.get_d()};
}

template <>
inline double scalarFromText<double>(std::string_view s) { return parseRational(s).get_d(); }

}  // namespace detail

template <class T>
Poly<T> parsePoly(std::string_view text, char var = 'x') {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw DomainError("empty polynomial");
    // split into signed terms at top-level +/- (not inside parentheses)
    std::vector<std::string> terms;
    std::string cur;
    int depth = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        char ch = s[k];
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if ((ch == '+' || ch == '-') && depth == 0 && k > 0 && s[k - 1] != '^') {
            terms.push_back(cur);
            cur.clear();
        }
        cur += ch;
    }
    if (depth != 0) throw DomainError("unbalanced parentheses in polynomial");
    terms.push_back(cur);

    Poly<T> out;
    for (std::string t : terms) {
        if (t.empty()) throw DomainError("empty term in polynomial");
        std::string sign;
        if (t[0] == '+' || t[0] == '-') { sign = t.substr(0, 1); t.erase(0, 1); }
        std::size_t xpos = t.find(var);
        std::size_t deg = 0;
        std::string coef = t;
        if (xpos != std::string::npos) {
            coef = t.substr(0, xpos);
            std::string rest = t.substr(xpos + 1);
            if (rest.empty()) deg = 1;
            else if (rest[0] == '^') {
                try { deg = std::stoul(rest.substr(1)); } catch (...) { throw DomainError("bad exponent in '" + t + "'"); }
            } else throw DomainError("bad term '" + t + "'");
            if (!coef.empty() && coef.back() == '*') coef.pop_back();
            if (coef.empty()) coef = "1";
        }
        if (coef.empty()) throw DomainError("bad term '" + t + "'");
        T c = detail::scalarFromText<T>(coef);
        if (sign == "-") c = -c;
        out += Poly<T>::monomial(deg, c);
    }
    return out;
}

template <class T>
std::string toString(const Poly<T>& p, char var = 'x') {
    if (p.isZero()) return "0";
    std::string s;
    for (int k = p.degree(); k >= 0; --k) {
        const T& c = p.coeffs()[k];
        if (scalar_traits<T>::isZero(c, 0)) continue;
        std::string cs = toString(c);
        bool compound = cs.find_first_of("+-", 1) != std::string::npos;
        bool neg = !compound && cs[0] == '-';
        if (neg) cs.erase(0, 1);
        if (compound) cs = "(" + cs + ")";
        if (!s.empty() || neg) s += neg ? "-" : "+";
        std::string mono = k == 0 ? "" : (k == 1 ? std::string(1, var) : std::string(1, var) + "^" + std::to_string(k));
        if (k == 0) s += cs;
        else if (cs == "1") s += mono;
        else s += cs + (cs.back() == 'i' ? "*" : "") + mono;
    }
    return s;
}

}  // namespace congruence

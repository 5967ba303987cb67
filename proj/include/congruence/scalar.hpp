#pragma once

// Scalars with involutions: Q, Q(i), rational quaternions, IEEE real/complex
// floats and the two-element field.  Every scalar type used by the matrix
// templates provides a specialization of scalar_traits<T>.

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace congruence {

/// Raised when an operation is asked to act outside its domain (wrong base,
/// illegal involution, zero where a unit is required, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Rational = mpq_class;

/// p/q in lowest terms (mpq_class(p, q) alone does not canonicalize).
inline Rational frac(long p, long q = 1) {
    if (q == 0) throw DomainError("zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

enum class Base { Rational, GaussianRational, QuaternionRational, RealFloat, ComplexFloat, GF2 };
enum class Involution { Identity, ComplexConjugation, QuaternionConjugation, QuaternionSemiconjugation };

inline constexpr double kDefaultTolerance = 1e-10;

inline bool isExact(Base b) { return b != Base::RealFloat && b != Base::ComplexFloat; }
inline bool isCommutative(Base b) { return b != Base::QuaternionRational; }

/// Field plus involution plus comparison tolerance.  Construct through make()
/// so the combination is validated.
struct FieldMode {
    Base base = Base::Rational;
    Involution involution = Involution::Identity;
    double tolerance = 0.0;

    static FieldMode make(Base b, Involution inv, double tol = -1.0) {
        FieldMode m{b, inv, tol < 0 ? (isExact(b) ? 0.0 : kDefaultTolerance) : tol};
        m.validate();
        return m;
    }

    void validate() const {
        if (inv_is_quaternionic() && base != Base::QuaternionRational)
            throw DomainError("quaternionic involution requires the quaternion base");
        if (base == Base::QuaternionRational && !inv_is_quaternionic())
            throw DomainError("the involution may be the identity only on a field; quaternions need "
                              "conjugation or semiconjugation");
        if (involution == Involution::ComplexConjugation &&
            base != Base::GaussianRational && base != Base::ComplexFloat)
            throw DomainError("complex conjugation requires a complex base");
        if (base == Base::GF2 && involution != Involution::Identity)
            throw DomainError("GF2 supports only the identity involution");
        if (isExact(base) ? tolerance != 0.0 : !(tolerance >= 0.0))
            throw DomainError("tolerance must be 0 for exact bases and nonnegative for floats");
    }

    bool inv_is_quaternionic() const {
        return involution == Involution::QuaternionConjugation ||
               involution == Involution::QuaternionSemiconjugation;
    }
};

inline bool operator==(const FieldMode& a, const FieldMode& b) {
    return a.base == b.base && a.involution == b.involution && a.tolerance == b.tolerance;
}

// ---------------------------------------------------------------------------
// Rationals

inline Rational parseRational(std::string_view text) {
    std::string s(text);
    // Allow a leading '+' and surrounding blanks.
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos) throw DomainError("empty rational literal");
    s = s.substr(b, e - b + 1);
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
        s.find('E') != std::string::npos) {
        // Decimal literal: exact conversion of the decimal string, not of a double.
        auto dot = s.find('.');
        std::string mant = s, expPart;
        long exp10 = 0;
        auto ep = s.find_first_of("eE");
        if (ep != std::string::npos) {
            mant = s.substr(0, ep);
            exp10 = std::stol(s.substr(ep + 1));
        }
        dot = mant.find('.');
        if (dot != std::string::npos) {
            exp10 -= static_cast<long>(mant.size() - dot - 1);
            mant.erase(dot, 1);
        }
        Rational r;
        if (r.get_num().set_str(mant, 10) != 0) throw DomainError("bad rational literal: " + std::string(text));
        r.get_den() = 1;
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
        if (exp10 < 0) r /= Rational(p); else r *= Rational(p);
        r.canonicalize();
        return r;
    }
    Rational r;
    if (r.set_str(s, 10) != 0) throw DomainError("bad rational literal: " + std::string(text));
    if (r.get_den() == 0) throw DomainError("zero denominator in rational literal");
    r.canonicalize();
    return r;
}

inline std::string toString(const Rational& r) { return r.get_str(); }

// ---------------------------------------------------------------------------
// Gaussian rationals a + b i

struct Gaussian {
    Rational re{0}, im{0};

    Gaussian() = default;
    Gaussian(Rational r) : re(std::move(r)) {}  // NOLINT: implicit embedding of Q
    Gaussian(long r) : re(r) {}                 // NOLINT
    Gaussian(int r) : re(r) {}                  // NOLINT
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Gaussian i() { return {0, 1}; }

    Gaussian conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }
    bool isZero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool isReal() const { return sgn(im) == 0; }

    Gaussian inverse() const {
        Rational n = norm();
        if (sgn(n) == 0) throw DomainError("division by zero in Q(i)");
        return {re / n, -im / n};
    }

    Gaussian& operator+=(const Gaussian& o) { re += o.re; im += o.im; return *this; }
    Gaussian& operator-=(const Gaussian& o) { re -= o.re; im -= o.im; return *this; }
    Gaussian& operator*=(const Gaussian& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Gaussian& operator/=(const Gaussian& o) { return *this *= o.inverse(); }
};

inline Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
inline Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
inline Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
inline Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
inline Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
inline bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
inline bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

inline std::string toString(const Gaussian& g) {
    if (g.isReal()) return toString(g.re);
    std::string s;
    if (sgn(g.re) != 0) s = toString(g.re);
    Rational b = g.im;
    if (sgn(b) < 0) { s += "-"; b = -b; }
    else if (!s.empty()) s += "+";
    if (b != 1) s += toString(b) + "*";
    return s + "i";
}

inline std::ostream& operator<<(std::ostream& os, const Gaussian& g) { return os << toString(g); }

// ---------------------------------------------------------------------------
// Rational quaternions a + b i + c j + d k  (i^2 = j^2 = k^2 = ijk = -1)

struct Quaternion {
    Rational a{0}, b{0}, c{0}, d{0};

    Quaternion() = default;
    Quaternion(Rational r) : a(std::move(r)) {}  // NOLINT
    Quaternion(long r) : a(r) {}                 // NOLINT
    Quaternion(int r) : a(r) {}                  // NOLINT
    Quaternion(Rational a_, Rational b_, Rational c_, Rational d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}
    explicit Quaternion(const Gaussian& g) : a(g.re), b(g.im) {}

    static Quaternion i() { return {0, 1, 0, 0}; }
    static Quaternion j() { return {0, 0, 1, 0}; }
    static Quaternion k() { return {0, 0, 0, 1}; }

    Rational norm() const { return a * a + b * b + c * c + d * d; }
    bool isZero() const { return sgn(a) == 0 && sgn(b) == 0 && sgn(c) == 0 && sgn(d) == 0; }
    Quaternion conj() const { return {a, -b, -c, -d}; }

    Quaternion inverse() const {
        Rational n = norm();
        if (sgn(n) == 0) throw DomainError("division by zero in H(Q)");
        return {a / n, -b / n, -c / n, -d / n};
    }

    Quaternion& operator+=(const Quaternion& o) { a += o.a; b += o.b; c += o.c; d += o.d; return *this; }
    Quaternion& operator-=(const Quaternion& o) { a -= o.a; b -= o.b; c -= o.c; d -= o.d; return *this; }
    Quaternion& operator*=(const Quaternion& o) {
        Quaternion r{a * o.a - b * o.b - c * o.c - d * o.d,
                     a * o.b + b * o.a + c * o.d - d * o.c,
                     a * o.c - b * o.d + c * o.a + d * o.b,
                     a * o.d + b * o.c - c * o.b + d * o.a};
        return *this = std::move(r);
    }
};

inline Quaternion operator+(Quaternion x, const Quaternion& y) { return x += y; }
inline Quaternion operator-(Quaternion x, const Quaternion& y) { return x -= y; }
inline Quaternion operator*(Quaternion x, const Quaternion& y) { return x *= y; }
inline Quaternion operator-(const Quaternion& x) { return {-x.a, -x.b, -x.c, -x.d}; }
inline bool operator==(const Quaternion& x, const Quaternion& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}
inline bool operator!=(const Quaternion& x, const Quaternion& y) { return !(x == y); }

inline std::string toString(const Quaternion& q) {
    std::ostringstream os;
    os << q.a.get_str() << (sgn(q.b) < 0 ? "" : "+") << q.b.get_str() << "i" << (sgn(q.c) < 0 ? "" : "+")
       << q.c.get_str() << "j" << (sgn(q.d) < 0 ? "" : "+") << q.d.get_str() << "k";
    return os.str();
}

// ---------------------------------------------------------------------------
// F_2

struct GF2 {
    bool v = false;
    GF2() = default;
    GF2(int x) : v((x & 1) != 0) {}  // NOLINT
    GF2& operator+=(GF2 o) { v ^= o.v; return *this; }
    GF2& operator-=(GF2 o) { v ^= o.v; return *this; }
    GF2& operator*=(GF2 o) { v &= o.v; return *this; }
};
inline GF2 operator+(GF2 a, GF2 b) { return a += b; }
inline GF2 operator-(GF2 a, GF2 b) { return a -= b; }
inline GF2 operator-(GF2 a) { return a; }
inline GF2 operator*(GF2 a, GF2 b) { return a *= b; }
inline GF2 operator/(GF2 a, GF2 b) {
    if (!b.v) throw DomainError("division by zero in GF2");
    return a;
}
inline bool operator==(GF2 a, GF2 b) { return a.v == b.v; }
inline bool operator!=(GF2 a, GF2 b) { return a.v != b.v; }
inline std::string toString(GF2 x) { return x.v ? "1" : "0"; }

using Complex = std::complex<double>;

inline std::string toString(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}
inline std::string toString(const Complex& z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

// ---------------------------------------------------------------------------
// Traits

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static constexpr bool commutative = true;
    static constexpr Base base = Base::Rational;
    static Rational zero() { return 0; }
    static Rational one() { return 1; }
    static bool isZero(const Rational& x, double = 0) { return sgn(x) == 0; }
    static Rational inverse(const Rational& x) {
        if (sgn(x) == 0) throw DomainError("division by zero in Q");
        return 1 / x;
    }
    static double magnitude(const Rational& x) { return std::fabs(x.get_d()); }
};

template <>
struct scalar_traits<Gaussian> {
    static constexpr bool exact = true;
    static constexpr bool commutative = true;
    static constexpr Base base = Base::GaussianRational;
    static Gaussian zero() { return {}; }
    static Gaussian one() { return 1; }
    static bool isZero(const Gaussian& x, double = 0) { return x.isZero(); }
    static Gaussian inverse(const Gaussian& x) { return x.inverse(); }
    static double magnitude(const Gaussian& x) { return std::sqrt(x.norm().get_d()); }
};

template <>
struct scalar_traits<Quaternion> {
    static constexpr bool exact = true;
    static constexpr bool commutative = false;
    static constexpr Base base = Base::QuaternionRational;
    static Quaternion zero() { return {}; }
    static Quaternion one() { return 1; }
    static bool isZero(const Quaternion& x, double = 0) { return x.isZero(); }
    static Quaternion inverse(const Quaternion& x) { return x.inverse(); }
    static double magnitude(const Quaternion& x) { return std::sqrt(x.norm().get_d()); }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static constexpr bool commutative = true;
    static constexpr Base base = Base::RealFloat;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static bool isZero(double x, double tol) { return std::fabs(x) <= tol; }
    static double inverse(double x) {
        if (x == 0.0) throw DomainError("division by zero");
        return 1.0 / x;
    }
    static double magnitude(double x) { return std::fabs(x); }
};

template <>
struct scalar_traits<Complex> {
    static constexpr bool exact = false;
    static constexpr bool commutative = true;
    static constexpr Base base = Base::ComplexFloat;
    static Complex zero() { return 0.0; }
    static Complex one() { return 1.0; }
    static bool isZero(const Complex& x, double tol) { return std::abs(x) <= tol; }
    static Complex inverse(const Complex& x) {
        if (x == 0.0) throw DomainError("division by zero");
        return 1.0 / x;
    }
    static double magnitude(const Complex& x) { return std::abs(x); }
};

template <>
struct scalar_traits<GF2> {
    static constexpr bool exact = true;
    static constexpr bool commutative = true;
    static constexpr Base base = Base::GF2;
    static GF2 zero() { return 0; }
    static GF2 one() { return 1; }
    static bool isZero(GF2 x, double = 0) { return !x.v; }
    static GF2 inverse(GF2 x) {
        if (!x.v) throw DomainError("division by zero in GF2");
        return x;
    }
    static double magnitude(GF2 x) { return x.v ? 1.0 : 0.0; }
};

template <class T>
concept ExactScalar = scalar_traits<T>::exact;
template <class T>
concept FloatScalar = !scalar_traits<T>::exact;

// ---------------------------------------------------------------------------
// involve

inline Rational involve(const Rational& x, Involution = Involution::Identity) { return x; }
inline double involve(double x, Involution = Involution::Identity) { return x; }
inline GF2 involve(GF2 x, Involution = Involution::Identity) { return x; }

inline Gaussian involve(const Gaussian& x, Involution inv) {
    switch (inv) {
        case Involution::Identity: return x;
        case Involution::ComplexConjugation: return x.conj();
        default: throw DomainError("quaternionic involution applied to a Gaussian rational");
    }
}

inline Complex involve(const Complex& x, Involution inv) {
    switch (inv) {
        case Involution::Identity: return x;
        case Involution::ComplexConjugation: return std::conj(x);
        default: throw DomainError("quaternionic involution applied to a complex float");
    }
}

inline Quaternion involve(const Quaternion& x, Involution inv) {
    switch (inv) {
        case Involution::QuaternionConjugation: return {x.a, -x.b, -x.c, -x.d};
        case Involution::QuaternionSemiconjugation: return {x.a, -x.b, x.c, x.d};
        default: throw DomainError("quaternions need conjugation or semiconjugation");
    }
}

// ---------------------------------------------------------------------------
// |x|^2 and unimodularity

/// a^2 + b^2 for x = a + bi; absolute value squared, so it stays
/// inside the exact field.
inline Rational absSquared(const Gaussian& x) { return x.norm(); }
inline Rational absSquared(const Rational& x) { return x * x; }
inline double absSquared(const Complex& x) { return std::norm(x); }
inline double absSquared(double x) { return x * x; }
Rational absSquared(const Quaternion&) = delete;

inline bool isUnimodular(const Gaussian& x, Involution inv) {
    if (x.isZero()) throw DomainError("isUnimodular: zero input");
    return x * involve(x, inv) == Gaussian(1);
}
inline bool isUnimodular(const Rational& x, Involution = Involution::Identity) {
    if (sgn(x) == 0) throw DomainError("isUnimodular: zero input");
    return x * x == 1;
}
inline bool isUnimodular(const Complex& x, Involution inv, double tol) {
    if (x == 0.0) throw DomainError("isUnimodular: zero input");
    Complex p = x * involve(x, inv);
    return std::abs(p - 1.0) <= tol;
}
inline bool isUnimodular(double x, Involution, double tol) {
    if (x == 0.0) throw DomainError("isUnimodular: zero input");
    return std::fabs(std::fabs(x) - 1.0) <= tol;
}

// ---------------------------------------------------------------------------
// Square roots inside the exact fields

inline std::optional<Rational> rationalSqrt(const Rational& x) {
    if (sgn(x) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t())) return std::nullopt;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
    Rational r(n, d);
    r.canonicalize();
    return r;
}

/// A square root of z inside Q(i), if one exists.
inline std::optional<Gaussian> gaussianSqrt(const Gaussian& z) {
    if (z.isZero()) return Gaussian{};
    auto m = rationalSqrt(z.norm());
    if (!m) return std::nullopt;
    // (x + yi)^2 = z  with  x^2 = (re + |z|)/2,  y^2 = (|z| - re)/2
    auto x = rationalSqrt((z.re + *m) / 2);
    auto y = rationalSqrt((*m - z.re) / 2);
    if (!x || !y) return std::nullopt;
    Rational yy = sgn(z.im) < 0 ? Rational(-*y) : *y;
    Gaussian r{*x, yy};
    if (r * r != z) return std::nullopt;
    return r;
}

// ---------------------------------------------------------------------------
// Conversions between scalar types

template <class To, class From>
To convertScalar(const From& x);

template <> inline Gaussian convertScalar<Gaussian, Rational>(const Rational& x) { return x; }
template <> inline Gaussian convertScalar<Gaussian, Gaussian>(const Gaussian& x) { return x; }
template <> inline Rational convertScalar<Rational, Rational>(const Rational& x) { return x; }
template <> inline Complex convertScalar<Complex, Gaussian>(const Gaussian& x) {
    return {x.re.get_d(), x.im.get_d()};
}
template <> inline Complex convertScalar<Complex, Rational>(const Rational& x) { return x.get_d(); }
template <> inline Complex convertScalar<Complex, Complex>(const Complex& x) { return x; }
template <> inline Complex convertScalar<Complex, double>(const double& x) { return x; }
template <> inline double convertScalar<double, Rational>(const Rational& x) { return x.get_d(); }
template <> inline Quaternion convertScalar<Quaternion, Gaussian>(const Gaussian& x) { return Quaternion(x); }
template <> inline Quaternion convertScalar<Quaternion, Rational>(const Rational& x) { return x; }
template <> inline Rational convertScalar<Rational, Gaussian>(const Gaussian& x) {
    if (!x.isReal()) throw DomainError("non-real Gaussian rational where a rational is required");
    return x.re;
}

}  // namespace congruence

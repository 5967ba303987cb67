#pragma once

// JSON encodings: rationals "p/q", Gaussian rationals "p/q" when real and
// ["p/q","r/s"] otherwise, quaternions 4-arrays, floats numbers ([re, im] when
// complex).  Matrices are arrays of rows.

#include "congruence/canon.hpp"
#include "congruence/quat.hpp"

#include <json.hpp>

#include <string>

namespace congruence {

using json = nlohmann::json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline Rational rationalFromJson(const json& j) {
    if (j.is_string()) return parseRational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_number()) return parseRational(j.dump());
    throw ParseError("expected a rational, got " + j.dump());
}

inline double doubleFromJson(const json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return parseRational(j.get<std::string>()).get_d();
    throw ParseError("expected a number, got " + j.dump());
}

}  // namespace detail

inline json toJson(const Rational& x) { return toString(x); }
inline json toJson(const Gaussian& x) {
    if (x.isReal()) return toString(x.re);
    return json::array({toString(x.re), toString(x.im)});
}
inline json toJson(const Quaternion& q) { return json::array({toString(q.a), toString(q.b), toString(q.c), toString(q.d)}); }
inline json toJson(double x) { return x; }
inline json toJson(const Complex& z) {
    if (z.imag() == 0) return z.real();
    return json::array({z.real(), z.imag()});
}
inline json toJson(GF2 x) { return x.v ? 1 : 0; }

template <class T>
T scalarFromJson(const json& j) {
    try {
        if constexpr (std::is_same_v<T, Rational>) {
            return detail::rationalFromJson(j);
        } else if constexpr (std::is_same_v<T, Gaussian>) {
            if (j.is_array()) {
                if (j.size() != 2) throw ParseError("Gaussian rational needs [re, im]");
                return {detail::rationalFromJson(j[0]), detail::rationalFromJson(j[1])};
            }
            if (j.is_string()) return detail::parseGaussianText(j.get<std::string>());
            return detail::rationalFromJson(j);
        } else if constexpr (std::is_same_v<T, Quaternion>) {
            if (j.is_array()) {
                if (j.size() != 4) throw ParseError("quaternion needs [a, b, c, d]");
                return {detail::rationalFromJson(j[0]), detail::rationalFromJson(j[1]), detail::rationalFromJson(j[2]),
                        detail::rationalFromJson(j[3])};
            }
            return Quaternion(detail::rationalFromJson(j));
        } else if constexpr (std::is_same_v<T, double>) {
            return detail::doubleFromJson(j);
        } else if constexpr (std::is_same_v<T, Complex>) {
            if (j.is_array()) {
                if (j.size() != 2) throw ParseError("complex needs [re, im]");
                return {detail::doubleFromJson(j[0]), detail::doubleFromJson(j[1])};
            }
            if (j.is_string()) return detail::scalarFromText<Complex>(j.get<std::string>());
            return detail::doubleFromJson(j);
        } else if constexpr (std::is_same_v<T, GF2>) {
            Rational r = detail::rationalFromJson(j);
            if (r != 0 && r != 1) throw ParseError("GF2 entries are 0 or 1");
            return GF2{r == 1};
        }
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad scalar ") + j.dump() + ": " + e.what());
    }
}

template <class T>
json toJson(const Matrix<T>& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(toJson(m(i, j)));
        out.push_back(row);
    }
    return out;
}

template <class T>
Matrix<T> matrixFromJson(const json& j) {
    const json& rows = j.is_object() && j.contains("matrix") ? j["matrix"] : j;
    if (!rows.is_array()) throw ParseError("matrix must be an array of rows");
    if (rows.empty()) return Matrix<T>(0, 0);
    const std::size_t n = rows.size(), m = rows[0].is_array() ? rows[0].size() : 0;
    Matrix<T> out(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != m) throw ParseError("matrix rows must be arrays of equal length");
        for (std::size_t k = 0; k < m; ++k) out(i, k) = scalarFromJson<T>(rows[i][k]);
    }
    return out;
}

template <class T>
json toJson(const CanonicalBlock<T>& b) {
    json o{{"kind", toString(b.kind)}, {"n", b.n}};
    if (b.chi) o["chi"] = toString(*b.chi);
    else if (b.kind != BlockKind::SingularJordan) o["lambda"] = toString(b.lambda);
    if (b.epsilon != 0) o["epsilon"] = b.epsilon;
    if (b.qform) {
        json q = json::array();
        for (const auto& c : b.qform->a) q.push_back(toJson(c));
        o["q"] = q;
    }
    return o;
}

template <class T>
json toJson(const BlockSum<T>& s) {
    json blocks = json::array();
    for (const auto& b : s.blocks) blocks.push_back(toJson(b));
    return {{"mode", toString(s.mode)}, {"dimension", s.dimension()}, {"blocks", blocks}};
}

template <class T>
CanonicalBlock<T> blockFromJson(const json& j) {
    try {
        CanonicalBlock<T> b;
        b.kind = parseBlockKind(j.at("kind").get<std::string>());
        b.n = j.at("n").get<std::size_t>();
        if (j.contains("lambda")) b.lambda = scalarFromJson<T>(j["lambda"]);
        if (j.contains("epsilon") && !j["epsilon"].is_null()) {
            b.epsilon = j["epsilon"].is_string() ? std::stoi(j["epsilon"].get<std::string>()) : j["epsilon"].get<int>();
            if (b.epsilon != 1 && b.epsilon != -1 && b.epsilon != 0) throw ParseError("epsilon must be +1, -1 or absent");
        }
        if (j.contains("chi")) b.chi = parsePoly<T>(j["chi"].get<std::string>());
        if (j.contains("q")) {
            QForm<T> q;
            for (const auto& c : j["q"]) q.a.push_back(scalarFromJson<T>(c));
            b.qform = q;
        }
        return b;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad block ") + j.dump() + ": " + e.what());
    }
}

template <class T>
BlockSum<T> blockSumFromJson(const json& j) {
    try {
        BlockSum<T> s;
        s.mode = parseClassificationMode(j.at("mode").get<std::string>());
        for (const auto& b : j.at("blocks")) s.blocks.push_back(blockFromJson<T>(b));
        return s;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad block sum: ") + e.what());
    }
}

template <class T>
json toJson(const CongruenceWitness<T>& w) {
    return {{"S", toJson(w.S)}, {"lhs", toJson(w.lhs)}, {"rhs", toJson(w.rhs)}};
}

inline json toJson(const ConfidenceReport& r) {
    return {{"exact", r.exact},
            {"tolerance", r.tolerance},
            {"minCoreSingularValue", r.minCoreSingularValue},
            {"maxClusterSpread", r.maxClusterSpread},
            {"minClusterGap", r.minClusterGap},
            {"notes", r.notes}};
}

inline json errorJson(const std::string& kind, const std::string& message) {
    return {{"error", kind}, {"message", message}};
}

}  // namespace congruence

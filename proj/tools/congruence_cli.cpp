#include "congruence/congruence.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace congruence;

namespace {

enum Exit { kOk = 0, kNo = 1, kBadInput = 2, kUnsplittable = 3 };

json readJson(const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open " + path);
        buf << in.rdbuf();
    }
    try {
        return json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

Involution parseInvolution(const std::string& s) {
    if (s == "identity" || s == "id") return Involution::Identity;
    if (s == "conjugation" || s == "complex-conjugation") return Involution::ComplexConjugation;
    if (s == "quaternion-conjugation" || s == "qconj") return Involution::QuaternionConjugation;
    if (s == "quaternion-semiconjugation" || s == "semiconjugation" || s == "qsemi")
        return Involution::QuaternionSemiconjugation;
    throw ParseError("unknown involution: " + s);
}

Base parseField(const std::string& s) {
    if (s == "rational" || s == "Q") return Base::Rational;
    if (s == "gaussian" || s == "Q(i)") return Base::GaussianRational;
    if (s == "quaternion" || s == "H") return Base::QuaternionRational;
    if (s == "float" || s == "real-float") return Base::RealFloat;
    if (s == "complex-float") return Base::ComplexFloat;
    if (s == "gf2") return Base::GF2;
    throw ParseError("unknown field: " + s);
}

template <class T>
std::string matrixTable(const Matrix<T>& m) {
    std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
    std::size_t w = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            cells[i][j] = toString(m(i, j));
            w = std::max(w, cells[i][j].size());
        }
    std::ostringstream os;
    for (const auto& row : cells) {
        os << "[";
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "  " : " ") << std::setw(static_cast<int>(w)) << row[j];
        os << " ]\n";
    }
    return os.str();
}

template <class T>
std::string blockTable(const BlockSum<T>& s) {
    std::ostringstream os;
    os << "mode " << toString(s.mode) << ", dimension " << s.dimension() << ", " << s.blocks.size() << " block(s)\n";
    std::size_t k = 0;
    for (const auto& b : s.blocks) os << "  " << ++k << ". " << describe(b) << "\n";
    return os.str();
}

void emit(const json& j, const std::string& table, const std::string& format) {
    if (format == "json") std::cout << j.dump(2) << "\n";
    else std::cout << table;
}

struct Common {
    std::string format = "table";
    double tolerance = -1;
};

// --- canon -------------------------------------------------------------------

struct CanonArgs : Common {
    std::string mode = "star-ac", input = "-";
    bool floating = false;
};

template <class T>
int runCanon(const CanonArgs& a) {
    ClassificationMode mode = parseClassificationMode(a.mode);
    Matrix<T> m = matrixFromJson<T>(readJson(a.input));
    double tol = scalar_traits<T>::exact ? 0.0 : (a.tolerance < 0 ? kDefaultTolerance : a.tolerance);
    auto r = canonicalizeDetailed(m, mode, tol);
    json out = toJson(r.blocks);
    if (!scalar_traits<T>::exact) out["report"] = toJson(r.report);
    std::string table = blockTable(r.blocks);
    if (!scalar_traits<T>::exact) {
        std::ostringstream os;
        os << "float report: tolerance " << r.report.tolerance << ", min core singular value "
           << r.report.minCoreSingularValue << ", min eigenvalue gap " << r.report.minClusterGap << "\n";
        table += os.str();
    }
    emit(out, table, a.format);
    return kOk;
}

// --- root --------------------------------------------------------------------

struct RootArgs : Common {
    std::string chi, input, involution = "identity", field = "gaussian";
};

template <class T>
int runRoot(const RootArgs& a, Involution inv) {
    Matrix<T> phi;
    if (!a.chi.empty()) phi = frobeniusBlock(parsePoly<T>(a.chi));
    else phi = matrixFromJson<T>(readJson(a.input));
    RootExistence ex = rootExists(phi, inv);
    if (!ex.exists) throw DomainError("no cosquare root: " + ex.reason);
    Matrix<T> r = toeplitzRoot(phi, inv);
    json out{{"phi", toJson(phi)}, {"root", toJson(r)}, {"cosquareCheck", cosquare(r, inv) == phi}};
    emit(out, matrixTable(r), a.format);
    return kOk;
}

// --- check -------------------------------------------------------------------

struct CheckArgs : Common {
    std::string mode = "star-ac", lhs, rhs;
    bool floating = false;
};

template <class T>
int runCheck(const CheckArgs& a) {
    ClassificationMode mode = parseClassificationMode(a.mode);
    Matrix<T> x = matrixFromJson<T>(readJson(a.lhs)), y = matrixFromJson<T>(readJson(a.rhs));
    double tol = scalar_traits<T>::exact ? 0.0 : (a.tolerance < 0 ? kDefaultTolerance : a.tolerance);
    bool eq = areEquivalent(x, y, mode, tol);
    json out{{"equivalent", eq}, {"mode", toString(mode)}};
    emit(out, std::string(eq ? "equivalent" : "not equivalent") + "\n", a.format);
    return eq ? kOk : kNo;
}

// --- gen ---------------------------------------------------------------------

struct GenArgs : Common {
    std::string mode = "star-ac";
    std::uint64_t seed = 1;
    std::size_t size = 6;
    bool nonsingular = false;
};

int runGen(const GenArgs& a) {
    ClassificationMode mode = parseClassificationMode(a.mode);
    if (a.size == 0) throw DomainError("gen: --size must be positive");
    std::mt19937_64 g(a.seed);
    BlockSum<Gaussian> s = randomBlockSum(g, mode, a.size, !a.nonsingular);
    Matrix<Gaussian> k = blockSumMatrix(s);
    auto [m, w] = randomCongruence(k, a.seed, mode);
    json out{{"seed", a.seed}, {"blocks", toJson(s)}, {"K", toJson(k)}, {"S", toJson(w.S)}, {"matrix", toJson(m)}};
    emit(out, blockTable(s) + "matrix S* K S:\n" + matrixTable(m), a.format);
    return kOk;
}

// --- verify ------------------------------------------------------------------

struct VerifyArgs : Common {
    std::string witness, lhs, rhs, involution = "conjugation", field;
};

template <class T>
bool verifyAs(const VerifyArgs& a, Involution inv, double tol) {
    Matrix<T> s = matrixFromJson<T>(readJson(a.witness)), x = matrixFromJson<T>(readJson(a.lhs)),
              y = matrixFromJson<T>(readJson(a.rhs));
    if (!s.isSquare() || !x.isSquare() || !y.isSquare() || s.rows() != x.rows() || x.rows() != y.rows())
        throw DimensionError("verify: dimension mismatch");
    if constexpr (std::is_same_v<T, Quaternion>) return verifyWitness(x, y, s, inv);
    else return CongruenceWitness<T>{s, x, y, inv}.verify(tol);
}

int runVerify(const VerifyArgs& a) {
    Involution inv = parseInvolution(a.involution);
    Base base;
    if (!a.field.empty()) base = parseField(a.field);
    else if (inv == Involution::QuaternionConjugation || inv == Involution::QuaternionSemiconjugation)
        base = Base::QuaternionRational;
    else base = Base::GaussianRational;
    FieldMode fm = FieldMode::make(base, inv, a.tolerance);
    bool ok = false;
    switch (base) {
        case Base::Rational: ok = verifyAs<Rational>(a, inv, 0); break;
        case Base::GaussianRational: ok = verifyAs<Gaussian>(a, inv, 0); break;
        case Base::QuaternionRational: ok = verifyAs<Quaternion>(a, inv, 0); break;
        case Base::RealFloat: ok = verifyAs<double>(a, inv, fm.tolerance); break;
        case Base::ComplexFloat: ok = verifyAs<Complex>(a, inv, fm.tolerance); break;
        case Base::GF2: ok = verifyAs<GF2>(a, inv, 0); break;
    }
    emit(json{{"verified", ok}}, std::string(ok ? "verified" : "not verified") + "\n", a.format);
    return ok ? kOk : kNo;
}

void fail(const std::string& kind, const std::string& msg) { std::cerr << errorJson(kind, msg).dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Canonical forms for congruence and *congruence"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"table", "json"};

    CanonArgs ca;
    auto* canon = app.add_subcommand("canon", "canonical block sum of a matrix");
    canon->add_option("--mode", ca.mode, "ac | star-ac | real")->capture_default_str();
    canon->add_option("input,--input", ca.input, "matrix JSON file, - for stdin")->capture_default_str();
    canon->add_flag("--float", ca.floating, "complex floating point instead of exact Q(i)");

    RootArgs ra;
    auto* root = app.add_subcommand("root", "Toeplitz cosquare root of a Frobenius block or matrix");
    root->add_option("--chi", ra.chi, "characteristic polynomial, e.g. x^2+2x+1");
    root->add_option("--input", ra.input, "matrix JSON instead of --chi");
    root->add_option("--involution", ra.involution, "identity | conjugation")->capture_default_str();
    root->add_option("--field", ra.field, "rational | gaussian")->capture_default_str();

    CheckArgs ka;
    auto* check = app.add_subcommand("check", "exit 0 if two matrices are (*)congruent, 1 if not");
    check->add_option("--mode", ka.mode, "ac | star-ac | real")->capture_default_str();
    check->add_option("lhs", ka.lhs)->required();
    check->add_option("rhs", ka.rhs)->required();
    check->add_flag("--float", ka.floating);

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "seeded scrambled instance with known canonical form");
    gen->add_option("--mode", ga.mode)->capture_default_str();
    gen->add_option("--seed", ga.seed)->capture_default_str();
    gen->add_option("--size", ga.size, "maximum dimension")->capture_default_str();
    gen->add_flag("--nonsingular", ga.nonsingular, "no J_n(0) blocks");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "exit 0 iff S* lhs S == rhs");
    verify->add_option("--witness", va.witness)->required();
    verify->add_option("--lhs", va.lhs)->required();
    verify->add_option("--rhs", va.rhs)->required();
    verify->add_option("--involution", va.involution)->capture_default_str();
    verify->add_option("--field", va.field, "rational | gaussian | quaternion | float | complex-float | gf2");

    for (auto* sc : {canon, root, check, gen, verify}) {
        Common* c = sc == canon ? static_cast<Common*>(&ca)
                    : sc == root ? static_cast<Common*>(&ra)
                    : sc == check ? static_cast<Common*>(&ka)
                    : sc == gen ? static_cast<Common*>(&ga)
                                : static_cast<Common*>(&va);
        sc->add_option("--format", c->format)->check(CLI::IsMember(formats))->capture_default_str();
        sc->add_option("--tolerance", c->tolerance, "float comparison tolerance");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        fail("usage", e.what());
        return kBadInput;
    }

    try {
        if (*canon) return ca.floating ? runCanon<Complex>(ca) : runCanon<Gaussian>(ca);
        if (*root) {
            Involution inv = parseInvolution(ra.involution);
            if (ra.chi.empty() == ra.input.empty()) throw ParseError("root: give exactly one of --chi, --input");
            Base b = parseField(ra.field);
            FieldMode::make(b, inv);
            if (b == Base::Rational) return runRoot<Rational>(ra, inv);
            if (b == Base::GaussianRational) return runRoot<Gaussian>(ra, inv);
            throw DomainError("root: exact rational or gaussian field required");
        }
        if (*check) return ka.floating ? runCheck<Complex>(ka) : runCheck<Gaussian>(ka);
        if (*gen) return runGen(ga);
        if (*verify) return runVerify(va);
    } catch (const UnsplittablePolynomial& e) {
        fail("UnsplittablePolynomial", e.what());
        return kUnsplittable;
    } catch (const ParseError& e) {
        fail("ParseError", e.what());
        return kBadInput;
    } catch (const DomainError& e) {
        fail("DomainError", e.what());
        return kBadInput;
    } catch (const DimensionError& e) {
        fail("DimensionError", e.what());
        return kBadInput;
    } catch (const SingularMatrix& e) {
        fail("SingularMatrix", e.what());
        return kBadInput;
    }
    return kBadInput;
}

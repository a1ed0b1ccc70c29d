#pragma once

// Reduction data of elliptic curves at l = p and the algebras built from it:
// special fibres II_w, theta families, hyperplanes and quantum-plane quotients.

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "jackson/errors.hpp"
#include "jackson/ext.hpp"
#include "jackson/families.hpp"
#include "jackson/kodaira.hpp"
#include "jackson/prime_context.hpp"
#include "jackson/rational.hpp"

namespace jackson {

enum class ReductionType { Good, Multiplicative, Additive };

inline const char* to_string(ReductionType r) {
    switch (r) {
        case ReductionType::Good: return "good";
        case ReductionType::Multiplicative: return "multiplicative";
        case ReductionType::Additive: return "additive";
    }
    return "?";
}

inline ReductionType reduction_type(const KodairaSymbol& k) {
    if (k.good()) return ReductionType::Good;
    if (k.multiplicative()) return ReductionType::Multiplicative;
    return ReductionType::Additive;
}

// ---- Weierstrass data ---------------------------------------------------

using WeierstrassCoeffs = std::array<Integer, 5>;  // a1 a2 a3 a4 a6

struct WeierstrassInvariants {
    Integer b2, b4, b6, b8, c4, c6, disc;
};

inline WeierstrassInvariants weierstrass_invariants(const WeierstrassCoeffs& a) {
    const Integer &a1 = a[0], &a2 = a[1], &a3 = a[2], &a4 = a[3], &a6 = a[4];
    WeierstrassInvariants w;
    w.b2 = a1 * a1 + 4 * a2;
    w.b4 = 2 * a4 + a1 * a3;
    w.b6 = a3 * a3 + 4 * a6;
    w.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    w.c4 = w.b2 * w.b2 - 24 * w.b4;
    w.c6 = -w.b2 * w.b2 * w.b2 + 36 * w.b2 * w.b4 - 216 * w.b6;
    w.disc = -w.b2 * w.b2 * w.b8 - 8 * w.b4 * w.b4 * w.b4 - 27 * w.b6 * w.b6 + 9 * w.b2 * w.b4 * w.b6;
    return w;
}

// y^2 = x^3 + A x + B, isomorphic over Z[1/6]
struct ShortModel {
    Integer A, B;
};

inline ShortModel short_model(const WeierstrassInvariants& w) { return {-27 * w.c4, -54 * w.c6}; }

// v_p(j); empty when j = 0
inline std::optional<int> j_valuation(const WeierstrassInvariants& w, long p) {
    if (w.c4 == 0) return std::nullopt;
    return 3 * valuation(w.c4, p) - valuation(w.disc, p);
}

// ---- curve fixtures -----------------------------------------------------

struct CurveReductionData {
    std::string label;
    long p = 5;
    KodairaSymbol kodaira;
    int f = 0;
    int d = 1;
    std::optional<int> v_j;
    int v_delta_min = 0;
    int component_group_order = 1;
    std::optional<WeierstrassCoeffs> weierstrass;
    std::string torsion_structure;
    std::vector<std::array<Integer, 3>> torsion_points;
    // declared reduction flavour, consulted by exclusion_check
    bool supersingular = false;
    bool split = true;
    int e_abs = 1;
};

inline void require_unramified_base(const CurveReductionData& c) {
    if (c.e_abs != 1) throw WrongRegime("only e(q) = 1 is supported");
}

inline bool ogg_check(const CurveReductionData& c) { return c.f + c.d == c.v_delta_min + 1; }

struct ConductorRange {
    int lo = 0, hi = 0;
    bool contains(int f) const { return lo <= f && f <= hi; }
    bool exact() const { return lo == hi; }
};

inline ConductorRange conductor_of_type(long p, ReductionType r) {
    if (p < 3 || !is_prime(p)) throw BadPrime("conductor table needs a prime p >= 3");
    switch (r) {
        case ReductionType::Good: return {0, 0};
        case ReductionType::Multiplicative: return {1, 1};
        case ReductionType::Additive: return p == 3 ? ConductorRange{2, 5} : ConductorRange{2, 2};
    }
    return {0, 0};
}

// Every d compatible with additive reduction and conductor exponent f.
// The value 5 - v_j only enters when v_j < 0.
inline std::set<int> allowed_d_additive(long p, int f, std::optional<int> v_j = std::nullopt) {
    if (p < 3 || !is_prime(p)) throw BadPrime("additive table needs a prime p >= 3");
    auto range = conductor_of_type(p, ReductionType::Additive);
    if (!range.contains(f)) throw InconsistentPair("f = " + std::to_string(f) + " is not additive at p = " + std::to_string(p));
    std::set<int> out;
    if (p >= 5) {
        out = {1, 2, 3, 5, 7, 8, 9};
        if (v_j && *v_j < 0) out.insert(5 - *v_j);
        return out;
    }
    if (f > 2) return {1, 3, 7, 9};
    out = {2, 5};
    if (v_j && *v_j < 0) out.insert(5 - *v_j);
    return out;
}

// The d forced by the Kodaira symbol, after checking (kodaira, f) against the table.
inline int allowed_d_additive(long p, int f, const KodairaSymbol& k) {
    if (!k.additive()) throw InconsistentPair(k.str() + " is not an additive type");
    auto range = conductor_of_type(p, ReductionType::Additive);
    if (!range.contains(f)) throw InconsistentPair("f = " + std::to_string(f) + " is not additive at p = " + std::to_string(p));
    if (p == 3) {
        bool ok = false;
        switch (k.kind) {
            case KodairaKind::II:
            case KodairaKind::IV:
            case KodairaKind::IVstar: ok = f > 2; break;
            case KodairaKind::III:
            case KodairaKind::I0star:
            case KodairaKind::Instar: ok = f == 2; break;
            default: ok = false;
        }
        if (!ok) throw InconsistentPair(k.str() + " with f = " + std::to_string(f) + " does not occur at p = 3");
    }
    return k.components();
}

// throws InconsistentPair when (kodaira, f, d) disagrees with the tables
inline void check_additive_pair(long p, const KodairaSymbol& k, int f, int d, std::optional<int> v_j = std::nullopt) {
    int forced = allowed_d_additive(p, f, k);
    if (forced != d)
        throw InconsistentPair(k.str() + " forces d = " + std::to_string(forced) + ", got " + std::to_string(d));
    if (k.kind == KodairaKind::Instar && v_j && *v_j != -k.n)
        throw InconsistentPair(k.str() + " needs v(j) = " + std::to_string(-k.n));
    if (!allowed_d_additive(p, f, v_j).count(d))
        throw InconsistentPair("d = " + std::to_string(d) + " is outside the additive list");
}

// Reduction flavours ruled out for a curve with a rational point of order p.
inline std::vector<std::string> exclusion_check(const CurveReductionData& c) {
    require_unramified_base(c);
    std::vector<std::string> out;
    auto r = reduction_type(c.kodaira);
    if (r == ReductionType::Good && c.supersingular) out.push_back("good supersingular reduction");
    if (r == ReductionType::Multiplicative && !c.split) out.push_back("non-split multiplicative reduction");
    if (r == ReductionType::Additive && !(c.p == 2 || c.p == 3 || c.p == 5 || c.p == 7))
        out.push_back("additive reduction at p = " + std::to_string(c.p));
    return out;
}

// T - a T^p has a root T != 0 in k, i.e. a T^{p-1} = 1 is solvable.
inline bool nontrivial_root_exists(const GFElement& a, long p) {
    if (a.is_zero()) return false;
    for (const GFElement& t : a.field().elements())
        if (!t.is_zero() && (a * t.pow(p - 1)).is_one()) return true;
    return false;
}

// a4, a6: coefficients of y^2 = x^3 + a4 x + a6 lying in the maximal ideal.
inline bool additive_torsion_test(long p, const Rational& a4, const Rational& a6, const FiniteField& k) {
    if (p != 5 && p != 7) throw BadPrime("the torsion test is stated for p = 5 and p = 7 only");
    if (k.characteristic() != p) throw WrongRegime("residue field must have characteristic p");
    Rational a = p == 5 ? Rational(3) * a4 / 5 : Rational(4) * a6 / 7;
    return nontrivial_root_exists(k.from_int(rational_mod(a, p)), p);
}

// The residue a of the test, for reports.
inline long additive_torsion_parameter(long p, const Rational& a4, const Rational& a6) {
    if (p != 5 && p != 7) throw BadPrime("the torsion test is stated for p = 5 and p = 7 only");
    Rational a = p == 5 ? Rational(3) * a4 / 5 : Rational(4) * a6 / 7;
    return static_cast<long>(rational_mod(a, p));
}

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// The per-curve consistency battery.
inline std::vector<CheckResult> curve_checks(const CurveReductionData& c) {
    std::vector<CheckResult> out;
    out.push_back({"ogg", ogg_check(c),
                   "f + d = " + std::to_string(c.f + c.d) + ", v(disc) + 1 = " + std::to_string(c.v_delta_min + 1)});
    auto r = reduction_type(c.kodaira);
    auto range = conductor_of_type(c.p, r);
    out.push_back({"conductor", range.contains(c.f),
                   std::string(to_string(r)) + " allows f in [" + std::to_string(range.lo) + "," + std::to_string(range.hi) + "]"});
    if (r == ReductionType::Additive) {
        try {
            check_additive_pair(c.p, c.kodaira, c.f, c.d, c.v_j);
            out.push_back({"additive_d", true, c.kodaira.str() + " gives d = " + std::to_string(c.d)});
        } catch (const InconsistentPair& e) {
            out.push_back({"additive_d", false, e.what()});
        }
    } else if (r == ReductionType::Multiplicative) {
        bool ok = c.v_j && c.d == -*c.v_j;
        out.push_back({"multiplicative_d", ok, "d = -v(j)"});
    }
    auto viol = exclusion_check(c);
    std::string vs;
    for (auto& v : viol) vs += (vs.empty() ? "" : "; ") + v;
    out.push_back({"exclusion", viol.empty(), viol.empty() ? "no excluded reduction" : vs});
    if (c.weierstrass) {
        auto inv = weierstrass_invariants(*c.weierstrass);
        int v = valuation(inv.disc, c.p);
        out.push_back({"discriminant", v == c.v_delta_min, "v_p(disc) of the model = " + std::to_string(v)});
        auto vj = j_valuation(inv, c.p);
        bool ok = vj == c.v_j;
        out.push_back({"j_valuation", ok, vj ? "v_p(j) = " + std::to_string(*vj) : std::string("j = 0")});
    }
    return out;
}

// ---- special fibres -----------------------------------------------------

struct SpecialFibre {
    long p = 3;
    int f = 0, d = 1, w = 1;
    FiniteField field;
    GFElement lambda;
    // displayed coefficients (lambda, lambda^{1-p}, lambda^{2-p})
    std::array<GFElement, 3> coefficients;
    QPresentation<GFElement> presentation;
};

// II_w over k(zeta_w) of characteristic p, w = f + d; m is the degree of k.
inline SpecialFibre build_special_fibre(long p, int f, int d, int m = 1) {
    if (p < 3 || !is_prime(p)) throw BadPrime("special fibres need an odd prime");
    int w = f + d;
    if (w < 1 || f < 0 || d < 1) throw InconsistentPair("need f >= 0, d >= 1");
    FiniteField F = residue_field(PrimeContext{p, m, 1}, w);
    GFElement lambda = zeta_image(F, w);
    SpecialFibre s{p, f, d, w, F, lambda, {lambda, lambda.pow(1 - p), lambda.pow(2 - p)},
                   build_II(p, lambda, IIForm::Shifted)};
    return s;
}

// Symbolic case split for Ext^1 between (D, z1, t1) and (D, z2, t2) on a special fibre.
template <class S>
int predict_ext_inf(long p, const S& lambda, const Character<S>& n1, const Character<S>& n2) {
    if (n1.size() != 3 || n2.size() != 3) throw LengthMismatch("characters of II have three entries");
    if (n1[0] != n2[0]) throw InvalidModule("both modules must share the discriminant slot");
    S m = lambda.pow(2 - p);
    bool d0 = n1[0].is_zero();
    if (d0 && n1[1].is_zero() && n2[1].is_zero() && n2[2] == m * n1[2]) return 1;
    if (d0 && n1[2].is_zero() && n2[2].is_zero() && n1[1] == m * n2[1]) return 1;
    return 0;
}

// ---- theta elements -----------------------------------------------------

template <class S>
struct ThetaVector {
    long p = 3;
    std::vector<S> coeffs;  // theta_0 .. theta_{p-1}
    // provenance of theta = S([a]P + [b]Q)
    long a = 0, b = 0;
    std::string label;

    void validate() const {
        if (static_cast<long>(coeffs.size()) != p)
            throw LengthMismatch("theta needs " + std::to_string(p) + " coefficients, got " + std::to_string(coeffs.size()));
    }
    // generator slot k of II carries theta index 0, 1, p-1
    const S& slot(int k) const {
        if (k < 0 || k > 2) throw IndexOutOfRange("generator slot must be 0, 1 or 2");
        return coeffs[k == 2 ? p - 1 : k];
    }
};

template <class S>
NCPoly<S> theta_hyperplane(const ThetaVector<S>& t) {
    t.validate();
    NCPoly<S> h;
    for (int k = 0; k < 3; ++k)
        if (!t.slot(k).is_zero()) {
            Exponents e(3, 0);
            e[k] = 1;
            h.emplace(e, t.slot(k));
        }
    return h;
}

template <class S>
struct NFamily {
    long p = 3;
    S delta_E;
    std::vector<S> z;
    ThetaVector<S> theta;
    S zeta_w;
    std::vector<Character<S>> members;
    std::vector<bool> valid;
    bool all_z_nonzero = false;  // then the etale point is empty

    bool all_valid() const {
        for (bool v : valid)
            if (!v) return false;
        return true;
    }
};

template <class S>
NFamily<S> build_n_family(long p, const S& zeta_w, const S& delta_E, const std::vector<S>& z, const ThetaVector<S>& theta) {
    if (static_cast<long>(z.size()) != p) throw LengthMismatch("z needs p entries");
    if (theta.p != p) throw LengthMismatch("theta was built for a different prime");
    theta.validate();
    auto P = build_II(p, zeta_w, IIForm::Shifted);
    NFamily<S> fam{p, delta_E, z, theta, zeta_w, {}, {}, true};
    for (long j = 0; j < p; ++j) {
        Character<S> chi{delta_E, z[j], theta.coeffs[j]};
        fam.valid.push_back(validate_module(P, chi));
        fam.members.push_back(std::move(chi));
        if (z[j].is_zero()) fam.all_z_nonzero = false;
    }
    return fam;
}

template <class S>
NFamily<S> mirror_family(const NFamily<S>& fam) {
    NFamily<S> out = fam;
    S m = fam.zeta_w.pow(2 - fam.p);
    for (auto& c : out.theta.coeffs) c = m * c;
    for (auto& chi : out.members) chi = mirror(chi, fam.zeta_w, fam.p);
    return out;
}

template <class S>
NFamily<S> mirror_dual_family(const NFamily<S>& fam) {
    NFamily<S> out = fam;
    S m = fam.zeta_w.pow(fam.p - 2);
    for (auto& c : out.theta.coeffs) c = m * c;
    for (auto& chi : out.members) chi = mirror_dual(chi, fam.zeta_w, fam.p);
    return out;
}

// ---- quantum-plane quotients ----------------------------------------------

// Normal words of k<x, y>/(yx -> c xy, x^w -> ., y^w -> .): x^s y^t, s, t < w.
// Enumerated by growing irreducible words letter by letter.
inline int quantum_plane_basis_size(int w) {
    if (w < 1) throw IndexOutOfRange("w must be positive");
    std::vector<std::string> frontier{""};
    int count = 0;
    while (!frontier.empty()) {
        std::vector<std::string> next;
        for (auto& s : frontier) {
            ++count;
            for (char c : {'x', 'y'}) {
                std::string t = s + c;
                if (t.size() >= 2 && t[t.size() - 2] == 'y' && c == 'x') continue;
                if (t.size() >= static_cast<size_t>(w) && t.find(std::string(w, c)) != std::string::npos) continue;
                next.push_back(std::move(t));
            }
        }
        frontier = std::move(next);
    }
    return count;
}

template <class S>
struct QuantumPlaneQuotient {
    int i = 0, j = 1, w = 1;
    long p = 3;
    long a = 1;
    S q_power;  // e_i e_j = q_power e_j e_i
    S theta_i, theta_j;
    bool azumaya = false;      // theta_i theta_j != 0
    bool commutative = false;  // q_power = 1
    bool central_simple = false;
    bool associative = false;  // every overlap resolves on the w^2 basis
    int rank = 0;
    std::string label;
};

template <class S>
bool quantum_plane_associative(int w, const S& q, const S& ti, const S& tj) {
    // coeff * x^s y^t with coeff = c^k ti^a tj^b kept as exponents
    struct Term {
        long k;
        int a, b, s, t;
    };
    S c = q.inv();  // y x = c x y
    auto mul = [&](const Term& u, const Term& v) {
        Term r{u.k + v.k + static_cast<long>(u.t) * v.s, u.a + v.a, u.b + v.b, u.s + v.s, u.t + v.t};
        if (r.s >= w) { ++r.a; r.s -= w; }
        if (r.t >= w) { ++r.b; r.t -= w; }
        return r;
    };
    std::vector<S> cpow{q.field().one()};
    auto value = [&](const Term& u) {
        while (static_cast<long>(cpow.size()) <= u.k) cpow.push_back(cpow.back() * c);
        return cpow[u.k] * ti.pow(u.a) * tj.pow(u.b);
    };
    // every basis word is a product of generators under mul, so it is enough
    // to let the left factor run over x and y
    for (auto [s1, t1] : {std::pair{1 % w, 0}, std::pair{0, 1 % w}})
        for (int s2 = 0; s2 < w; ++s2)
            for (int t2 = 0; t2 < w; ++t2)
                for (int s3 = 0; s3 < w; ++s3)
                    for (int t3 = 0; t3 < w; ++t3) {
                        Term x{0, 0, 0, s1, t1}, y{0, 0, 0, s2, t2}, z{0, 0, 0, s3, t3};
                        Term l = mul(mul(x, y), z), r = mul(x, mul(y, z));
                        if (l.s != r.s || l.t != r.t) return false;
                        if (l.k == r.k && l.a == r.a && l.b == r.b) continue;
                        if (value(l) != value(r)) return false;
                    }
    return true;
}

template <class S>
QuantumPlaneQuotient<S> brauer_class(const ThetaVector<S>& theta, int i, int j, int w, long p, const S& zeta_w) {
    if (!(0 <= i && i < j && j <= 2)) throw IndexOutOfRange("need 0 <= i < j <= 2");
    if (w < 1) throw IndexOutOfRange("w must be positive");
    theta.validate();
    QuantumPlaneQuotient<S> Q;
    Q.i = i;
    Q.j = j;
    Q.w = w;
    Q.p = p;
    Q.a = (i == 0 && j == 1) ? 1 : (i == 0 ? p - 1 : p - 2);
    Q.q_power = zeta_w.pow(Q.a);
    Q.theta_i = theta.slot(i);
    Q.theta_j = theta.slot(j);
    Q.azumaya = !(Q.theta_i * Q.theta_j).is_zero();
    Q.commutative = Q.q_power.is_one();
    Q.central_simple = Q.azumaya && is_primitive_root(Q.q_power, w);
    Q.rank = quantum_plane_basis_size(w);
    Q.associative = quantum_plane_associative(w, Q.q_power, Q.theta_i, Q.theta_j);
    if (!Q.azumaya)
        Q.label = "degenerate";
    else if (Q.central_simple)
        Q.label = w == 2 ? "quaternion" : "cyclic";
    else if (Q.commutative)
        Q.label = "commutative";
    else
        Q.label = "not_central_simple";
    return Q;
}

}  // namespace jackson

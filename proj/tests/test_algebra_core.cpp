#include <gtest/gtest.h>

#include <random>

#include "jackson/jackson.hpp"

using namespace jackson;

namespace {

template <class S>
NCPoly<S> nf(const QPresentation<S>& P, const std::string& expr) {
    return normal_form(P, ExprParser<S>(P.field(), P.gens()).parse(expr));
}

template <class S>
NCPoly<S> poly(const QPresentation<S>& P, const std::string& expr) {
    // only valid for expressions already in sorted form
    NCPoly<S> out;
    for (auto& [w, c] : ExprParser<S>(P.field(), P.gens()).parse(expr)) {
        Exponents e(P.gens(), 0);
        for (int k : w) ++e[k];
        accumulate(out, e, c);
    }
    return out;
}

template <class S>
bool is_quantum_affine(const QPresentation<S>& P) {
    return P.all_tails_zero();
}

template <class S>
bool is_commutative_polynomial(const QPresentation<S>& P) {
    for (auto* r : P.ordered_rules())
        if (!r->q.is_one() || !r->tail_zero()) return false;
    return true;
}

}  // namespace

// ---- hom-Lie bracket -------------------------------------------------------

TEST(HomLie, DiagonalVanishes) {
    CyclotomicField F(5);
    BracketMode<Cyclotomic> m{IndexMode::Truncating, F.one()};
    for (int i = 0; i < 4; ++i) EXPECT_TRUE(hom_lie_bracket(i, i, 4, F.zeta(), F.from_int(3), m).empty());
}

TEST(HomLie, TableForThreeGenerators) {
    CyclotomicField F(7);
    auto q = F.zeta(), a = F.from_int(3);
    BracketMode<Cyclotomic> m{IndexMode::Truncating, F.one()};
    QPresentation<Cyclotomic> shape = build_polynomial<Cyclotomic>(F, 3);
    EXPECT_EQ(hom_lie_bracket(0, 1, 3, q, a, m), poly(shape, "3*(1-z)*e1"));
    EXPECT_EQ(hom_lie_bracket(0, 2, 3, q, a, m), poly(shape, "3*(1-z^2)*e2"));
    EXPECT_TRUE(hom_lie_bracket(1, 2, 3, q, a, m).empty());
    EXPECT_EQ(hom_lie_bracket(1, 0, 3, q, a, m), poly(shape, "-3*(1-z)*e1"));
}

TEST(HomLie, WrappingMultipliesByX) {
    CyclotomicField F(5);
    auto q = F.zeta(), a = F.one(), x = F.from_int(7);
    BracketMode<Cyclotomic> m{IndexMode::Wrapping, x};
    auto v = bracket_vector(2, 2 + 1, 4, q, a, m);  // 2 + 3 = 5 -> e_1 with one factor of x
    EXPECT_EQ(v[1], (q.pow(2) - q.pow(3)) * x);
    EXPECT_THROW(bracket_vector(0, 4, 4, q, a, m), IndexOutOfRange);
}

TEST(HomLie, TruncatingJacobiUpToSix) {
    CyclotomicField F(7);
    BracketMode<Cyclotomic> m{IndexMode::Truncating, F.one()};
    for (int n = 2; n <= 6; ++n) {
        auto res = check_hom_jacobi(n, F.zeta(), F.from_int(2), m);
        EXPECT_TRUE(res.antisymmetric) << n;
        EXPECT_TRUE(res.holds) << n;
    }
}

TEST(HomLie, JacobiOverFiniteField) {
    FiniteField F(11, 1);
    BracketMode<GFElement> m{IndexMode::Truncating, F.one()};
    for (int n = 2; n <= 6; ++n) EXPECT_TRUE(check_hom_jacobi(n, F.from_int(3), F.from_int(5), m).holds) << n;
}

// ---- Kummer-Witt ------------------------------------------------------------

TEST(KummerWitt, TwoGenerators) {
    CyclotomicField F(2);
    auto P = build_kummer_witt(2, 1, F.from_int(5), F.zeta());
    // e_0e_1 - (-1)e_1e_0 - 2 e_1 = 0, i + j = 1 < 2 so x is absent
    const auto& r = P.rule(1, 0);
    EXPECT_EQ(r.q, F.from_int(-1));
    ASSERT_EQ(r.lin.size(), 1u);
    EXPECT_EQ(r.lin.at(1), F.from_int(2));
    EXPECT_TRUE(r.c.is_zero());
    EXPECT_TRUE(nf(P, "e0*e1 + e1*e0 - 2*e1").empty());
}

TEST(KummerWitt, RelationMatchesDefinition) {
    CyclotomicField F(5);
    auto z = F.zeta();
    auto x = F.from_int(3);
    auto P = build_kummer_witt(5, 2, x, z);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            WordPoly<Cyclotomic> w;
            auto Q = z.pow(2 * (j - i));
            accumulate(w, Word{i, j}, F.one());
            accumulate(w, Word{j, i}, -Q);
            auto coef = F.one() - Q;
            if (i + j >= 5) coef *= x;
            accumulate(w, Word{(i + j) % 5}, -coef);
            EXPECT_TRUE(normal_form(P, w).empty()) << i << "," << j;
        }
}

TEST(KummerWitt, XZeroKillsOnlyWrappedTails) {
    CyclotomicField F(4);
    auto P = build_kummer_witt(4, 1, F.zero(), F.zeta());
    for (auto* r : P.ordered_rules()) {
        if (r->i + r->j >= 4) EXPECT_TRUE(r->tail_zero()) << r->j << "," << r->i;
        else EXPECT_EQ(r->lin.count(r->i + r->j), 1u) << r->j << "," << r->i;
    }
}

TEST(KummerWitt, PrimitivityDemanded) {
    CyclotomicField F(6);
    EXPECT_THROW(build_kummer_witt(6, 2, F.one(), F.zeta(), true), NotPrimitive);
    EXPECT_NO_THROW(build_kummer_witt(6, 1, F.one(), F.zeta(), true));
}

TEST(KummerWitt, SmallConfluent) {
    for (int n : {2, 3}) {
        CyclotomicField F(n);
        EXPECT_TRUE(check_confluence(build_kummer_witt(n, 1, F.from_int(2), F.zeta())).empty()) << n;
    }
}

// ---- Jackson ----------------------------------------------------------------

TEST(Jackson, TrivialRootIsCommutative) {
    CyclotomicField F(3);
    auto P = build_jackson(3, F.from_int(4), F.zeta());  // zeta^3 = 1, omega = 0
    for (auto* r : P.ordered_rules()) EXPECT_TRUE(r->q.is_one());
    // the (2,1) rule keeps x e_0; the algebra is commutative only when x = 0
    auto Q = build_jackson(3, F.zero(), F.zeta());
    EXPECT_TRUE(is_commutative_polynomial(Q));
}

TEST(Jackson, MinusOne) {
    CyclotomicField F(2);
    auto x = F.from_int(5);
    auto P = build_jackson(1, x, F.zeta());
    EXPECT_TRUE(nf(P, "e0*e1 + e1*e0").empty());
    EXPECT_TRUE(nf(P, "e2*e0 + e0*e2").empty());
    EXPECT_TRUE(nf(P, "e2*e1 - e1*e2 - 5*e0").empty());
}

TEST(Jackson, XZeroIsQuantumAffine) {
    CyclotomicField F(5);
    EXPECT_TRUE(is_quantum_affine(build_jackson(1, F.zero(), F.zeta())));
}

TEST(Jackson, NormalFormExamples) {
    CyclotomicField F(5);
    auto P = build_jackson(2, F.from_int(3), F.zeta());
    EXPECT_EQ(nf(P, "e1*e0"), poly(P, "z^(-2)*e0*e1"));
    EXPECT_EQ(nf(P, "e2*e1"), poly(P, "z^4*e1*e2 + 3*e0 + 3*(1-z^4)"));
    EXPECT_EQ(nf(P, "e0^2*e1*e2^3"), poly(P, "e0^2*e1*e2^3"));
}

TEST(Jackson, ConfluentUpToEight) {
    for (long n = 2; n <= 8; ++n) {
        CyclotomicField F(n);
        for (long r = 1; r < n; ++r)
            EXPECT_TRUE(check_confluence(build_jackson(r, F.from_int(2), F.zeta())).empty()) << n << " " << r;
    }
}

TEST(Jackson, Centrality) {
    for (long n = 2; n <= 8; ++n) {
        CyclotomicField F(n);
        for (long r = 1; r < n; ++r) {
            if (std::gcd(r, n) != 1) continue;
            auto P = build_jackson(r, F.from_int(3), F.zeta());
            const auto one = F.one();
            for (int g = 0; g < 3; ++g) {
                EXPECT_TRUE(is_central(P, generator_power(3, g, static_cast<int>(n), one))) << n << r << g;
                for (int m = 1; m < n; ++m)
                    EXPECT_FALSE(is_central(P, generator_power(3, g, m, one))) << n << r << g << m;
            }
        }
    }
}

TEST(Jackson, LeastCentralPower) {
    // zeta^r of order 3 inside Q(zeta_6): the least l with lr = 0 mod 6 is 3
    CyclotomicField F(6);
    auto P = build_jackson(2, F.from_int(3), F.zeta());
    EXPECT_TRUE(is_central(P, generator_power(3, 0, 3, F.one())));
    EXPECT_FALSE(is_central(P, generator_power(3, 0, 2, F.one())));
    EXPECT_TRUE(is_central(P, poly(P, "1")));
}

TEST(Jackson, PBWSoundness) {
    CyclotomicField F(5);
    auto P = build_jackson(1, F.from_int(2), F.zeta());
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> gen(0, 2), len(1, 4);
    auto random_word = [&] {
        Word w(len(rng));
        for (auto& k : w) k = gen(rng);
        return w;
    };
    for (int t = 0; t < 30; ++t) {
        Word u = random_word(), v = random_word();
        auto nu = normal_form_word(P, u), nv = normal_form_word(P, v);
        Word uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        EXPECT_EQ(normal_form_word(P, uv), multiply(P, nu, nv));
        EXPECT_EQ(normal_form(P, to_words(nu)), nu);
        EXPECT_EQ(normal_form(P, to_words(nu), Strategy::Rightmost), nu);
        // linearity
        WordPoly<Cyclotomic> sum;
        accumulate(sum, u, F.from_int(2));
        accumulate(sum, v, F.zeta());
        EXPECT_EQ(normal_form(P, sum), add(add(NCPoly<Cyclotomic>{}, nu, F.from_int(2)), nv, F.zeta()));
    }
}

TEST(Jackson, StrategyIndependent) {
    CyclotomicField F(7);
    auto P = build_jackson(3, F.from_int(5), F.zeta());
    WordPoly<Cyclotomic> w;
    accumulate(w, Word{2, 2, 1, 0, 1, 2, 0}, F.one());
    EXPECT_EQ(normal_form(P, w, Strategy::Leftmost), normal_form(P, w, Strategy::Rightmost));
}

// ---- infinitesimal ---------------------------------------------------------

TEST(Infinitesimal, ShiftedTruncatingThreeIsQuantumAffine) {
    CyclotomicField F(7);
    auto q = F.zeta();
    auto P = build_infinitesimal(3, q, IndexMode::Truncating);
    // e_0 -> e_0 + 1
    auto S = shift_generators(P, {F.one(), F.zero(), F.zero()});
    EXPECT_TRUE(is_quantum_affine(S));
    EXPECT_EQ(S.rule(1, 0).q, q.inv());
    EXPECT_EQ(S.rule(2, 0).q, q.pow(-2));
}

TEST(Infinitesimal, QOneIsCommutative) {
    CyclotomicField F(5);
    for (auto mode : {IndexMode::Truncating, IndexMode::Wrapping})
        EXPECT_TRUE(is_commutative_polynomial(build_infinitesimal(4, F.one(), mode)));
}

TEST(Infinitesimal, TailOfOneThree) {
    CyclotomicField F(5);
    auto P = build_infinitesimal(5, F.zeta());
    EXPECT_EQ(nf(P, "e1*e3 - z^2*e3*e1"), poly(P, "(1-z^2)*e4"));
}

TEST(Infinitesimal, WrappingVersusTruncating) {
    CyclotomicField F(5);
    auto W = build_infinitesimal(3, F.zeta(), IndexMode::Wrapping);
    auto T = build_infinitesimal(3, F.zeta(), IndexMode::Truncating);
    EXPECT_EQ(W.rule(2, 1).lin.count(0), 1u);
    EXPECT_TRUE(T.rule(2, 1).tail_zero());
    EXPECT_TRUE(check_confluence(T).empty());
    // the wrapped e0 tail leaves c (e0^2 - e0) on the overlap (2, 1, 0)
    auto w = check_confluence(W);
    ASSERT_EQ(w.size(), 1u);
    EXPECT_EQ(w[0].k, 2);
}

// ---- II ---------------------------------------------------------------------

TEST(II, ShiftedLambdaOneIsCommutative) {
    CyclotomicField F(3);
    EXPECT_TRUE(is_commutative_polynomial(build_II(7, F.one(), IIForm::Shifted)));
}

TEST(II, ShiftedZeta3AtSeven) {
    CyclotomicField F(3);
    auto z = F.zeta();
    auto P = build_II(7, z, IIForm::Shifted);
    EXPECT_TRUE(nf(P, "e0*e1 - z*e1*e0").empty());
    EXPECT_TRUE(nf(P, "e2*e0 - e0*e2").empty());
    EXPECT_TRUE(nf(P, "e2*e1 - z*e1*e2").empty());
}

TEST(II, RawShiftsToShifted) {
    for (long p : {3, 5, 7, 11, 13}) {
        CyclotomicField F(p);
        auto lam = F.zeta();
        auto raw = build_II(p, lam, IIForm::Raw);
        auto S = shift_generators(raw, {F.one(), F.zero(), F.zero()});
        auto want = build_II(p, lam, IIForm::Shifted);
        for (auto* r : want.ordered_rules()) {
            const auto& got = S.rule(r->j, r->i);
            EXPECT_EQ(got.q, r->q) << p;
            EXPECT_TRUE(got.tail_zero()) << p;
        }
    }
}

TEST(II, ConfluentUpToThirteen) {
    for (long p : {3, 5, 7, 11, 13}) {
        CyclotomicField F(p);
        for (auto form : {IIForm::Raw, IIForm::Shifted})
            EXPECT_TRUE(check_confluence(build_II(p, F.zeta(), form)).empty()) << p;
    }
    EXPECT_THROW(build_II(4, CyclotomicField(3).zeta(), IIForm::Raw), BadPrime);
}

// ---- generic checks -------------------------------------------------------

TEST(Confluence, QuantumAffineAlwaysConfluent) {
    FiniteField F(7, 1);
    std::vector<std::vector<GFElement>> q(4, std::vector<GFElement>(4, F.one()));
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < j; ++i) q[j][i] = F.from_int(1 + (3 * j + i) % 6);
    EXPECT_TRUE(check_confluence(build_quantum_affine<GFElement>(F, 4, q)).empty());
}

TEST(Confluence, PerturbedFixtureHasWitness) {
    auto j = read_json_file(std::string(JACKSON_FIXTURE_DIR) + "/jackson_perturbed.json");
    auto P = std::get<QPresentation<Cyclotomic>>(presentation_from_json(j));
    auto w = check_confluence(P);
    ASSERT_EQ(w.size(), 1u);
    EXPECT_EQ(w[0].k, 2);
    EXPECT_EQ(w[0].j, 1);
    EXPECT_EQ(w[0].i, 0);
}

TEST(Rewriting, FuelExhaustion) {
    CyclotomicField F(5);
    auto P = build_jackson(1, F.one(), F.zeta());
    WordPoly<Cyclotomic> w;
    accumulate(w, Word{2, 2, 2, 1, 1, 1, 0, 0, 0}, F.one());
    EXPECT_THROW(normal_form(P, w, Strategy::Leftmost, 3), NonTerminating);
    accumulate(w, Word{3}, F.one());
    EXPECT_THROW(normal_form(P, w), IndexOutOfRange);
}

TEST(Presentation, Malformed) {
    CyclotomicField F(3);
    QPresentation<Cyclotomic> P(F, 3);
    P.set_rule(1, 0, F.one());
    EXPECT_THROW(P.validate(), MalformedPresentation);
    EXPECT_THROW(P.set_rule(1, 0, F.zero()), MalformedPresentation);
    EXPECT_THROW(P.set_rule(1, 1, F.one()), MalformedPresentation);
    EXPECT_THROW(P.set_rule(3, 0, F.one()), IndexOutOfRange);
}

TEST(Presentation, ReversedOrientation) {
    // e_0 e_1 = 2 e_1 e_0 + e_2 is stored as e_1 e_0 = 1/2 e_0 e_1 - 1/2 e_2
    FiniteField F(7, 1);
    QPresentation<GFElement> P(F, 3);
    P.set_rule(0, 1, F.from_int(2), {{2, F.one()}}, F.zero());
    const auto& r = P.rule(1, 0);
    EXPECT_EQ(r.q, F.from_int(4));
    EXPECT_EQ(r.lin.at(2), F.from_int(-4));
}

// ---- specialization --------------------------------------------------------

TEST(Specialize, KWTrivialRootGivesPolynomial) {
    CyclotomicField F(3);
    auto P = build_kummer_witt(3, 1, F.from_int(2), F.zeta());
    auto R = specialize(P, PrimeContext{3, 1, 1});
    EXPECT_TRUE(is_commutative_polynomial(R));
    EXPECT_EQ(inspect_kw_fibre(R), KWFibre::Polynomial);
}

TEST(Specialize, KWXReducingToZeroKeepsUnwrappedTails) {
    // x = 7 vanishes mod 7, zeta_3 reduces to 2 in F_7
    CyclotomicField F(3);
    auto P = build_kummer_witt(3, 1, F.from_int(7), F.zeta());
    auto R = specialize(P, PrimeContext{7, 1, 1});
    for (auto* r : R.ordered_rules()) {
        EXPECT_FALSE(r->q.is_one());
        if (r->i + r->j >= 3) EXPECT_TRUE(r->tail_zero());
        else EXPECT_FALSE(r->tail_zero());
    }
    EXPECT_EQ(inspect_kw_fibre(R), KWFibre::Generic);
}

TEST(Specialize, KWGenericUnchanged) {
    CyclotomicField F(3);
    auto P = build_kummer_witt(3, 1, F.from_int(2), F.zeta());
    auto R = specialize(P, PrimeContext{7, 1, 1});
    for (auto* r : P.ordered_rules()) {
        const auto& s = R.rule(r->j, r->i);
        EXPECT_EQ(s.q, reduce(r->q, R.field()));
        EXPECT_EQ(s.lin.size(), r->lin.size());
    }
    EXPECT_TRUE(check_confluence(R).empty());
    EXPECT_EQ(inspect_kw_fibre(R), KWFibre::Generic);
}

TEST(Specialize, NotReducible) {
    CyclotomicField F(3);
    auto P = build_jackson(1, F.from_rational(Rational(1, 5)), F.zeta());
    EXPECT_THROW(specialize(P, PrimeContext{5, 1, 1}), NotReducible);
}

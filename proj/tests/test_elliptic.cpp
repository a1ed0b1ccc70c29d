#include <gtest/gtest.h>

#include "jackson/jackson.hpp"
#include "oracles.hpp"

using namespace jackson;

namespace {

const char* kCurves[] = {"50b2", "50a4", "49a3", "490k2", "27a1", "54b3"};

CurveReductionData load(const std::string& label) {
    return curve_from_json(read_json_file(std::string(JACKSON_FIXTURE_DIR) + "/" + label + ".json"));
}

// nonzero roots of T - a T^p in F_p, counted directly
int nonzero_roots(long a, long p) {
    int n = 0;
    for (long t = 1; t < p; ++t) {
        long tp = 1;
        for (long k = 0; k < p; ++k) tp = tp * t % p;
        if (((t - a * tp) % p + p) % p == 0) ++n;
    }
    return n;
}

}  // namespace

// ---- fixture data ----------------------------------------------------------

TEST(Curves, AllChecksPass) {
    for (auto label : kCurves) {
        auto c = load(label);
        for (auto& r : curve_checks(c)) EXPECT_TRUE(r.passed) << label << " " << r.name << ": " << r.detail;
    }
}

TEST(Curves, TorsionPointsLieOnTheCurve) {
    for (auto label : kCurves) {
        auto c = load(label);
        ASSERT_TRUE(c.weierstrass);
        auto& a = *c.weierstrass;
        for (auto& [x, y, z] : c.torsion_points) {
            // homogeneous Weierstrass equation
            Integer lhs = y * y * z + a[0] * x * y * z + a[2] * y * z * z;
            Integer rhs = x * x * x + a[1] * x * x * z + a[3] * x * z * z + a[4] * z * z * z;
            EXPECT_EQ(lhs, rhs) << label;
        }
    }
}

TEST(Curves, ShortModelDiscriminant) {
    // Delta(y^2 = x^3 + Ax + B) = -16 (4A^3 + 27B^2) = 6^12 Delta
    for (auto label : kCurves) {
        auto c = load(label);
        auto inv = weierstrass_invariants(*c.weierstrass);
        auto s = short_model(inv);
        Integer lhs = -16 * (4 * s.A * s.A * s.A + 27 * s.B * s.B);
        Integer six12 = 2176782336;
        EXPECT_EQ(lhs, six12 * inv.disc) << label;
    }
}

TEST(Curves, Discriminant27a1) {
    auto inv = weierstrass_invariants({0, 0, 1, 0, -7});
    EXPECT_EQ(inv.disc, Integer(-19683));
    EXPECT_EQ(valuation(inv.disc, 3), 9);
    EXPECT_FALSE(j_valuation(inv, 3));
}

TEST(Curves, TorsionTestOnNormalizedModels) {
    for (auto [label, expect] : {std::pair{"50b2", true}, std::pair{"50a4", false}, std::pair{"490k2", true},
                                 std::pair{"49a3", false}}) {
        auto c = load(label);
        auto s = short_model(weierstrass_invariants(*c.weierstrass));
        // the test needs coefficients in the maximal ideal
        ASSERT_EQ(Integer(s.A % c.p), 0) << label;
        ASSERT_EQ(Integer(s.B % c.p), 0) << label;
        FiniteField k(c.p, 1);
        bool got = additive_torsion_test(c.p, Rational(s.A), Rational(s.B), k);
        EXPECT_EQ(got, expect) << label;
        long a = additive_torsion_parameter(c.p, Rational(s.A), Rational(s.B));
        EXPECT_EQ(got, nonzero_roots(a, c.p) > 0) << label;
    }
}

TEST(TorsionTest, Examples) {
    FiniteField k(5, 1);
    EXPECT_FALSE(additive_torsion_test(5, Rational(0), Rational(0), k));
    // a = 3 a4 / 5 = 1 for a4 = 10
    EXPECT_TRUE(additive_torsion_test(5, Rational(10), Rational(0), k));
    EXPECT_THROW(additive_torsion_test(11, Rational(0), Rational(0), k), BadPrime);
    for (long a = 0; a < 7; ++a)
        EXPECT_EQ(nontrivial_root_exists(FiniteField(7, 1).from_int(a), 7), nonzero_roots(a, 7) > 0) << a;
}

// ---- tables ---------------------------------------------------------------

TEST(Ogg, Examples) {
    CurveReductionData good;
    good.kodaira = KodairaSymbol::I(0);
    good.f = 0; good.d = 1; good.v_delta_min = 0;
    EXPECT_TRUE(ogg_check(good));
    CurveReductionData mult;
    mult.kodaira = KodairaSymbol::I(5);
    mult.f = 1; mult.d = 5; mult.v_delta_min = 5;
    EXPECT_TRUE(ogg_check(mult));
    mult.v_delta_min = 4;
    EXPECT_FALSE(ogg_check(mult));
}

TEST(Conductor, Table) {
    EXPECT_EQ(conductor_of_type(7, ReductionType::Multiplicative).lo, 1);
    EXPECT_TRUE(conductor_of_type(7, ReductionType::Multiplicative).exact());
    EXPECT_EQ(conductor_of_type(5, ReductionType::Additive).lo, 2);
    EXPECT_TRUE(conductor_of_type(5, ReductionType::Additive).exact());
    auto r = conductor_of_type(3, ReductionType::Additive);
    EXPECT_EQ(r.lo, 2);
    EXPECT_EQ(r.hi, 5);
    EXPECT_EQ(conductor_of_type(3, ReductionType::Good).hi, 0);
    EXPECT_THROW(conductor_of_type(2, ReductionType::Good), BadPrime);
}

TEST(AllowedD, Examples) {
    EXPECT_EQ(allowed_d_additive(3, 2, KodairaSymbol::Istar(2)), 7);
    EXPECT_EQ(allowed_d_additive(3, 4, KodairaSymbol{KodairaKind::IV, 0}), 3);
    EXPECT_EQ(allowed_d_additive(7, 2, KodairaSymbol{KodairaKind::II, 0}), 1);
    EXPECT_EQ(allowed_d_additive(3, 4), (std::set<int>{1, 3, 7, 9}));
    EXPECT_EQ(allowed_d_additive(5, 2, std::optional<int>(-3)), (std::set<int>{1, 2, 3, 5, 7, 8, 9}));
    EXPECT_EQ(allowed_d_additive(5, 2, std::optional<int>(-4)), (std::set<int>{1, 2, 3, 5, 7, 8, 9}));
    EXPECT_TRUE(allowed_d_additive(7, 2, std::optional<int>(-6)).count(11));
    EXPECT_THROW(allowed_d_additive(3, 2, KodairaSymbol{KodairaKind::IV, 0}), InconsistentPair);
    EXPECT_THROW(allowed_d_additive(3, 3, KodairaSymbol{KodairaKind::III, 0}), InconsistentPair);
    EXPECT_THROW(check_additive_pair(3, KodairaSymbol{KodairaKind::IVstar, 0}, 3, 6), InconsistentPair);
}

TEST(Exclusion, Examples) {
    CurveReductionData c;
    c.kodaira = KodairaSymbol{KodairaKind::II, 0};
    c.p = 11;
    EXPECT_EQ(exclusion_check(c).size(), 1u);
    EXPECT_TRUE(exclusion_check(load("490k2")).empty());
    CurveReductionData g;
    g.kodaira = KodairaSymbol::I(0);
    g.p = 13;
    EXPECT_TRUE(exclusion_check(g).empty());
    g.supersingular = true;
    EXPECT_EQ(exclusion_check(g).size(), 1u);
    CurveReductionData m;
    m.kodaira = KodairaSymbol::I(3);
    m.split = false;
    EXPECT_EQ(exclusion_check(m).size(), 1u);
    m.e_abs = 2;
    EXPECT_THROW(exclusion_check(m), WrongRegime);
}

// ---- special fibres ---------------------------------------------------------

TEST(SpecialFibre, TypeIIAtSeven) {
    auto s = build_special_fibre(7, 2, 1);
    EXPECT_EQ(s.field.size(), 7u);
    EXPECT_EQ(s.lambda.order(), 3);
    EXPECT_EQ(s.coefficients[0], s.lambda);
    EXPECT_TRUE(s.coefficients[1].is_one());
    EXPECT_EQ(s.coefficients[2], s.lambda.pow(-2 + 3));  // lambda^{-5} = lambda
    EXPECT_EQ(s.presentation.rule(2, 0).q, s.field.one());
}

TEST(SpecialFibre, TypeIIIAtFive) {
    auto s = build_special_fibre(5, 2, 2);
    EXPECT_EQ(s.lambda.order(), 4);
    EXPECT_TRUE(s.coefficients[1].is_one());
    // lambda^{2-p} = lambda^{-3} = lambda for lambda of order 4
    EXPECT_EQ(s.coefficients[2], s.lambda);
}

TEST(SpecialFibre, I2AtThreeIsAffine) {
    auto s = build_special_fibre(3, 1, 2);
    EXPECT_TRUE(s.lambda.is_one());
    for (auto* r : s.presentation.ordered_rules()) EXPECT_TRUE(r->q.is_one());
}

TEST(SpecialFibre, GoodReductionIsCommutative) {
    auto s = build_special_fibre(5, 0, 1);
    EXPECT_EQ(s.w, 1);
    for (auto* r : s.presentation.ordered_rules()) EXPECT_TRUE(r->q.is_one());
}

TEST(SpecialFibre, ExtendsResidueField) {
    EXPECT_EQ(build_special_fibre(5, 2, 1).field.size(), 25u);  // zeta_3 needs F_25
    EXPECT_EQ(build_special_fibre(7, 2, 1, 2).field.size(), 49u);
}

TEST(SpecialFibre, AlwaysConfluent) {
    for (long p : {3, 5, 7})
        for (int f = 0; f <= 2; ++f)
            for (int d = 1; d <= 6; ++d) {
                auto s = build_special_fibre(p, f, d);
                EXPECT_TRUE(check_confluence(s.presentation).empty()) << p << " " << f << " " << d;
            }
}

TEST(ExtInf, PredictionRows) {
    auto s = build_special_fibre(5, 2, 2);
    const auto& F = s.field;
    auto m = s.lambda.pow(-3);
    Character<GFElement> a{F.zero(), F.zero(), F.from_int(2)}, b{F.zero(), F.zero(), m * F.from_int(2)};
    EXPECT_EQ(predict_ext_inf(5, s.lambda, a, b), 1);
    Character<GFElement> c{F.zero(), m * F.from_int(3), F.zero()}, d{F.zero(), F.from_int(3), F.zero()};
    EXPECT_EQ(predict_ext_inf(5, s.lambda, c, d), 1);
    EXPECT_EQ(predict_ext_inf(5, s.lambda, a, a), 0);
    EXPECT_THROW(predict_ext_inf(5, s.lambda, a, {F.one(), F.zero(), F.zero()}), InvalidModule);
}

// ---- theta data ---------------------------------------------------------------

TEST(Theta, Hyperplane) {
    FiniteField F(7, 1);
    auto t = [&](std::vector<long> v) {
        ThetaVector<GFElement> th;
        th.p = 7;
        for (long x : v) th.coeffs.push_back(F.from_int(x));
        return th;
    };
    NCPoly<GFElement> e0;
    e0.emplace(Exponents{1, 0, 0}, F.one());
    EXPECT_EQ(theta_hyperplane(t({1, 0, 0, 0, 0, 0, 0})), e0);
    NCPoly<GFElement> e2;
    e2.emplace(Exponents{0, 0, 1}, F.from_int(4));
    EXPECT_EQ(theta_hyperplane(t({0, 0, 5, 5, 5, 5, 4})), e2);
    EXPECT_EQ(theta_hyperplane(t({1, 2, 3, 4, 5, 6, 3})).size(), 3u);
    EXPECT_THROW(theta_hyperplane(t({1, 2})), LengthMismatch);
}

TEST(NFamily, Validity) {
    auto s = build_special_fibre(7, 2, 1);
    const auto& F = s.field;
    ThetaVector<GFElement> th;
    th.p = 7;
    for (long k = 0; k < 7; ++k) th.coeffs.push_back(F.from_int(k + 1));
    std::vector<GFElement> zero(7, F.zero());
    auto fam = build_n_family(7, s.lambda, F.zero(), zero, th);
    EXPECT_TRUE(fam.all_valid());
    EXPECT_FALSE(fam.all_z_nonzero);
    // Delta != 0 with z_j != 0 breaks (1 - zeta) Delta z_j = 0
    auto z = zero;
    z[3] = F.one();
    auto bad = build_n_family(7, s.lambda, F.one(), z, th);
    EXPECT_FALSE(bad.valid[3]);
    EXPECT_THROW(build_n_family(7, s.lambda, F.zero(), std::vector<GFElement>(3, F.zero()), th), LengthMismatch);
}

TEST(NFamily, ThirdConditionVanishesWhenMirrorIsTrivial) {
    // p = 5, w = 3: lambda^{2-p} = lambda^{-3} = 1
    auto s = build_special_fibre(5, 2, 1);
    const auto& F = s.field;
    ASSERT_TRUE(s.lambda.pow(-3).is_one());
    ThetaVector<GFElement> th;
    th.p = 5;
    std::vector<GFElement> z;
    for (long k = 0; k < 5; ++k) {
        th.coeffs.push_back(F.from_int(k + 1));
        z.push_back(F.from_int(k % 4 + 1));
    }
    auto fam = build_n_family(5, s.lambda, F.zero(), z, th);
    EXPECT_TRUE(fam.all_valid());
    EXPECT_TRUE(fam.all_z_nonzero);
}

TEST(NFamily, MirrorInvolution) {
    auto s = build_special_fibre(7, 2, 1);
    const auto& F = s.field;
    ThetaVector<GFElement> th;
    th.p = 7;
    for (long k = 0; k < 7; ++k) th.coeffs.push_back(F.from_int(k));
    auto fam = build_n_family(7, s.lambda, F.zero(), std::vector<GFElement>(7, F.zero()), th);
    auto back = mirror_dual_family(mirror_family(fam));
    EXPECT_EQ(back.members, fam.members);
    EXPECT_EQ(back.theta.coeffs, fam.theta.coeffs);
}

// ---- Brauer ---------------------------------------------------------------------

TEST(Brauer, RankIsWSquared) {
    for (int w = 1; w <= 8; ++w) EXPECT_EQ(quantum_plane_basis_size(w), w * w) << w;
}

TEST(Brauer, AzumayaFlag) {
    CyclotomicField F(3);
    ThetaVector<Cyclotomic> th;
    th.p = 5;
    th.coeffs = {F.one(), F.zero(), F.one(), F.one(), F.from_int(2)};
    auto z = F.zeta();
    EXPECT_FALSE(brauer_class(th, 0, 1, 3, 5, z).azumaya);
    auto q = brauer_class(th, 0, 2, 3, 5, z);
    EXPECT_TRUE(q.azumaya);
    EXPECT_EQ(q.theta_j, F.from_int(2));
    EXPECT_EQ(q.q_power, z.pow(4));
    EXPECT_EQ(q.rank, 9);
    EXPECT_TRUE(q.associative);
    EXPECT_EQ(q.label, "cyclic");
    EXPECT_THROW(brauer_class(th, 1, 1, 3, 5, z), IndexOutOfRange);
}

TEST(Brauer, TrivialRootIsCommutative) {
    CyclotomicField F(1);
    ThetaVector<Cyclotomic> th;
    th.p = 3;
    th.coeffs = {F.one(), F.one(), F.one()};
    for (int w = 1; w <= 4; ++w) {
        auto q = brauer_class(th, 0, 1, w, 3, F.one());
        EXPECT_TRUE(q.commutative);
        EXPECT_EQ(q.rank, w * w);
        EXPECT_TRUE(q.associative);
    }
}

TEST(Brauer, QuaternionPairs) {
    CyclotomicField F(2);
    ThetaVector<Cyclotomic> th;
    th.p = 5;
    th.coeffs = std::vector<Cyclotomic>(5, F.from_int(3));
    auto z = F.zeta();
    EXPECT_EQ(brauer_class(th, 0, 1, 2, 5, z).label, "quaternion");
    EXPECT_EQ(brauer_class(th, 1, 2, 2, 5, z).label, "quaternion");
    // a = p - 1 is even, so zeta_2^a = 1 on the pair (0, 2)
    EXPECT_EQ(brauer_class(th, 0, 2, 2, 5, z).label, "commutative");
}

#include <doctest.h>

#include <random>

#include "neron/localred.hpp"
#include "neron/parse.hpp"
#include "neron/weierstrass.hpp"

using namespace neron;

namespace {

RatFunc rf(const Field& F, const std::string& s) {
    return parse_ratfunc(s, F);
}

WeierstrassEq eq(const Field& F, const std::string& s, bool allow_singular = false) {
    EqLiteral lit = parse_equation(s, F);
    return WeierstrassEq::make(lit.a1, lit.a2, lit.a3, lit.a4, lit.a6, allow_singular);
}

RatFunc random_poly_rf(const Field& F, std::mt19937_64& rng, int maxdeg) {
    std::vector<Fq> c;
    int d = static_cast<int>(rng() % (maxdeg + 1));
    for (int i = 0; i <= d; ++i) c.push_back(F->element(static_cast<long>(rng() % F->size())));
    return RatFunc::of(Poly::from_coeffs(F, std::move(c)));
}

}  // namespace

TEST_CASE("standard invariants") {
    Field F3 = FqField::prime(3);
    Place v0 = Place::origin(F3);
    {
        // y^2 + txy = x^3 - t^5
        WeierstrassEq E = eq(F3, "[t,0,0,0,-t^5]");
        StdInvariants I = invariants(E);
        CHECK(valuation(I.disc, v0) == 11);
        CHECK(*I.j == rf(F3, "t"));
        // b-identities
        CHECK(RatFunc::from_int(F3, 4) * I.b8 == I.b2 * I.b6 - I.b4 * I.b4);
        CHECK(I.c4.pow(3) - I.c6 * I.c6 == RatFunc::from_int(F3, 1728) * I.disc);
    }
    {
        Field F5 = FqField::prime(5);
        WeierstrassEq E = eq(F5, "[0,0,0,t,0]");
        StdInvariants I = invariants(E);
        CHECK(I.disc == rf(F5, "-64*t^3"));
        CHECK(valuation(I.disc, Place::origin(F5)) == 3);
        WeierstrassEq G = eq(F5, "[0,0,0,1,1]");
        CHECK(residue_at(invariants(G).disc, Place::origin(F5)) == F5->from_int(4));
    }
    CHECK_THROWS_AS((void)eq(F3, "[0,0,0,0,0]"), SingularCurveError);
    CHECK_NOTHROW((void)eq(F3, "[0,0,0,0,0]", true));
}

TEST_CASE("transform law and j-invariance") {
    std::mt19937_64 rng(11);
    for (long p : {5L, 3L, 2L}) {
        Field F = FqField::prime(p);
        for (int trial = 0; trial < 20; ++trial) {
            RatFunc a1 = random_poly_rf(F, rng, 2), a2 = random_poly_rf(F, rng, 2);
            RatFunc a3 = random_poly_rf(F, rng, 2), a4 = random_poly_rf(F, rng, 2);
            RatFunc a6 = random_poly_rf(F, rng, 2);
            WeierstrassEq E{a1, a2, a3, a4, a6};
            StdInvariants I = invariants(E);
            if (I.disc.is_zero()) continue;
            RatFunc u = rf(F, "t");
            RatFunc r = random_poly_rf(F, rng, 1), s = random_poly_rf(F, rng, 1),
                    w = random_poly_rf(F, rng, 1);
            WeierstrassEq T = transform(E, u, r, s, w);
            StdInvariants J = invariants(T);
            CHECK(J.disc == I.disc / u.pow(12));
            CHECK(J.c4 == I.c4 / u.pow(4));
            CHECK(J.c6 == I.c6 / u.pow(6));
            CHECK(*J.j == *I.j);
        }
    }
    // the worked coordinate change: u = 1/t sends y^2=x^3+t^(p(p-1))x+1 to
    // y^2=x^3+t^(p(p-1)+4)x+t^6
    Field F5 = FqField::prime(5);
    WeierstrassEq E = WeierstrassEq::short_form(rf(F5, "t").pow(20), RatFunc::one(F5));
    WeierstrassEq T = transform(E, rf(F5, "t^-1"), RatFunc::zero(F5), RatFunc::zero(F5),
                                RatFunc::zero(F5));
    CHECK(T.a4 == rf(F5, "t").pow(24));
    CHECK(T.a6 == rf(F5, "t^6"));
    // identity transform
    WeierstrassEq Id = transform(E, RatFunc::one(F5), RatFunc::zero(F5), RatFunc::zero(F5),
                                 RatFunc::zero(F5));
    CHECK(Id == E);
    // characteristic 2: u = 1/t turns y^2+xy = x^3+1/t into y^2+txy = x^3+t^5
    Field F2 = FqField::prime(2);
    WeierstrassEq C = eq(F2, "[1,0,0,0,t^-1]");
    WeierstrassEq Cs = transform(C, rf(F2, "t^-1"), RatFunc::zero(F2), RatFunc::zero(F2),
                                 RatFunc::zero(F2));
    CHECK(Cs == eq(F2, "[t,0,0,0,t^5]"));
    CHECK_THROWS_AS((void)transform(E, RatFunc::zero(F5), RatFunc::zero(F5), RatFunc::zero(F5),
                                    RatFunc::zero(F5)),
                    DomainError);
}

TEST_CASE("group law") {
    Field F2 = FqField::prime(2);
    {
        // order-2 point on y^2+xy = x^3+x over F_2(t)
        WeierstrassEq E = eq(F2, "[1,0,0,1,0]");
        CurvePoint P = CurvePoint::affine(RatFunc::zero(F2), RatFunc::zero(F2));
        CHECK(on_curve(E, P));
        CHECK(point_add(E, P, P).at_infinity);
        CHECK(point_order(E, P) == 2);
    }
    {
        // order-3 point (t,0) on y^2+txy = x^3-t^3 in characteristic 3
        Field F3 = FqField::prime(3);
        WeierstrassEq E = eq(F3, "[t,0,0,0,-t^3]");
        CurvePoint P = CurvePoint::affine(rf(F3, "t"), RatFunc::zero(F3));
        CHECK(on_curve(E, P));
        CHECK(point_order(E, P) == 3);
        // P + O = P and inversion formula
        CHECK(point_add(E, P, CurvePoint::infinity()) == P);
        CurvePoint minusP = point_neg(E, P);
        CHECK(point_add(E, P, minusP).at_infinity);
        // (0,0) on y^2+txy+ty = x^3 has order 3
        WeierstrassEq E2 = eq(F3, "[t,0,t,0,0]");
        CHECK(point_order(E2, CurvePoint::affine(RatFunc::zero(F3), RatFunc::zero(F3))) == 3);
    }
    {
        // (0,0) on y^2+txy = x^3+t^2x has order 2 in characteristic 2
        WeierstrassEq E = eq(F2, "[t,0,0,t^2,0]");
        CHECK(point_order(E, CurvePoint::affine(RatFunc::zero(F2), RatFunc::zero(F2))) == 2);
        CHECK(point_order(E, CurvePoint::infinity()) == 1);
    }
    CHECK_THROWS_AS((void)point_add(eq(F2, "[1,0,0,1,0]"),
                                    CurvePoint::affine(RatFunc::zero(F2), RatFunc::one(F2)),
                                    CurvePoint::infinity()),
                    DomainError);
}

TEST_CASE("group law associativity on small multiples") {
    Field F3 = FqField::prime(3);
    WeierstrassEq E = eq(F3, "[t,0,0,0,-t^3]");
    CurvePoint G = CurvePoint::affine(rf(F3, "t"), RatFunc::zero(F3));
    std::vector<CurvePoint> pts{CurvePoint::infinity(), G, point_add(E, G, G)};
    for (const CurvePoint& P : pts)
        for (const CurvePoint& Q : pts)
            for (const CurvePoint& R : pts)
                CHECK(point_add(E, point_add(E, P, Q), R) ==
                      point_add(E, P, point_add(E, Q, R)));
    // same in characteristic 2 on the I1* curve
    Field F2 = FqField::prime(2);
    WeierstrassEq E2 = eq(F2, "[t,0,0,t^2,0]");
    CurvePoint T2 = CurvePoint::affine(RatFunc::zero(F2), RatFunc::zero(F2));
    std::vector<CurvePoint> pts2{CurvePoint::infinity(), T2};
    for (const CurvePoint& P : pts2)
        for (const CurvePoint& Q : pts2)
            for (const CurvePoint& R : pts2)
                CHECK(point_add(E2, point_add(E2, P, Q), R) ==
                      point_add(E2, P, point_add(E2, Q, R)));
}

TEST_CASE("torsion polynomials") {
    Field F3 = FqField::prime(3);
    {
        WeierstrassEq E = eq(F3, "[t,0,0,0,-t^5]");
        TorsionPolys T = torsion_polynomials(E);
        // x^3 + t^2 x^2 - t^5
        KPoly expect = KPoly::from_coeffs(
            F3, {rf(F3, "-t^5"), RatFunc::zero(F3), rf(F3, "t^2"), RatFunc::one(F3)});
        CHECK(T.two_cubic == expect);
    }
    {
        Field F2 = FqField::prime(2);
        WeierstrassEq E = eq(F2, "[t,0,0,0,t^5]");
        TorsionPolys T = torsion_polynomials(E);
        // x^4 + t^2 x^3 + t^7
        KPoly expect = KPoly::from_coeffs(F2, {rf(F2, "t^7"), RatFunc::zero(F2),
                                               RatFunc::zero(F2), rf(F2, "t^2"),
                                               RatFunc::one(F2)});
        CHECK(T.three_quartic == expect);
        // b2 = t^2, b4 = b6 = 0, b8 = t^7: resolvent x^3 + t^11
        KPoly res = KPoly::from_coeffs(F2, {rf(F2, "t^11"), RatFunc::zero(F2), RatFunc::zero(F2),
                                            RatFunc::one(F2)});
        CHECK(T.resolvent_cubic == res);
    }
    {
        // with all b-invariants zero the quartic and resolvent collapse to
        // pure powers of x
        Field F5 = FqField::prime(5);
        WeierstrassEq E{RatFunc::zero(F5), RatFunc::zero(F5), RatFunc::zero(F5),
                        RatFunc::zero(F5), RatFunc::zero(F5)};
        TorsionPolys T = torsion_polynomials(E);
        CHECK(T.three_quartic.coeff(0).is_zero());
        CHECK(T.three_quartic.coeff(4) == RatFunc::one(F5));
        CHECK(T.resolvent_cubic.coeff(0).is_zero());
    }
}

TEST_CASE("frobenius pullback") {
    Field F5 = FqField::prime(5);
    WeierstrassEq E = WeierstrassEq::short_form(rf(F5, "t^4"), RatFunc::one(F5));
    WeierstrassEq Fr = frobenius_pullback(E);
    CHECK(Fr.a4 == rf(F5, "t^20"));
    CHECK(Fr.a6 == RatFunc::one(F5));
    // constant-coefficient curve over F_p is fixed
    WeierstrassEq C = eq(F5, "[0,0,0,1,1]");
    CHECK(frobenius_pullback(C) == C);
    // characteristic 2 tautological family
    Field F2 = FqField::prime(2);
    WeierstrassEq T = eq(F2, "[1,t^-1,0,0,t^-1]");
    WeierstrassEq TFr = frobenius_pullback(T);
    CHECK(TFr.a2 == rf(F2, "t^-2"));
    CHECK(TFr.a6 == rf(F2, "t^-2"));
    CHECK(TFr.a1 == RatFunc::one(F2));
}

TEST_CASE("frobenius commutes with quadratic twists") {
    Field F5 = FqField::prime(5);
    Place v = Place::origin(F5);
    const char* eqs[] = {"[0,0,0,1,1]", "[0,0,0,t,1]", "[0,0,0,t^2,t^3]"};
    for (const char* s : eqs) {
        WeierstrassEq E = eq(F5, s);
        RatFunc d = rf(F5, "t");
        WeierstrassEq A = frobenius_pullback(twist_quadratic(E, d));
        WeierstrassEq B = twist_quadratic(frobenius_pullback(E), d.pow(5));
        CHECK(*invariants(A).j == *invariants(B).j);
        ReductionData ra = tate_reduce(A, v), rb = tate_reduce(B, v);
        CHECK(ra.kodaira == rb.kodaira);
        CHECK(ra.nu_delta == rb.nu_delta);
        CHECK(ra.f == rb.f);
    }
}

TEST_CASE("nu(Delta) of the pullback mod 12") {
    std::mt19937_64 rng(23);
    for (long p : {5L, 7L}) {
        Field F = FqField::prime(p);
        Place v = Place::origin(F);
        for (int trial = 0; trial < 15; ++trial) {
            RatFunc a4 = random_poly_rf(F, rng, 2), a6 = random_poly_rf(F, rng, 2);
            WeierstrassEq E{RatFunc::zero(F), RatFunc::zero(F), RatFunc::zero(F), a4, a6};
            if (discriminant(E).is_zero()) continue;
            long nu = tate_reduce(E, v).nu_delta;
            long nufr = tate_reduce(frobenius_pullback(E), v).nu_delta;
            CHECK(((nufr - p * nu) % 12 + 12) % 12 == 0);
        }
    }
}

TEST_CASE("quadratic twist formulas") {
    Field F5 = FqField::prime(5);
    WeierstrassEq E = WeierstrassEq::short_form(rf(F5, "1+t"), rf(F5, "2"));
    WeierstrassEq T = twist_quadratic(E, rf(F5, "t"));
    CHECK(T.a4 == rf(F5, "t^2*(1+t)"));
    CHECK(T.a6 == rf(F5, "2*t^3"));
    Field F2 = FqField::prime(2);
    CHECK_THROWS_AS((void)twist_quadratic(eq(F2, "[1,0,0,0,t]"), rf(F2, "t")), DomainError);
    // char 3 requires short form as given
    Field F3 = FqField::prime(3);
    CHECK_THROWS_AS((void)twist_quadratic(eq(F3, "[t,0,0,0,-t^5]"), rf(F3, "t")), DomainError);
    CHECK_NOTHROW((void)twist_quadratic(eq(F3, "[0,0,0,t,1]"), rf(F3, "t")));
}

TEST_CASE("Artin-Schreier twist in characteristic 2") {
    Field F2 = FqField::prime(2);
    Place v = Place::origin(F2);
    WeierstrassEq E = eq(F2, "[1,0,0,0,t^-1]");
    WeierstrassEq T = twist_quadratic_as(E, rf(F2, "t^-1"));
    CHECK(T == eq(F2, "[1,t^-1,0,0,t^-1]"));
    // a coboundary g^2 - g leaves the reduction data unchanged
    RatFunc g = rf(F2, "1+t");
    WeierstrassEq T2 = twist_quadratic_as(E, g * g - g);
    ReductionData a = tate_reduce(E, v), b = tate_reduce(T2, v);
    CHECK(a.kodaira == b.kodaira);
    CHECK(a.nu_delta == b.nu_delta);
    CHECK(a.delta == b.delta);
    // supersingular normal form rejected
    CHECK_THROWS_AS((void)twist_quadratic_as(eq(F2, "[0,0,1,0,t]"), rf(F2, "t")), DomainError);
}

TEST_CASE("higher twists") {
    Field F5 = FqField::prime(5);
    WeierstrassEq E0 = eq(F5, "[0,0,0,0,1]");
    WeierstrassEq S = twist_higher(E0, HigherTwist::Sextic, rf(F5, "t"));
    CHECK(S.a6 == rf(F5, "t"));
    CHECK(tate_reduce(S, Place::origin(F5)).kodaira == KodairaSymbol::II());
    WeierstrassEq E1728 = eq(F5, "[0,0,0,1,0]");
    WeierstrassEq Q = twist_higher(E1728, HigherTwist::Quartic, rf(F5, "t"));
    CHECK(Q.a4 == rf(F5, "t"));
    CHECK(tate_reduce(Q, Place::origin(F5)).kodaira == KodairaSymbol::III());
    CHECK_THROWS_AS((void)twist_higher(E0, HigherTwist::Quartic, rf(F5, "t")), DomainError);
    CHECK_THROWS_AS((void)twist_higher(E1728, HigherTwist::Sextic, rf(F5, "t")), DomainError);
}

TEST_CASE("base change") {
    Field F3 = FqField::prime(3);
    Place v = Place::origin(F3);
    WeierstrassEq E = eq(F3, "[t,0,0,0,-t^5]");
    // identity substitution
    CHECK(base_change(E, rf(F3, "t")) == E);
    // t = s^2 lands on the (10, 2, IV*) row
    ReductionData rd = tate_reduce(base_change(E, rf(F3, "t^2")), v);
    CHECK(rd.kodaira == KodairaSymbol::IVstar());
    CHECK(rd.nu_delta == 10);
    CHECK(rd.delta == 2);
    // characteristic 2: t = s^3 lands on I0* with nu = 9, delta = 3
    Field F2 = FqField::prime(2);
    ReductionData rd2 = tate_reduce(base_change(eq(F2, "[t,0,0,0,t^5]"), rf(F2, "t^3")),
                                    Place::origin(F2));
    CHECK(rd2.kodaira == KodairaSymbol::Istar(0));
    CHECK(rd2.nu_delta == 9);
    CHECK(rd2.delta == 3);
    CHECK_THROWS_AS((void)base_change(E, rf(F3, "2")), DomainError);
}

TEST_CASE("two-torsion point in characteristic 2") {
    Field F2 = FqField::prime(2);
    WeierstrassEq E = eq(F2, "[t,0,0,t^2,0]");
    auto P = two_torsion_point_char2(E);
    REQUIRE(P.has_value());
    CHECK(P->x.is_zero());
    CHECK(point_order(E, *P) == 2);
    // y-coordinate requires a square right-hand side
    WeierstrassEq E2 = eq(F2, "[1,0,0,0,t]");
    CHECK(!two_torsion_point_char2(E2).has_value());
}

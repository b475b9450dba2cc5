#include <doctest.h>

#include "neron/localred.hpp"
#include "neron/parse.hpp"
#include "neron/torsion.hpp"

using namespace neron;

namespace {

RatFunc rf(const Field& F, const std::string& s) {
    return parse_ratfunc(s, F);
}

WeierstrassEq eq(const Field& F, const std::string& s) {
    EqLiteral lit = parse_equation(s, F);
    return WeierstrassEq::make(lit.a1, lit.a2, lit.a3, lit.a4, lit.a6);
}

}  // namespace

TEST_CASE("hasse invariant examples") {
    Field F5 = FqField::prime(5);
    Place v = Place::origin(F5);
    // y^2 = x^3 + 1 is supersingular at p = 5
    CHECK(hasse_invariant(eq(F5, "[0,0,0,0,1]"), v).h.is_zero());
    // the family y^2 = x^3 + tx + 1 has h = 2t, vanishing order 1
    HasseData hd = hasse_invariant(eq(F5, "[0,0,0,t,1]"), v);
    CHECK(hd.h == rf(F5, "2*t"));
    CHECK(hd.vanishing_order == 1);
    // and t^(p-1)x gives vanishing order p-1
    CHECK(hasse_invariant(eq(F5, "[0,0,0,t^4,1]"), v).vanishing_order == 4);
}

TEST_CASE("hasse invariant of the Frobenius pullback") {
    Field F5 = FqField::prime(5);
    Place v = Place::origin(F5);
    const char* families[] = {"[0,0,0,t,1]", "[0,0,0,t^4,1]", "[0,0,0,1,2+t]"};
    for (const char* s : families) {
        WeierstrassEq E = eq(F5, s);
        long h0 = hasse_invariant(E, v).vanishing_order;
        long h1 = hasse_invariant(frobenius_pullback(E), v).vanishing_order;
        CHECK(h1 == 5 * h0);
    }
}

TEST_CASE("supersingular j congruences") {
    // j = 0 is supersingular iff p = -1 mod 3
    for (long p : {5L, 11L, 17L}) {
        Field F = FqField::prime(p);
        CHECK(is_supersingular_j(F->zero()) == (p % 3 == 2));
    }
    CHECK(!is_supersingular_j(FqField::prime(13)->zero()));
    // j = 1728 is supersingular iff p = -1 mod 4
    for (long p : {7L, 11L, 19L}) {
        Field F = FqField::prime(p);
        CHECK(is_supersingular_j(F->from_int(1728)) == (p % 4 == 3));
    }
    CHECK(!is_supersingular_j(FqField::prime(13)->from_int(1728)));
    // p = 13: the supersingular value is j = 5
    Field F13 = FqField::prime(13);
    CHECK(is_supersingular_j(F13->from_int(5)));
    CHECK(!is_supersingular_j(F13->from_int(1)));
    // characteristics 2 and 3: j = 0 only
    CHECK(is_supersingular_j(FqField::prime(2)->zero()));
    CHECK(!is_supersingular_j(FqField::prime(3)->one()));
}

TEST_CASE("special form in characteristic 3") {
    Field F = FqField::prime(3);
    Place v = Place::origin(F);
    {
        auto rep = special_form_3(eq(F, "[t,0,t^2,0,0]"), v);
        REQUIRE(rep.has_value());
        CHECK(rep->order == 3);
        CHECK(rep->nonzero_in_fiber);
        CHECK(rep->nonzero_in_phi);
    }
    {
        auto rep = special_form_3(eq(F, "[t,0,1+t,0,0]"), v);
        REQUIRE(rep.has_value());
        CHECK(!rep->nonzero_in_phi);
    }
    CHECK(!special_form_3(eq(F, "[0,0,0,1,1]"), v).has_value());
    // non-minimal input is an error
    CHECK_THROWS_AS((void)special_form_3(eq(F, "[t^4,0,t^8,0,0]"), v), DomainError);
    CHECK_THROWS_AS((void)special_form_3(eq(FqField::prime(2), "[t,0,0,t^2,0]"), v), DomainError);
}

TEST_CASE("special form in characteristic 2") {
    Field F = FqField::prime(2);
    Place v = Place::origin(F);
    {
        auto rep = special_form_2(eq(F, "[t,0,0,t^2,0]"), v);
        REQUIRE(rep.has_value());
        CHECK(rep->order == 2);
        CHECK(rep->nonzero_in_fiber);
        CHECK(rep->nonzero_in_phi);
    }
    {
        auto rep = special_form_2(eq(F, "[t,0,0,1+t,0]"), v);
        REQUIRE(rep.has_value());
        CHECK(!rep->nonzero_in_phi);
    }
    CHECK(!special_form_2(eq(F, "[0,0,1,1,0]"), v).has_value());
}

TEST_CASE("special form agrees with the singularity test") {
    // nonzero_in_phi iff the point specializes into the singular point of
    // the Weierstrass model
    Field F3 = FqField::prime(3);
    Place v = Place::origin(F3);
    const char* rows3[] = {"[t,0,t^2,0,0]", "[t,0,t,0,0]", "[t,0,1+t,0,0]", "[t^2,0,1+t^2,0,0]"};
    for (const char* s : rows3) {
        WeierstrassEq E = eq(F3, s);
        auto rep = special_form_3(E, v);
        REQUIRE(rep.has_value());
        CHECK(rep->nonzero_in_phi == specializes_to_singularity(E, rep->point, v));
        CHECK(rep->nonzero_in_phi == phi_class_nonzero(E, rep->point, v));
    }
    Field F2 = FqField::prime(2);
    const char* rows2[] = {"[t,0,0,t^2,0]", "[t,0,0,t^3,0]", "[t,0,0,1+t,0]",
                           "[t^2,0,0,1+t^2,0]"};
    for (const char* s : rows2) {
        WeierstrassEq E = eq(F2, s);
        auto rep = special_form_2(E, Place::origin(F2));
        REQUIRE(rep.has_value());
        CHECK(rep->nonzero_in_phi ==
              specializes_to_singularity(E, rep->point, Place::origin(F2)));
    }
}

TEST_CASE("osculation numbers") {
    Field F5 = FqField::prime(5);
    Place v = Place::origin(F5);
    // P = (t^-2n, t^-3n) lies on y^2 + t^3n xy = x^3 + x, which has good
    // reduction at t = 0
    for (int n = 1; n <= 3; ++n) {
        WeierstrassEq E{rf(F5, "t").pow(3 * n), RatFunc::zero(F5), RatFunc::zero(F5),
                        RatFunc::one(F5), RatFunc::zero(F5)};
        CurvePoint P = CurvePoint::affine(rf(F5, "t").pow(-2 * n), rf(F5, "t").pow(-3 * n));
        REQUIRE(on_curve(E, P));
        CHECK(osculation_number(E, P, v) == n);
    }
    // a point with nu(x) >= 0 is rejected
    WeierstrassEq G = eq(F5, "[0,0,0,0,t]");
    CHECK_THROWS_AS((void)osculation_number(G, CurvePoint::affine(RatFunc::zero(F5),
                                                                  RatFunc::zero(F5)),
                                            v),
                    DomainError);
}

TEST_CASE("specialization helpers") {
    Field F2 = FqField::prime(2);
    Place v = Place::origin(F2);
    CurvePoint pole = CurvePoint::affine(rf(F2, "t^-2"), rf(F2, "t^-3"));
    CHECK(specializes_to_zero_section(pole, v));
    CHECK(specializes_to_zero_section(CurvePoint::infinity(), v));
    CurvePoint origin = CurvePoint::affine(RatFunc::zero(F2), RatFunc::zero(F2));
    CHECK(!specializes_to_zero_section(origin, v));
    // the 2-torsion of the tautological pullback lands in the singular point
    WeierstrassEq E = eq(F2, "[1,0,0,0,t^-2]");
    auto P = two_torsion_point_char2(E);
    REQUIRE(P.has_value());
    CHECK(phi_class_nonzero(E, *P, v));
}

TEST_CASE("j in K^p flag") {
    Field F3 = FqField::prime(3);
    // j = t is not a cube in F_3(t); the Frobenius pullback has j = t^3
    WeierstrassEq U = eq(F3, "[1,0,0,0,-1/t]");
    CHECK(!j_is_pth_power(U));
    CHECK(j_is_pth_power(frobenius_pullback(U)));
}

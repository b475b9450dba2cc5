#include <doctest.h>

#include <random>

#include "neron/localred.hpp"
#include "neron/parse.hpp"
#include "neron/ramify.hpp"

using namespace neron;

namespace {

RatFunc rf(const Field& F, const std::string& s) {
    return parse_ratfunc(s, F);
}

WeierstrassEq eq(const Field& F, const std::string& s) {
    EqLiteral lit = parse_equation(s, F);
    return WeierstrassEq::make(lit.a1, lit.a2, lit.a3, lit.a4, lit.a6);
}

// monomial t^e scaled by a unit chosen from {1, 1+t}
RatFunc tpow_unit(const Field& F, std::mt19937_64& rng, long e) {
    RatFunc m = rf(F, "t").pow(e);
    return rng() % 2 == 0 ? m : m * rf(F, "1+t");
}

}  // namespace

TEST_CASE("Kodaira symbol bookkeeping") {
    CHECK(KodairaSymbol::I(0).components() == 1);
    CHECK(KodairaSymbol::I(7).components() == 7);
    CHECK(KodairaSymbol::Istar(3).components() == 8);
    CHECK(KodairaSymbol::IIstar().components() == 9);
    CHECK(KodairaSymbol::parse("I3*") == KodairaSymbol::Istar(3));
    CHECK(KodairaSymbol::parse("IV*") == KodairaSymbol::IVstar());
    CHECK(KodairaSymbol::parse("I12") == KodairaSymbol::I(12));
    CHECK(KodairaSymbol::Istar(2).phi_structure() == "Z/2 x Z/2");
    CHECK(KodairaSymbol::Istar(3).phi_structure() == "Z/4");
}

TEST_CASE("tate_reduce on the named examples") {
    {
        Field F3 = FqField::prime(3);
        ReductionData rd = tate_reduce(eq(F3, "[t,0,0,0,-t^5]"), Place::origin(F3));
        CHECK(rd.kodaira == KodairaSymbol::IIstar());
        CHECK(rd.nu_delta == 11);
        CHECK(rd.m == 9);
        CHECK(rd.delta == 1);
        CHECK(rd.phi_order == 1);
        CHECK(rd.restarts == 0);
        CHECK(ogg_consistency(rd));
    }
    {
        Field F5 = FqField::prime(5);
        ReductionData rd = tate_reduce(eq(F5, "[0,0,0,t^2,t^2]"), Place::origin(F5));
        CHECK(rd.kodaira == KodairaSymbol::IV());
        CHECK(rd.nu_delta == 4);
    }
    {
        // nu(Delta) = 2^n + 4 with type IV at n = 1
        Field F3 = FqField::prime(3);
        ReductionData rd = tate_reduce(eq(F3, "[t^2,0,t^4,0,0]"), Place::origin(F3));
        CHECK(rd.kodaira == KodairaSymbol::IV());
        CHECK(rd.nu_delta == 6);
        CHECK(rd.delta == 2);
    }
    {
        // singular input is rejected
        Field F5 = FqField::prime(5);
        WeierstrassEq S{RatFunc::zero(F5), RatFunc::zero(F5), RatFunc::zero(F5),
                        RatFunc::zero(F5), RatFunc::zero(F5)};
        CHECK_THROWS_AS((void)tate_reduce(S, Place::origin(F5)), SingularCurveError);
    }
}

TEST_CASE("minimal equation and transform bookkeeping") {
    Field F5 = FqField::prime(5);
    Place v = Place::origin(F5);
    WeierstrassEq E = eq(F5, "[0,0,0,t^4,t^6]");
    ReductionData rd = tate_reduce(E, v);
    CHECK(rd.kodaira == KodairaSymbol::I(0));
    CHECK(rd.restarts == 1);
    // minimal_eq really is the recorded transform of E
    WeierstrassEq M = transform(E, rd.tr_u, rd.tr_r, rd.tr_s, rd.tr_w);
    CHECK(M == rd.minimal_eq);
    CHECK(valuation(discriminant(rd.minimal_eq), v) == 0);

    CHECK(!is_minimal(E, v));
    CHECK(is_minimal(eq(F5, "[0,0,0,1,1]"), v));
    Field F3 = FqField::prime(3);
    CHECK(is_minimal(eq(F3, "[t,0,0,0,-t^5]"), Place::origin(F3)));
    // non-integral input is not minimal
    CHECK(!is_minimal(eq(F3, "[1,0,0,0,-1/t]"), Place::origin(F3)));
}

TEST_CASE("places t = c and t = infinity") {
    Field F5 = FqField::prime(5);
    // II at t = 2 via translation
    WeierstrassEq E = WeierstrassEq::short_form(RatFunc::zero(F5), rf(F5, "t-2"));
    ReductionData rd = tate_reduce(E, Place::at(F5->from_int(2)));
    CHECK(rd.kodaira == KodairaSymbol::II());
    CHECK(rd.nu_delta == 2);
    // good reduction elsewhere
    CHECK(tate_reduce(E, Place::at(F5->from_int(1))).kodaira == KodairaSymbol::I(0));
    // the place at infinity is handled through s = 1/t
    ReductionData ri = tate_reduce(E, Place::infinity(F5));
    CHECK(ogg_consistency(ri));
    CHECK(valuation(ri.minimal_eq.a6, Place::infinity(F5)) >= 0);
    // a place centered at an extension-field element
    Field F9 = FqField::extension(3, 2);
    WeierstrassEq Eg{RatFunc::zero(F9), RatFunc::zero(F9), RatFunc::zero(F9),
                     RatFunc::t(F9) - RatFunc::constant(F9->gen()), RatFunc::zero(F9)};
    ReductionData rg = tate_reduce(Eg, Place::at(F9->gen()));
    CHECK(rg.kodaira == KodairaSymbol::III());
    CHECK(rg.nu_delta == 3);
}

TEST_CASE("potential reduction trichotomy") {
    Field F5 = FqField::prime(5);
    Place v = Place::origin(F5);
    // nu(j) < 0: potentially multiplicative
    CHECK(potential_reduction(eq(F5, "[0,0,0,-3,2+t]"), v) ==
          PotentialReduction::Multiplicative);
    // j residue 0 at p = 5: supersingular
    CHECK(potential_reduction(eq(F5, "[0,0,0,0,t^2]"), v) ==
          PotentialReduction::Supersingular);
    // j residue 1728 at p = 5 (5 = 1 mod 4): ordinary
    CHECK(potential_reduction(eq(F5, "[0,0,0,t,0]"), v) == PotentialReduction::Ordinary);
    Field F7 = FqField::prime(7);
    // j residue 1728 at p = 7 (7 = 3 mod 4): supersingular
    CHECK(potential_reduction(eq(F7, "[0,0,0,t,0]"), Place::origin(F7)) ==
          PotentialReduction::Supersingular);
}

TEST_CASE("ogg_consistency as an oracle") {
    ReductionData good;
    good.kodaira = KodairaSymbol::IIstar();
    good.nu_delta = 11;
    good.m = 9;
    good.epsilon = 2;
    good.delta = 1;
    good.f = 3;
    good.phi_order = 1;
    CHECK(ogg_consistency(good));
    ReductionData bad = good;
    bad.delta = 2;
    CHECK(!ogg_consistency(bad));
    ReductionData triv;
    triv.kodaira = KodairaSymbol::I(0);
    CHECK(ogg_consistency(triv));
    // III with nu = 6, delta = 3: 6 = 2 + 3 + (2-1)
    ReductionData third;
    third.kodaira = KodairaSymbol::III();
    third.nu_delta = 6;
    third.m = 2;
    third.epsilon = 2;
    third.delta = 3;
    third.f = 5;
    third.phi_order = 2;
    CHECK(ogg_consistency(third));
}

TEST_CASE("every tate_reduce output passes ogg_consistency") {
    std::mt19937_64 rng(31);
    for (long p : {2L, 3L, 5L}) {
        Field F = FqField::prime(p);
        Place places[2] = {Place::origin(F), Place::infinity(F)};
        int done = 0;
        while (done < 40) {
            auto rand_rf = [&](int maxdeg) {
                std::vector<Fq> c;
                int d = static_cast<int>(rng() % (maxdeg + 1));
                for (int i = 0; i <= d; ++i)
                    c.push_back(F->element(static_cast<long>(rng() % F->size())));
                return RatFunc::of(Poly::from_coeffs(F, std::move(c)));
            };
            WeierstrassEq E{rand_rf(2), rand_rf(2), rand_rf(2), rand_rf(3), rand_rf(3)};
            if (discriminant(E).is_zero()) continue;
            ++done;
            for (const Place& v : places) {
                ReductionData rd = tate_reduce(E, v);
                CHECK(ogg_consistency(rd));
                CHECK(is_minimal(rd.minimal_eq, v));
            }
        }
    }
}

TEST_CASE("wild I* classification, a3-governed family") {
    // characteristic 2: nu(a1)>=1, nu(a2)=1, n=nu(a3)>=2, nu(a4)>=n+1,
    // nu(a6)>=2n forces a minimal equation of type I*(2n-3)
    Field F = FqField::prime(2);
    Place v = Place::origin(F);
    std::mt19937_64 rng(57);
    int done = 0;
    while (done < 50) {
        int n = 2 + static_cast<int>(rng() % 4);
        RatFunc a1 = tpow_unit(F, rng, 1 + static_cast<long>(rng() % 3));
        RatFunc a2 = tpow_unit(F, rng, 1);
        RatFunc a3 = tpow_unit(F, rng, n);
        RatFunc a4 = rng() % 3 == 0 ? RatFunc::zero(F)
                                    : tpow_unit(F, rng, n + 1 + static_cast<long>(rng() % 2));
        RatFunc a6 = rng() % 3 == 0 ? RatFunc::zero(F)
                                    : tpow_unit(F, rng, 2 * n + static_cast<long>(rng() % 2));
        WeierstrassEq E{a1, a2, a3, a4, a6};
        if (discriminant(E).is_zero()) continue;
        ++done;
        ReductionData rd = tate_reduce(E, v);
        CHECK(rd.kodaira == KodairaSymbol::Istar(2 * n - 3));
        CHECK(rd.restarts == 0);
    }
}

TEST_CASE("wild I* classification, a4-governed family") {
    // characteristic 2: nu(a1)>=1, nu(a2)=1, nu(a3)>=n, n=nu(a4)>=2,
    // nu(a6)>=2n forces a minimal equation of type I*(2n-4)
    Field F = FqField::prime(2);
    Place v = Place::origin(F);
    std::mt19937_64 rng(91);
    int done = 0;
    while (done < 50) {
        int n = 2 + static_cast<int>(rng() % 4);
        RatFunc a1 = tpow_unit(F, rng, 1 + static_cast<long>(rng() % 3));
        RatFunc a2 = tpow_unit(F, rng, 1);
        RatFunc a3 = rng() % 3 == 0 ? RatFunc::zero(F)
                                    : tpow_unit(F, rng, n + static_cast<long>(rng() % 2));
        RatFunc a4 = tpow_unit(F, rng, n);
        RatFunc a6 = rng() % 3 == 0 ? RatFunc::zero(F)
                                    : tpow_unit(F, rng, 2 * n + static_cast<long>(rng() % 2));
        WeierstrassEq E{a1, a2, a3, a4, a6};
        if (discriminant(E).is_zero()) continue;
        ++done;
        ReductionData rd = tate_reduce(E, v);
        CHECK(rd.kodaira == KodairaSymbol::Istar(2 * n - 4));
        CHECK(rd.restarts == 0);
    }
}

TEST_CASE("minimal short equations with nu(Delta) >= 6 have high coefficient valuations") {
    std::mt19937_64 rng(73);
    for (long p : {5L, 7L}) {
        Field F = FqField::prime(p);
        Place v = Place::origin(F);
        int done = 0;
        while (done < 50) {
            long va4 = static_cast<long>(rng() % 4);
            long va6 = static_cast<long>(rng() % 5);
            RatFunc a4 = rng() % 4 == 0 ? RatFunc::zero(F) : tpow_unit(F, rng, va4);
            RatFunc a6 = a4.is_zero() || rng() % 4 != 0 ? tpow_unit(F, rng, va6)
                                                        : RatFunc::zero(F);
            WeierstrassEq E{RatFunc::zero(F), RatFunc::zero(F), RatFunc::zero(F), a4, a6};
            if (discriminant(E).is_zero()) continue;
            ++done;
            ReductionData rd = tate_reduce(E, v);
            if (rd.restarts == 0 && rd.nu_delta >= 6) {
                CHECK(valuation(E.a4, v) >= 2);
                CHECK(valuation(E.a6, v) >= 3);
            }
        }
    }
}

TEST_CASE("I* stability under Frobenius in characteristic 3") {
    Field F = FqField::prime(3);
    Place v = Place::origin(F);
    // m = 0: quadratic twist of a good-reduction curve
    WeierstrassEq E0 = eq(F, "[0,0,0,t^2,t^4]");
    REQUIRE(tate_reduce(E0, v).kodaira == KodairaSymbol::Istar(0));
    CHECK(tate_reduce(frobenius_pullback(E0), v).kodaira == KodairaSymbol::Istar(0));
    // m = 1: the t-twist of the nodal curve y^2 = x^3 + x^2 + t
    WeierstrassEq E1 = eq(F, "[0,t,0,0,t^4]");
    REQUIRE(tate_reduce(E1, v).kodaira == KodairaSymbol::Istar(1));
    CHECK(tate_reduce(frobenius_pullback(E1), v).kodaira == KodairaSymbol::Istar(3));
}

namespace {

// independent classifier for short equations in characteristic >= 5: scale
// to the minimal model by valuations of c4 and Delta alone, then read the
// type off (nu(Delta), nu(j)).  No Tate stepping involved.
KodairaSymbol classify_short_p5(const WeierstrassEq& E, const Place& v, long* nu_out) {
    StdInvariants I = invariants(E);
    long nd = valuation(I.disc, v);
    long nc4 = valuation(I.c4, v);
    // minimal rescaling: largest k with nu(c4) >= 4k and nu(Delta) >= 12k
    long k = nd / 12;
    if (nc4 != kValInf) k = std::min(k, nc4 / 4);
    nd -= 12 * k;
    nc4 = nc4 == kValInf ? kValInf : nc4 - 4 * k;
    *nu_out = nd;
    if (nd == 0) return KodairaSymbol::I(0);
    long nj = nc4 == kValInf ? kValInf : 3 * nc4 - nd;
    if (nj < 0) {
        if (nc4 == 0) return KodairaSymbol::I(static_cast<int>(-nj));
        return KodairaSymbol::Istar(static_cast<int>(-nj));
    }
    switch (nd) {
        case 2: return KodairaSymbol::II();
        case 3: return KodairaSymbol::III();
        case 4: return KodairaSymbol::IV();
        case 6: return KodairaSymbol::Istar(0);
        case 8: return KodairaSymbol::IVstar();
        case 9: return KodairaSymbol::IIIstar();
        case 10: return KodairaSymbol::IIstar();
        default: throw Error("unclassifiable short equation");
    }
}

}  // namespace

TEST_CASE("tate agrees with the short-equation classifier for p >= 5") {
    std::mt19937_64 rng(137);
    for (long p : {5L, 7L, 13L}) {
        Field F = FqField::prime(p);
        Place v = Place::origin(F);
        int done = 0;
        while (done < 120) {
            auto rand_rf = [&](int maxdeg) {
                std::vector<Fq> c;
                int d = static_cast<int>(rng() % (maxdeg + 1));
                for (int i = 0; i <= d; ++i)
                    c.push_back(F->element(static_cast<long>(rng() % F->size())));
                Poly num = Poly::from_coeffs(F, std::move(c));
                // random extra factor of t to hit higher valuations
                return RatFunc::of(num) * RatFunc::t(F).pow(static_cast<long>(rng() % 4));
            };
            WeierstrassEq E{RatFunc::zero(F), RatFunc::zero(F), RatFunc::zero(F), rand_rf(2),
                            rand_rf(2)};
            if (discriminant(E).is_zero()) continue;
            ++done;
            long nu_expect = 0;
            KodairaSymbol want = classify_short_p5(E, v, &nu_expect);
            ReductionData rd = tate_reduce(E, v);
            CHECK(rd.kodaira == want);
            CHECK(rd.nu_delta == nu_expect);
            CHECK(rd.delta == 0);
        }
    }
}

TEST_CASE("tame base change scales the wild conductor part") {
    // delta multiplies by the degree when it is prime to p; checked against
    // the reduction data of honest pullbacks
    {
        Field F = FqField::prime(3);
        Place v = Place::origin(F);
        WeierstrassEq root = eq(F, "[t,0,0,0,-t^5]");
        long d0 = tate_reduce(root, v).delta;
        for (long d : {2L, 4L, 5L}) {
            WeierstrassEq B = base_change(root, rf(F, "t").pow(d));
            CHECK(tate_reduce(B, v).delta == scale_delta(d0, d, 3, false));
        }
    }
    {
        Field F = FqField::prime(2);
        Place v = Place::origin(F);
        WeierstrassEq root = eq(F, "[t,0,0,0,t^5]");
        long d0 = tate_reduce(root, v).delta;
        for (long d : {3L, 5L}) {
            WeierstrassEq B = base_change(root, rf(F, "t").pow(d));
            CHECK(tate_reduce(B, v).delta == scale_delta(d0, d, 2, false));
        }
    }
}

TEST_CASE("base-change discriminant arithmetic nu = e nu' - 12c") {
    Field F = FqField::prime(3);
    Place v = Place::origin(F);
    WeierstrassEq root = eq(F, "[t,0,0,0,-t^5]");
    long nu_root = tate_reduce(root, v).nu_delta;
    struct Sub {
        const char* g;
        long e;
    };
    for (const Sub& sub : {Sub{"t^2", 2}, Sub{"t^5", 5}, Sub{"t^3/(1+t)", 3}}) {
        WeierstrassEq B = base_change(root, rf(F, sub.g));
        ReductionData rd = tate_reduce(B, v);
        CHECK(sub.e * nu_root - 12 * rd.restarts == rd.nu_delta);
    }
}

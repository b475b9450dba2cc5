#include "neron/torsion.hpp"

#include "neron/localred.hpp"

namespace neron {

HasseData hasse_invariant(const WeierstrassEq& E, const Place& v) {
    const Field& F = E.field();
    long p = F->p();
    if (p == 2) {
        if (E.a1.is_zero()) return {RatFunc::zero(F), kValInf};
        RatFunc h = tate_reduce(E, v).minimal_eq.a1;
        return {h, valuation(h, v)};
    }
    // complete the square: y -> y - (a1 x + a3)/2 gives y^2 = f(x)
    RatFunc half = RatFunc::from_int(F, 2).inverse();
    WeierstrassEq S = transform(E, RatFunc::one(F), RatFunc::zero(F), -E.a1 * half,
                                -E.a3 * half);
    KPoly f = KPoly::from_coeffs(F, {S.a6, S.a4, S.a2, RatFunc::one(F)});
    RatFunc h = f.pow((p - 1) / 2).coeff(static_cast<int>(p) - 1);
    return {h, h.is_zero() ? kValInf : valuation(h, v)};
}

bool is_supersingular_j(const Fq& j0) {
    const Field& F = j0.field();
    long p = F->p();
    // j = 0 is the only supersingular value in characteristics 2 and 3
    if (p == 2 || p == 3) return j0.is_zero();
    Fq a4, a6;
    if (j0.is_zero()) {
        a4 = F->zero();
        a6 = F->one();
    } else if (j0 == F->from_int(1728)) {
        a4 = F->one();
        a6 = F->zero();
    } else {
        Fq c = j0 / (F->from_int(1728) - j0);
        a4 = F->from_int(3) * c;
        a6 = F->from_int(2) * c;
    }
    Poly f = Poly::from_coeffs(F, {a6, a4, F->zero(), F->one()});
    return f.pow((p - 1) / 2).coeff(static_cast<int>(p) - 1).is_zero();
}

namespace {

SpecializationReport make_report(const WeierstrassEq& E, const Place& v, const RatFunc& criterion,
                                 int order) {
    SpecializationReport rep;
    rep.point = CurvePoint::affine(RatFunc::zero(E.field()), RatFunc::zero(E.field()));
    rep.order = point_order(E, rep.point, order);
    rep.nonzero_in_fiber = true;  // (0,0) is affine and integral
    rep.nonzero_in_phi = valuation(criterion, v) > 0;
    return rep;
}

}  // namespace

std::optional<SpecializationReport> special_form_3(const WeierstrassEq& E, const Place& v) {
    if (E.p() != 3) throw DomainError("special_form_3 requires characteristic 3");
    if (!is_minimal(E, v)) throw DomainError("equation is not minimal at the place");
    if (!E.a2.is_zero() || !E.a4.is_zero() || !E.a6.is_zero()) return std::nullopt;
    if (E.a1.is_zero() || E.a3.is_zero()) return std::nullopt;
    return make_report(E, v, E.a3, 3);
}

std::optional<SpecializationReport> special_form_2(const WeierstrassEq& E, const Place& v) {
    if (E.p() != 2) throw DomainError("special_form_2 requires characteristic 2");
    if (!is_minimal(E, v)) throw DomainError("equation is not minimal at the place");
    if (!E.a3.is_zero() || !E.a6.is_zero()) return std::nullopt;
    if (E.a1.is_zero() || E.a4.is_zero()) return std::nullopt;
    return make_report(E, v, E.a4, 2);
}

long osculation_number(const WeierstrassEq& E, const CurvePoint& P, const Place& v) {
    if (P.at_infinity) throw DomainError("osculation number of the zero section");
    if (!on_curve(E, P)) throw DomainError("point not on the curve");
    if (!is_minimal(E, v)) throw DomainError("equation is not minimal at the place");
    long vx = valuation(P.x, v);
    if (vx >= 0) throw DomainError("point does not specialize to the zero section");
    if (vx % 2 != 0) throw DomainError("inconsistent valuations: nu(x) must be even");
    long m = -vx / 2;
    if (valuation(P.y, v) != -3 * m)
        throw DomainError("inconsistent valuations: nu(y) != -3 nu(x)/2");
    return m;
}

bool specializes_to_zero_section(const CurvePoint& P, const Place& v) {
    if (P.at_infinity) return true;
    return valuation(P.x, v) < 0 || valuation(P.y, v) < 0;
}

bool specializes_to_singularity(const WeierstrassEq& E_minimal, const CurvePoint& P,
                                const Place& v) {
    if (specializes_to_zero_section(P, v)) return false;
    auto sing = reduction_singular_point(E_minimal, v);
    if (!sing) return false;
    Fq px = residue_at(P.x, v);
    Fq py = residue_at(P.y, v);
    return px == sing->first && py == sing->second;
}

bool phi_class_nonzero(const WeierstrassEq& E, const CurvePoint& P, const Place& v) {
    if (!on_curve(E, P)) throw DomainError("point not on the curve");
    if (P.at_infinity) return false;
    ReductionData rd = tate_reduce(E, v);
    if (rd.kodaira.good()) return false;
    CurvePoint Q = transform_point(P, rd.tr_u, rd.tr_r, rd.tr_s, rd.tr_w);
    return specializes_to_singularity(rd.minimal_eq, Q, v);
}

bool j_is_pth_power(const WeierstrassEq& E) {
    StdInvariants I = invariants(E);
    if (!I.j) throw SingularCurveError("j-invariant undefined");
    return is_pth_power(*I.j);
}

}  // namespace neron

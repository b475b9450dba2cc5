#include "neron/weierstrass.hpp"

#include <sstream>

namespace neron {

WeierstrassEq WeierstrassEq::make(RatFunc a1, RatFunc a2, RatFunc a3, RatFunc a4, RatFunc a6,
                                  bool allow_singular) {
    WeierstrassEq E{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)};
    if (!allow_singular && discriminant(E).is_zero())
        throw SingularCurveError("Weierstrass equation has vanishing discriminant");
    return E;
}

WeierstrassEq WeierstrassEq::short_form(const RatFunc& a4, const RatFunc& a6,
                                        bool allow_singular) {
    const Field& F = a4.field();
    RatFunc z = RatFunc::zero(F);
    return make(z, z, z, a4, a6, allow_singular);
}

bool WeierstrassEq::operator==(const WeierstrassEq& o) const {
    return a1 == o.a1 && a2 == o.a2 && a3 == o.a3 && a4 == o.a4 && a6 == o.a6;
}

std::string WeierstrassEq::str(const std::string& var) const {
    std::ostringstream os;
    os << "[" << a1.str(var) << "," << a2.str(var) << "," << a3.str(var) << "," << a4.str(var)
       << "," << a6.str(var) << "]";
    return os.str();
}

StdInvariants invariants(const WeierstrassEq& E) {
    const Field& F = E.field();
    auto C = [&](long v) { return RatFunc::from_int(F, v); };
    StdInvariants I;
    I.b2 = E.a1 * E.a1 + C(4) * E.a2;
    I.b4 = C(2) * E.a4 + E.a1 * E.a3;
    I.b6 = E.a3 * E.a3 + C(4) * E.a6;
    I.b8 = E.a1 * E.a1 * E.a6 + C(4) * E.a2 * E.a6 - E.a1 * E.a3 * E.a4 + E.a2 * E.a3 * E.a3 -
           E.a4 * E.a4;
    I.c4 = I.b2 * I.b2 - C(24) * I.b4;
    I.c6 = -(I.b2 * I.b2 * I.b2) + C(36) * I.b2 * I.b4 - C(216) * I.b6;
    I.disc = -(I.b2 * I.b2 * I.b8) - C(8) * I.b4 * I.b4 * I.b4 - C(27) * I.b6 * I.b6 +
             C(9) * I.b2 * I.b4 * I.b6;
    if (!I.disc.is_zero()) I.j = I.c4 * I.c4 * I.c4 / I.disc;
    return I;
}

RatFunc discriminant(const WeierstrassEq& E) {
    return invariants(E).disc;
}

WeierstrassEq transform(const WeierstrassEq& E, const RatFunc& u, const RatFunc& r,
                        const RatFunc& s, const RatFunc& w) {
    if (u.is_zero()) throw DomainError("coordinate change with u = 0");
    const Field& F = E.field();
    auto C = [&](long v) { return RatFunc::from_int(F, v); };
    RatFunc a1 = (E.a1 + C(2) * s) / u;
    RatFunc a2 = (E.a2 - s * E.a1 + C(3) * r - s * s) / (u * u);
    RatFunc a3 = (E.a3 + r * E.a1 + C(2) * w) / u.pow(3);
    RatFunc a4 =
        (E.a4 - s * E.a3 + C(2) * r * E.a2 - (w + r * s) * E.a1 + C(3) * r * r - C(2) * s * w) /
        u.pow(4);
    RatFunc a6 = (E.a6 + r * E.a4 + r * r * E.a2 + r.pow(3) - w * E.a3 - w * w - r * w * E.a1) /
                 u.pow(6);
    return WeierstrassEq{a1, a2, a3, a4, a6};
}

bool CurvePoint::operator==(const CurvePoint& o) const {
    if (at_infinity || o.at_infinity) return at_infinity == o.at_infinity;
    return x == o.x && y == o.y;
}

std::string CurvePoint::str() const {
    if (at_infinity) return "O";
    return "(" + x.str() + "," + y.str() + ")";
}

bool on_curve(const WeierstrassEq& E, const CurvePoint& P) {
    if (P.at_infinity) return true;
    RatFunc lhs = P.y * P.y + E.a1 * P.x * P.y + E.a3 * P.y;
    RatFunc rhs = P.x.pow(3) + E.a2 * P.x * P.x + E.a4 * P.x + E.a6;
    return lhs == rhs;
}

CurvePoint point_neg(const WeierstrassEq& E, const CurvePoint& P) {
    if (P.at_infinity) return P;
    return CurvePoint::affine(P.x, -P.y - E.a1 * P.x - E.a3);
}

CurvePoint point_add(const WeierstrassEq& E, const CurvePoint& P, const CurvePoint& Q) {
    if (!on_curve(E, P) || !on_curve(E, Q)) throw DomainError("point not on the curve");
    if (P.at_infinity) return Q;
    if (Q.at_infinity) return P;
    const Field& F = E.field();
    auto C = [&](long v) { return RatFunc::from_int(F, v); };
    RatFunc lambda, nu;
    if (P.x == Q.x) {
        // either opposite points or a duplication
        if (Q.y == -P.y - E.a1 * P.x - E.a3) return CurvePoint::infinity();
        RatFunc denom = C(2) * P.y + E.a1 * P.x + E.a3;
        lambda = (C(3) * P.x * P.x + C(2) * E.a2 * P.x + E.a4 - E.a1 * P.y) / denom;
        nu = (-(P.x.pow(3)) + E.a4 * P.x + C(2) * E.a6 - E.a3 * P.y) / denom;
    } else {
        lambda = (Q.y - P.y) / (Q.x - P.x);
        nu = (P.y * Q.x - Q.y * P.x) / (Q.x - P.x);
    }
    RatFunc x3 = lambda * lambda + E.a1 * lambda - E.a2 - P.x - Q.x;
    RatFunc y3 = -(lambda + E.a1) * x3 - nu - E.a3;
    return CurvePoint::affine(x3, y3);
}

int point_order(const WeierstrassEq& E, const CurvePoint& P, int bound) {
    if (bound < 1) throw DomainError("order bound must be >= 1");
    if (!on_curve(E, P)) throw DomainError("point not on the curve");
    CurvePoint acc = P;
    for (int n = 1; n <= bound; ++n) {
        if (acc.at_infinity) return n;
        acc = point_add(E, acc, P);
    }
    return 0;
}

CurvePoint transform_point(const CurvePoint& P, const RatFunc& u, const RatFunc& r,
                           const RatFunc& s, const RatFunc& w) {
    if (P.at_infinity) return P;
    RatFunc xs = (P.x - r) / (u * u);
    RatFunc ys = (P.y - s * (P.x - r) - w) / u.pow(3);
    return CurvePoint::affine(xs, ys);
}

KPoly KPoly::from_coeffs(const Field& F, std::vector<RatFunc> c) {
    KPoly r(F);
    r.c_ = std::move(c);
    r.normalize();
    return r;
}

void KPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RatFunc KPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return RatFunc::zero(F_);
    return c_[static_cast<std::size_t>(i)];
}

KPoly KPoly::operator+(const KPoly& o) const {
    KPoly r(F_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), RatFunc::zero(F_));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    r.normalize();
    return r;
}

KPoly KPoly::operator*(const KPoly& o) const {
    KPoly r(F_);
    if (c_.empty() || o.c_.empty()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, RatFunc::zero(F_));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    r.normalize();
    return r;
}

KPoly KPoly::pow(long e) const {
    if (e < 0) throw DomainError("negative power of a polynomial");
    KPoly base = *this;
    KPoly result = KPoly::from_coeffs(F_, {RatFunc::one(F_)});
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

bool KPoly::operator==(const KPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

std::string KPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        RatFunc a = coeff(i);
        if (a.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << a.str() << ")";
        if (i > 0) {
            os << "*x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

TorsionPolys torsion_polynomials(const WeierstrassEq& E) {
    const Field& F = E.field();
    RatFunc one = RatFunc::one(F);
    StdInvariants I = invariants(E);
    KPoly two = KPoly::from_coeffs(
        F, {E.a3 * E.a3 + E.a6, E.a4 - E.a1 * E.a3, E.a1 * E.a1 + E.a2, one});
    KPoly quart = KPoly::from_coeffs(F, {I.b8, I.b6, I.b4, I.b2, one});
    KPoly res = KPoly::from_coeffs(F, {I.b2 * I.b2 * I.b8 + I.b6 * I.b6, I.b2 * I.b6, I.b4, one});
    return TorsionPolys{two, quart, res};
}

WeierstrassEq frobenius_pullback(const WeierstrassEq& E) {
    long p = E.p();
    return WeierstrassEq{E.a1.pow(p), E.a2.pow(p), E.a3.pow(p), E.a4.pow(p), E.a6.pow(p)};
}

bool is_short_form(const WeierstrassEq& E) {
    return E.a1.is_zero() && E.a2.is_zero() && E.a3.is_zero();
}

WeierstrassEq to_short_form(const WeierstrassEq& E) {
    if (is_short_form(E)) return E;
    if (E.p() < 5) throw DomainError("short-form normalization needs characteristic >= 5");
    StdInvariants I = invariants(E);
    const Field& F = E.field();
    RatFunc a4 = -I.c4 / RatFunc::from_int(F, 48);
    RatFunc a6 = -I.c6 / RatFunc::from_int(F, 864);
    return WeierstrassEq{RatFunc::zero(F), RatFunc::zero(F), RatFunc::zero(F), a4, a6};
}

WeierstrassEq twist_quadratic(const WeierstrassEq& E, const RatFunc& d) {
    if (E.p() == 2) throw DomainError("use the Artin-Schreier twist in characteristic 2");
    WeierstrassEq S = E;
    if (!is_short_form(S)) {
        if (E.p() == 3)
            throw DomainError("characteristic 3 requires the curve in short form");
        S = to_short_form(E);
    }
    return WeierstrassEq{S.a1, S.a2, S.a3, d * d * S.a4, d.pow(3) * S.a6};
}

WeierstrassEq to_char2_ordinary_form(const WeierstrassEq& E) {
    if (E.p() != 2) throw DomainError("normal form is specific to characteristic 2");
    if (E.a1.is_zero())
        throw DomainError("supersingular normal form (a1 = 0) is out of scope");
    // u = a1 makes a1 = 1; then r clears a3, w clears a4
    WeierstrassEq T = transform(E, E.a1, E.a3 / E.a1, RatFunc::zero(E.field()),
                                RatFunc::zero(E.field()));
    // now a1 = 1, a3 = 0; kill the a4 term with w = a4
    T = transform(T, RatFunc::one(E.field()), RatFunc::zero(E.field()), RatFunc::zero(E.field()),
                  T.a4);
    return T;
}

WeierstrassEq twist_quadratic_as(const WeierstrassEq& E, const RatFunc& d) {
    WeierstrassEq N = to_char2_ordinary_form(E);
    return WeierstrassEq{N.a1, N.a2 + d, N.a3, N.a4, N.a6};
}

WeierstrassEq twist_higher(const WeierstrassEq& E, HigherTwist kind, const RatFunc& u) {
    if (E.p() < 5) throw DomainError("higher twists require characteristic >= 5");
    WeierstrassEq S = to_short_form(E);
    StdInvariants I = invariants(S);
    if (kind == HigherTwist::Quartic) {
        if (!I.j || *I.j != RatFunc::from_int(E.field(), 1728))
            throw DomainError("quartic twist requires j = 1728");
        if (!S.a6.is_zero()) throw DomainError("quartic twist requires the form y^2 = x^3 + a4 x");
        return WeierstrassEq{S.a1, S.a2, S.a3, u * S.a4, S.a6};
    }
    if (!I.j || !I.j->is_zero()) throw DomainError("cubic/sextic twist requires j = 0");
    if (!S.a4.is_zero()) throw DomainError("cubic/sextic twist requires the form y^2 = x^3 + a6");
    RatFunc scale = kind == HigherTwist::Sextic ? u : u * u;
    return WeierstrassEq{S.a1, S.a2, S.a3, S.a4, scale * S.a6};
}

WeierstrassEq base_change(const WeierstrassEq& E, const RatFunc& g) {
    if (g.is_constant()) throw DomainError("base change by a constant function");
    return WeierstrassEq{substitute(E.a1, g), substitute(E.a2, g), substitute(E.a3, g),
                         substitute(E.a4, g), substitute(E.a6, g)};
}

WeierstrassEq lift(const WeierstrassEq& E, const Embedding& e) {
    return WeierstrassEq{lift(E.a1, e), lift(E.a2, e), lift(E.a3, e), lift(E.a4, e),
                         lift(E.a6, e)};
}

std::optional<CurvePoint> two_torsion_point_char2(const WeierstrassEq& E) {
    if (E.p() != 2) throw DomainError("helper is specific to characteristic 2");
    if (E.a1.is_zero()) return std::nullopt;
    RatFunc x0 = E.a3 / E.a1;
    RatFunc rhs = x0.pow(3) + E.a2 * x0 * x0 + E.a4 * x0 + E.a6;
    if (!is_pth_power(rhs)) return std::nullopt;
    CurvePoint P = CurvePoint::affine(x0, pth_root(rhs));
    return on_curve(E, P) ? std::optional<CurvePoint>(P) : std::nullopt;
}

}  // namespace neron

// Long Weierstrass equations y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
// over F_q(t): standard invariants, coordinate changes, the chord-tangent
// group law, 2- and 3-torsion polynomials, Frobenius pullback, twists and
// base change.

#ifndef NERON_WEIERSTRASS_HPP
#define NERON_WEIERSTRASS_HPP

#include <optional>

#include "neron/ratfunc.hpp"

namespace neron {

struct WeierstrassEq {
    RatFunc a1, a2, a3, a4, a6;

    // checks Delta != 0 unless allow_singular; intermediate relative cubics
    // with vanishing discriminant are legitimate inputs elsewhere
    static WeierstrassEq make(RatFunc a1, RatFunc a2, RatFunc a3, RatFunc a4, RatFunc a6,
                              bool allow_singular = false);
    static WeierstrassEq short_form(const RatFunc& a4, const RatFunc& a6,
                                    bool allow_singular = false);

    const Field& field() const { return a1.field(); }
    long p() const { return field()->p(); }

    bool operator==(const WeierstrassEq& o) const;

    std::string str(const std::string& var = "t") const;  // "[a1,a2,a3,a4,a6]"
};

struct StdInvariants {
    RatFunc b2, b4, b6, b8, c4, c6, disc;
    std::optional<RatFunc> j;  // absent iff disc = 0
};

StdInvariants invariants(const WeierstrassEq& E);
RatFunc discriminant(const WeierstrassEq& E);

// x = u^2 x' + r,  y = u^3 y' + s u^2 x' + w;  disc' = u^-12 disc
WeierstrassEq transform(const WeierstrassEq& E, const RatFunc& u, const RatFunc& r,
                        const RatFunc& s, const RatFunc& w);

struct CurvePoint {
    bool at_infinity = true;
    RatFunc x, y;

    static CurvePoint infinity() { return CurvePoint{}; }
    static CurvePoint affine(RatFunc x, RatFunc y) {
        return CurvePoint{false, std::move(x), std::move(y)};
    }
    bool operator==(const CurvePoint& o) const;
    std::string str() const;
};

bool on_curve(const WeierstrassEq& E, const CurvePoint& P);
CurvePoint point_neg(const WeierstrassEq& E, const CurvePoint& P);
CurvePoint point_add(const WeierstrassEq& E, const CurvePoint& P, const CurvePoint& Q);
// exact order when <= bound, otherwise 0 ("exceeds bound")
int point_order(const WeierstrassEq& E, const CurvePoint& P, int bound = 12);
// image of P under the (u,r,s,w) change of coordinates
CurvePoint transform_point(const CurvePoint& P, const RatFunc& u, const RatFunc& r,
                           const RatFunc& s, const RatFunc& w);

// polynomial in x with coefficients in K, small helper for the torsion
// polynomials and the Hasse coefficient
class KPoly {
  public:
    explicit KPoly(Field F) : F_(std::move(F)) {}
    static KPoly from_coeffs(const Field& F, std::vector<RatFunc> c);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    RatFunc coeff(int i) const;
    KPoly operator+(const KPoly& o) const;
    KPoly operator*(const KPoly& o) const;
    KPoly pow(long e) const;
    bool operator==(const KPoly& o) const;
    std::string str() const;

  private:
    void normalize();
    Field F_;
    std::vector<RatFunc> c_;
};

struct TorsionPolys {
    KPoly two_cubic;        // x^3 + (a1^2+a2)x^2 + (a4-a1a3)x + (a3^2+a6)
    KPoly three_quartic;    // x^4 + b2 x^3 + b4 x^2 + b6 x + b8
    KPoly resolvent_cubic;  // x^3 + b4 x^2 + b2 b6 x + b2^2 b8 + b6^2
};
TorsionPolys torsion_polynomials(const WeierstrassEq& E);

// coefficientwise p-th power; no re-minimalization
WeierstrassEq frobenius_pullback(const WeierstrassEq& E);

// d-twist of a short-form curve (char >= 3); auto-normalizes when char >= 5
WeierstrassEq twist_quadratic(const WeierstrassEq& E, const RatFunc& d);

// Artin-Schreier quadratic twist in characteristic 2, on the ordinary normal
// form y^2 + xy = x^3 + a2 x^2 + a6: a2 -> a2 + d
WeierstrassEq twist_quadratic_as(const WeierstrassEq& E, const RatFunc& d);

enum class HigherTwist { Cubic, Sextic, Quartic };
WeierstrassEq twist_higher(const WeierstrassEq& E, HigherTwist kind, const RatFunc& u);

// compose every coefficient with g (the new coordinate maps to g)
WeierstrassEq base_change(const WeierstrassEq& E, const RatFunc& g);

// normal forms
bool is_short_form(const WeierstrassEq& E);
WeierstrassEq to_short_form(const WeierstrassEq& E);  // char >= 5
// char 2, a1 != 0: y^2 + xy = x^3 + a2 x^2 + a6
WeierstrassEq to_char2_ordinary_form(const WeierstrassEq& E);

WeierstrassEq lift(const WeierstrassEq& E, const Embedding& e);

// the rational 2-torsion point with x = a3/a1 in characteristic 2, when its
// y-coordinate is rational
std::optional<CurvePoint> two_torsion_point_char2(const WeierstrassEq& E);

}  // namespace neron

#endif

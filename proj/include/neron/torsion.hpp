// Hasse invariants, supersingularity tests, the characteristic-2/3 torsion
// specialization criteria, and osculation numbers.

#ifndef NERON_TORSION_HPP
#define NERON_TORSION_HPP

#include <optional>

#include "neron/weierstrass.hpp"

namespace neron {

struct HasseData {
    RatFunc h;             // Hasse scalar in the chosen basis
    long vanishing_order;  // at the requested place; kValInf when h = 0
};

// char >= 3: coefficient of x^(p-1) in f(x)^((p-1)/2) after completing the
// square to y^2 = f(x); char 2: a1 of the integral minimal model at the place
HasseData hasse_invariant(const WeierstrassEq& E, const Place& v);

// supersingularity depends only on the j-invariant; decided on a
// representative curve via the Hasse coefficient
bool is_supersingular_j(const Fq& j0);

struct SpecializationReport {
    CurvePoint point;
    int order = 0;
    bool nonzero_in_fiber = false;
    bool nonzero_in_phi = false;
};

// char 3, minimal equations of the shape y^2 + a1 xy + a3 y = x^3 with
// nonzero a1, a3: the point (0,0) has order 3 and nonzero class in Phi_k
// exactly when a3 vanishes at the place
std::optional<SpecializationReport> special_form_3(const WeierstrassEq& E, const Place& v);

// char 2 analogue for y^2 + a1 xy = x^3 + a2 x^2 + a4 x: (0,0) has order 2,
// nonzero class in Phi_k iff a4 vanishes at the place
std::optional<SpecializationReport> special_form_2(const WeierstrassEq& E, const Place& v);

// osculation number of a point specializing to the zero section: -nu(x)/2,
// with nu(y) = 3 nu(x)/2 enforced
long osculation_number(const WeierstrassEq& E, const CurvePoint& P, const Place& v);

// independent specialization tests used to cross-check the special forms
bool specializes_to_zero_section(const CurvePoint& P, const Place& v);
bool specializes_to_singularity(const WeierstrassEq& E_minimal, const CurvePoint& P,
                                const Place& v);
// minimalizes E at v, maps P along, and tests against the singular point
bool phi_class_nonzero(const WeierstrassEq& E, const CurvePoint& P, const Place& v);

// informational flag: j in K^p is the splitting criterion for the p-torsion
// extension of an ordinary curve
bool j_is_pth_power(const WeierstrassEq& E);

}  // namespace neron

#endif

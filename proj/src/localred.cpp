#include "neron/localred.hpp"

#include <sstream>
#include <string>

#include "neron/torsion.hpp"

namespace neron {

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw Error(std::string("Tate algorithm invariant violated: ") + what);
}

}  // namespace

int KodairaSymbol::components() const {
    switch (tag) {
        case KodairaTag::In: return n == 0 ? 1 : n;
        case KodairaTag::II: return 1;
        case KodairaTag::III: return 2;
        case KodairaTag::IV: return 3;
        case KodairaTag::Istar: return n + 5;
        case KodairaTag::IVstar: return 7;
        case KodairaTag::IIIstar: return 8;
        case KodairaTag::IIstar: return 9;
    }
    return 1;
}

int KodairaSymbol::phi_order() const {
    switch (tag) {
        case KodairaTag::In: return n == 0 ? 1 : n;
        case KodairaTag::II: return 1;
        case KodairaTag::III: return 2;
        case KodairaTag::IV: return 3;
        case KodairaTag::Istar: return 4;
        case KodairaTag::IVstar: return 3;
        case KodairaTag::IIIstar: return 2;
        case KodairaTag::IIstar: return 1;
    }
    return 1;
}

std::string KodairaSymbol::phi_structure() const {
    switch (tag) {
        case KodairaTag::In: return n <= 1 ? "1" : "Z/" + std::to_string(n);
        case KodairaTag::II: return "1";
        case KodairaTag::III: return "Z/2";
        case KodairaTag::IV: return "Z/3";
        case KodairaTag::Istar: return n % 2 == 0 ? "Z/2 x Z/2" : "Z/4";
        case KodairaTag::IVstar: return "Z/3";
        case KodairaTag::IIIstar: return "Z/2";
        case KodairaTag::IIstar: return "1";
    }
    return "1";
}

std::string KodairaSymbol::str() const {
    switch (tag) {
        case KodairaTag::In: return "I" + std::to_string(n);
        case KodairaTag::II: return "II";
        case KodairaTag::III: return "III";
        case KodairaTag::IV: return "IV";
        case KodairaTag::Istar: return "I" + std::to_string(n) + "*";
        case KodairaTag::IVstar: return "IV*";
        case KodairaTag::IIIstar: return "III*";
        case KodairaTag::IIstar: return "II*";
    }
    return "?";
}

KodairaSymbol KodairaSymbol::parse(const std::string& s) {
    if (s == "II") return II();
    if (s == "III") return III();
    if (s == "IV") return IV();
    if (s == "II*") return IIstar();
    if (s == "III*") return IIIstar();
    if (s == "IV*") return IVstar();
    if (s.size() >= 2 && s[0] == 'I' && s.back() == '*')
        return Istar(std::stoi(s.substr(1, s.size() - 2)));
    if (s.size() >= 2 && s[0] == 'I') return I(std::stoi(s.substr(1)));
    throw DomainError("unknown Kodaira symbol: " + s);
}

std::string ReductionData::str() const {
    std::ostringstream os;
    os << kodaira.str() << " nu=" << nu_delta << " m=" << m << " f=" << f << " delta=" << delta
       << " phi=" << phi_order << " restarts=" << restarts;
    return os.str();
}

namespace {

struct TateState {
    Field k;
    WeierstrassEq E;  // working equation in the local variable, integral at 0
    // accumulated change of coordinates from the (moved) input equation
    RatFunc U, R, S, W;
    int restarts = 0;
    int ext_factor = 1;
};

RatFunc tpow(const Field& F, long e) {
    return RatFunc::t(F).pow(e);
}

void push(TateState& st, const RatFunc& u, const RatFunc& r, const RatFunc& s, const RatFunc& w) {
    st.E = transform(st.E, u, r, s, w);
    RatFunc R2 = st.R + st.U * st.U * r;
    RatFunc W2 = st.W + st.S * st.U * st.U * r + st.U.pow(3) * w;
    RatFunc S2 = st.S + st.U * s;
    st.R = R2;
    st.W = W2;
    st.S = S2;
    st.U = st.U * u;
}

long v0(const RatFunc& f) {
    return valuation(f, Place::origin(f.field()));
}

// residue of f / t^k at t = 0
Fq res_shift(const RatFunc& f, long k) {
    if (f.is_zero()) return f.field()->zero();
    return residue_at(f * tpow(f.field(), -k), Place::origin(f.field()));
}

Fq res0(const RatFunc& f) {
    return res_shift(f, 0);
}

struct QuadShape {
    bool distinct;
    Fq root;  // the double root when !distinct
};

// alpha Y^2 + beta Y + gamma over k, alpha != 0
QuadShape quadratic_shape(const Fq& alpha, const Fq& beta, const Fq& gamma) {
    const Field& k = alpha.field();
    if (k->p() == 2) {
        if (!beta.is_zero()) return {true, k->zero()};
        return {false, (gamma / alpha).sqrt_or_throw()};
    }
    Fq disc = beta * beta - k->from_int(4) * alpha * gamma;
    if (!disc.is_zero()) return {true, k->zero()};
    return {false, -beta / (k->from_int(2) * alpha)};
}

struct CubicShape {
    int distinct;  // 1 = triple root, 2 = one double root, 3 = separable
    Fq root;       // the multiple root when distinct < 3
};

// monic cubic over k; the multiple root of a cubic over a perfect field is
// rational, but its multiplicity must be read off the cubic itself (in
// characteristic 2 the gcd with the derivative has degree 2 either way)
CubicShape cubic_shape(const Poly& P) {
    const Field& k = P.field();
    Poly Pd = P.derivative();
    if (Pd.is_zero()) {
        // characteristic 3, P = T^3 + d
        return {1, (-P.coeff(0)).pth_root()};
    }
    Poly g = gcd(P, Pd);
    if (g.degree() == 0) return {3, k->zero()};
    Fq r;
    if (g.degree() == 1) {
        r = -g.coeff(0) / g.coeff(1);
    } else {
        // g = (T - r)^2
        Poly gm = g.monic();
        r = k->p() == 2 ? gm.coeff(0).sqrt_or_throw() : -gm.coeff(1) / k->from_int(2);
    }
    return {P.root_multiplicity(r) >= 3 ? 1 : 2, r};
}

// residues of the unique singular point of the reduced equation
std::pair<Fq, Fq> locate_singular_point(const Field& k, const WeierstrassEq& E) {
    Fq r1 = res0(E.a1), r2 = res0(E.a2), r3 = res0(E.a3), r4 = res0(E.a4), r6 = res0(E.a6);
    if (k->p() == 2) {
        if (!r1.is_zero()) {
            Fq x0 = r3 / r1;
            Fq y0 = (x0 * x0 + r4) / r1;
            return {x0, y0};
        }
        if (!r3.is_zero()) throw Error("reduction is smooth; no singular point");
        Fq x0 = r4.sqrt_or_throw();
        Fq y0 = (x0 * x0 * x0 + r2 * x0 * x0 + r4 * x0 + r6).sqrt_or_throw();
        return {x0, y0};
    }
    // multiple root of 4x^3 + b2 x^2 + 2 b4 x + b6 over k
    Fq b2 = r1 * r1 + k->from_int(4) * r2;
    Fq b4 = k->from_int(2) * r4 + r1 * r3;
    Fq b6 = r3 * r3 + k->from_int(4) * r6;
    Poly g = Poly::from_coeffs(k, {b6, k->from_int(2) * b4, b2, k->from_int(4)});
    CubicShape cs = cubic_shape(g.monic());
    if (cs.distinct == 3) throw Error("reduction is smooth; no singular point");
    Fq x0 = cs.root;
    Fq y0 = -(r1 * x0 + r3) / k->from_int(2);
    return {x0, y0};
}

struct TateOutcome {
    KodairaSymbol kodaira;
    long nu = 0;
};

TateOutcome run_tate(TateState& st) {
    const Field& F = st.k;
    const long p = F->p();
    RatFunc zero = RatFunc::zero(F);
    RatFunc one = RatFunc::one(F);
    RatFunc t = RatFunc::t(F);
    auto C = [&](const Fq& c) { return RatFunc::constant(c); };

    while (true) {
        StdInvariants I = invariants(st.E);
        long vd = v0(I.disc);
        if (vd == 0) return {KodairaSymbol::I(0), 0};

        // move the singular point of the reduction to the origin
        auto [x0, y0] = locate_singular_point(F, st.E);
        if (!x0.is_zero() || !y0.is_zero()) {
            push(st, one, C(x0), zero, C(y0));
            I = invariants(st.E);
        }

        if (v0(I.b2) == 0) return {KodairaSymbol::I(static_cast<int>(vd)), vd};
        if (v0(st.E.a6) < 2) return {KodairaSymbol::II(), vd};
        if (v0(I.b8) < 3) return {KodairaSymbol::III(), vd};
        if (v0(I.b6) < 3) return {KodairaSymbol::IV(), vd};

        // normalize so that t | a1,a2, t^2 | a3,a4, t^3 | a6
        if (p != 2) {
            RatFunc half = RatFunc::from_int(F, 2).inverse();
            if (!st.E.a1.is_zero() || !st.E.a3.is_zero())
                push(st, one, zero, -st.E.a1 * half, -st.E.a3 * half);
        } else {
            Fq s0 = res0(st.E.a2).sqrt_or_throw();
            if (!s0.is_zero()) push(st, one, zero, C(s0), zero);
            if (v0(st.E.a6) < 3) {
                Fq w0 = res_shift(st.E.a6, 2).sqrt_or_throw();
                if (!w0.is_zero()) push(st, one, zero, zero, t * C(w0));
            }
        }
        require(v0(st.E.a1) >= 1 && v0(st.E.a2) >= 1 && v0(st.E.a3) >= 2 &&
                    v0(st.E.a4) >= 2 && v0(st.E.a6) >= 3,
                "normalization before the cubic analysis");

        Poly P = Poly::from_coeffs(
            F, {res_shift(st.E.a6, 3), res_shift(st.E.a4, 2), res_shift(st.E.a2, 1), F->one()});
        CubicShape cs = cubic_shape(P);
        if (cs.distinct == 3) return {KodairaSymbol::Istar(0), vd};

        if (cs.distinct == 2) {
            // I_n*, n >= 1
            if (!cs.root.is_zero()) push(st, one, t * C(cs.root), zero, zero);
            require(v0(st.E.a2) == 1 && v0(st.E.a3) >= 2 && v0(st.E.a4) >= 3 &&
                        v0(st.E.a6) >= 4,
                    "double-root translation in the I_n* branch");
            int n = 1;
            while (true) {
                if (n % 2 == 1) {
                    long q = (n + 3) / 2;
                    QuadShape qs = quadratic_shape(F->one(), res_shift(st.E.a3, q),
                                                   -res_shift(st.E.a6, 2 * q));
                    if (qs.distinct) return {KodairaSymbol::Istar(n), vd};
                    if (!qs.root.is_zero()) push(st, one, zero, zero, tpow(F, q) * C(qs.root));
                } else {
                    long q = (n + 4) / 2;
                    QuadShape qs = quadratic_shape(res_shift(st.E.a2, 1), res_shift(st.E.a4, q),
                                                   res_shift(st.E.a6, 2 * q - 1));
                    if (qs.distinct) return {KodairaSymbol::Istar(n), vd};
                    if (!qs.root.is_zero()) push(st, one, tpow(F, q - 1) * C(qs.root), zero, zero);
                }
                ++n;
                if (n > vd) throw Error("I_n* subprocedure failed to terminate");
            }
        }

        // triple root of P
        if (!cs.root.is_zero()) push(st, one, t * C(cs.root), zero, zero);
        require(v0(st.E.a2) >= 2 && v0(st.E.a4) >= 3 && v0(st.E.a6) >= 4,
                "triple-root translation");

        QuadShape qs =
            quadratic_shape(F->one(), res_shift(st.E.a3, 2), -res_shift(st.E.a6, 4));
        if (qs.distinct) return {KodairaSymbol::IVstar(), vd};
        if (!qs.root.is_zero()) push(st, one, zero, zero, tpow(F, 2) * C(qs.root));

        if (v0(st.E.a4) == 3) return {KodairaSymbol::IIIstar(), vd};
        if (v0(st.E.a6) == 5) return {KodairaSymbol::IIstar(), vd};

        // not minimal: rescale and start over
        require(v0(st.E.a1) >= 1 && v0(st.E.a2) >= 2 && v0(st.E.a3) >= 3 &&
                    v0(st.E.a4) >= 4 && v0(st.E.a6) >= 6,
                "rescaling step entered on a reduced equation");
        push(st, t, zero, zero, zero);
        ++st.restarts;
    }
}

}  // namespace

ReductionData tate_reduce(const WeierstrassEq& E, const Place& v, int ext_cap) {
    (void)ext_cap;  // all Tate root extractions stay in the (perfect) constant field
    const Field& F = E.field();
    if (discriminant(E).is_zero())
        throw SingularCurveError("Tate reduction of a singular equation");

    // move the place to the origin of a local coordinate
    RatFunc motion;  // t = motion(s)
    bool moved = false;
    WeierstrassEq Es = E;
    if (v.infinite) {
        motion = RatFunc::t(F).inverse();
        moved = true;
    } else if (!v.center.is_zero()) {
        motion = RatFunc::t(F) + RatFunc::constant(v.center);
        moved = true;
    }
    if (moved) Es = base_change(E, motion);

    TateState st{F, Es, RatFunc::one(F), RatFunc::zero(F), RatFunc::zero(F), RatFunc::zero(F),
                 0, 1};

    // make the equation integral at the place
    long e = 0;
    const RatFunc* as[5] = {&st.E.a1, &st.E.a2, &st.E.a3, &st.E.a4, &st.E.a6};
    const long ws[5] = {1, 2, 3, 4, 6};
    for (int i = 0; i < 5; ++i) {
        long val = v0(*as[i]);
        if (val < 0) e = std::max(e, (-val + ws[i] - 1) / ws[i]);
    }
    if (e > 0) push(st, tpow(F, -e), RatFunc::zero(F), RatFunc::zero(F), RatFunc::zero(F));

    TateOutcome out = run_tate(st);

    ReductionData rd;
    rd.kodaira = out.kodaira;
    rd.nu_delta = out.nu;
    rd.m = out.kodaira.components();
    rd.epsilon = out.kodaira.good() ? 0 : (out.kodaira.multiplicative() ? 1 : 2);
    rd.f = rd.nu_delta - (rd.m - 1);
    rd.delta = rd.f - rd.epsilon;
    rd.phi_order = out.kodaira.phi_order();
    rd.phi_structure = out.kodaira.phi_structure();
    rd.restarts = st.restarts;
    rd.ext_degree = st.ext_factor;
    rd.constant_field = st.k;

    if (!out.kodaira.good()) {
        auto [sx, sy] = locate_singular_point(st.k, st.E);
        rd.singular_point = std::make_pair(sx, sy);
    }

    if (moved) {
        // express the minimal model in the input variable; both motions are
        // involutions (s = motion(t))
        rd.minimal_eq = base_change(st.E, motion);
        rd.tr_u = substitute(st.U, motion);
        rd.tr_r = substitute(st.R, motion);
        rd.tr_s = substitute(st.S, motion);
        rd.tr_w = substitute(st.W, motion);
    } else {
        rd.minimal_eq = st.E;
        rd.tr_u = st.U;
        rd.tr_r = st.R;
        rd.tr_s = st.S;
        rd.tr_w = st.W;
    }
    return rd;
}

bool is_minimal(const WeierstrassEq& E, const Place& v) {
    const RatFunc* as[5] = {&E.a1, &E.a2, &E.a3, &E.a4, &E.a6};
    for (const RatFunc* a : as)
        if (valuation(*a, v) < 0) return false;
    return tate_reduce(E, v).restarts == 0;
}

PotentialReduction potential_reduction(const WeierstrassEq& E, const Place& v) {
    StdInvariants I = invariants(E);
    if (!I.j) throw SingularCurveError("potential reduction of a singular equation");
    if (valuation(*I.j, v) < 0) return PotentialReduction::Multiplicative;
    Fq j0 = residue_at(*I.j, v);
    return is_supersingular_j(j0) ? PotentialReduction::Supersingular
                                  : PotentialReduction::Ordinary;
}

std::string potential_reduction_str(PotentialReduction r) {
    switch (r) {
        case PotentialReduction::Ordinary: return "potentially_ordinary";
        case PotentialReduction::Supersingular: return "potentially_supersingular";
        case PotentialReduction::Multiplicative: return "potentially_multiplicative";
    }
    return "?";
}

bool ogg_consistency(const ReductionData& rd) {
    if (rd.nu_delta != rd.epsilon + rd.delta + (rd.m - 1)) return false;
    if (rd.f != rd.epsilon + rd.delta) return false;
    if (rd.kodaira.additive() && (rd.phi_order < 1 || rd.phi_order > 4)) return false;
    if (rd.kodaira.multiplicative() && rd.phi_order != rd.kodaira.n) return false;
    if (rd.kodaira.good() && (rd.nu_delta != 0 || rd.f != 0)) return false;
    if (rd.delta < 0) return false;
    if (rd.constant_field && rd.constant_field->p() >= 5 && rd.delta != 0) return false;
    return true;
}

std::optional<std::pair<Fq, Fq>> reduction_singular_point(const WeierstrassEq& E, const Place& v) {
    // translate the place to the origin so residues are plain evaluations
    WeierstrassEq Es = E;
    const Field& F = E.field();
    if (v.infinite)
        Es = base_change(E, RatFunc::t(F).inverse());
    else if (!v.center.is_zero())
        Es = base_change(E, RatFunc::t(F) + RatFunc::constant(v.center));
    if (v0(discriminant(Es)) == 0) return std::nullopt;
    return locate_singular_point(F, Es);
}

}  // namespace neron

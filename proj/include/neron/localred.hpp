// Tate's algorithm at the places of F_q(t), Kodaira classification and the
// conductor bookkeeping nu(Delta) = epsilon + delta + (m - 1).

#ifndef NERON_LOCALRED_HPP
#define NERON_LOCALRED_HPP

#include <optional>

#include "neron/weierstrass.hpp"

namespace neron {

enum class KodairaTag { In, II, III, IV, Istar, IVstar, IIIstar, IIstar };

struct KodairaSymbol {
    KodairaTag tag = KodairaTag::In;
    int n = 0;  // for In and Istar

    static KodairaSymbol I(int n) { return {KodairaTag::In, n}; }
    static KodairaSymbol II() { return {KodairaTag::II, 0}; }
    static KodairaSymbol III() { return {KodairaTag::III, 0}; }
    static KodairaSymbol IV() { return {KodairaTag::IV, 0}; }
    static KodairaSymbol Istar(int n) { return {KodairaTag::Istar, n}; }
    static KodairaSymbol IVstar() { return {KodairaTag::IVstar, 0}; }
    static KodairaSymbol IIIstar() { return {KodairaTag::IIIstar, 0}; }
    static KodairaSymbol IIstar() { return {KodairaTag::IIstar, 0}; }

    bool good() const { return tag == KodairaTag::In && n == 0; }
    bool multiplicative() const { return tag == KodairaTag::In && n >= 1; }
    bool additive() const { return !good() && !multiplicative(); }

    int components() const;  // geometric component count m
    int phi_order() const;
    std::string phi_structure() const;

    bool operator==(const KodairaSymbol& o) const { return tag == o.tag && n == o.n; }
    bool operator!=(const KodairaSymbol& o) const { return !(*this == o); }

    std::string str() const;              // "I3", "I1*", "IV*", ...
    static KodairaSymbol parse(const std::string& s);
};

struct ReductionData {
    KodairaSymbol kodaira;
    long nu_delta = 0;  // valuation of a minimal discriminant
    int m = 1;          // fiber components
    int epsilon = 0;    // 0 good, 1 multiplicative, 2 additive
    long f = 0;         // conductor exponent, epsilon + delta
    long delta = 0;     // wild part
    int phi_order = 1;
    std::string phi_structure;
    int restarts = 0;    // u = t rescalings performed by the algorithm
    int ext_degree = 1;  // constant-field extension factor used
    WeierstrassEq minimal_eq;
    Field constant_field;

    // composite change of coordinates from the input equation to minimal_eq,
    // in the input variable
    RatFunc tr_u, tr_r, tr_s, tr_w;
    // residues of the singular point of the reduced minimal equation, when
    // reduction is bad
    std::optional<std::pair<Fq, Fq>> singular_point;

    std::string str() const;
};

ReductionData tate_reduce(const WeierstrassEq& E, const Place& v, int ext_cap = 12);

// true iff E is integral at v and tate_reduce performs zero restarts
bool is_minimal(const WeierstrassEq& E, const Place& v);

enum class PotentialReduction { Ordinary, Supersingular, Multiplicative };
PotentialReduction potential_reduction(const WeierstrassEq& E, const Place& v);
std::string potential_reduction_str(PotentialReduction r);

// cross-check oracle for the numerical invariants
bool ogg_consistency(const ReductionData& rd);

// singular point of the reduction of an integral equation at v, if any
std::optional<std::pair<Fq, Fq>> reduction_singular_point(const WeierstrassEq& E, const Place& v);

}  // namespace neron

#endif

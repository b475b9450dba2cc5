// Elements of F_q(t) as reduced fractions with monic denominator, plus the
// supported places (t = c for c in the constant field, and t = infinity) and
// the discrete valuations attached to them.

#ifndef NERON_RATFUNC_HPP
#define NERON_RATFUNC_HPP

#include <limits>
#include <string>

#include "neron/poly.hpp"

namespace neron {

// +infinity sentinel for the valuation of 0; large enough that sums of a few
// valuations never overflow
inline constexpr long kValInf = std::numeric_limits<long>::max() / 8;

inline long val_add(long a, long b) {
    if (a >= kValInf || b >= kValInf) return kValInf;
    return a + b;
}

struct Place {
    bool infinite = false;
    Fq center;  // meaningful when !infinite

    static Place at(const Fq& c) { return Place{false, c}; }
    static Place origin(const Field& F) { return Place{false, F->zero()}; }
    static Place infinity(const Field& F) { return Place{true, F->zero()}; }

    std::string str() const;
};

class RatFunc {
  public:
    RatFunc() = default;

    static RatFunc zero(const Field& F) { return RatFunc(Poly::zero(F), Poly::one(F)); }
    static RatFunc one(const Field& F) { return RatFunc(Poly::one(F), Poly::one(F)); }
    static RatFunc constant(const Fq& c) { return RatFunc(Poly::constant(c), Poly::one(c.field())); }
    static RatFunc from_int(const Field& F, long v) { return constant(F->from_int(v)); }
    static RatFunc t(const Field& F) { return RatFunc(Poly::x(F), Poly::one(F)); }
    static RatFunc of(const Poly& p) { return RatFunc(p, Poly::one(p.field())); }
    RatFunc(Poly num, Poly den);

    const Field& field() const { return num_.field(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    RatFunc pow(long e) const;  // negative exponents allowed when nonzero
    RatFunc inverse() const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    std::string str(const std::string& var = "t") const;

  private:
    Poly num_;
    Poly den_;  // monic, coprime to num_
};

// ord_v(f); kValInf iff f = 0
long valuation(const RatFunc& f, const Place& v);

// value of f at the place; PoleError if valuation < 0
Fq residue_at(const RatFunc& f, const Place& v);

// exact composition f(g); g must be nonconstant
RatFunc substitute(const RatFunc& f, const RatFunc& g);

// lift along a constant-field embedding
RatFunc lift(const RatFunc& f, const Embedding& e);
Place lift(const Place& v, const Embedding& e);

// p-th root of f when f is a p-th power in F_q(t); used for 2-torsion
// y-coordinates in characteristic 2
bool is_pth_power(const RatFunc& f);
RatFunc pth_root(const RatFunc& f);

}  // namespace neron

#endif

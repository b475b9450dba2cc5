// Finite computable kernels around group schemes of order p: the twisted
// composition law a*b = a + b + (1/tau) sum a^i b^(p-i) / (i!(p-i)!), the
// truncated exponential, the twisted p-Lie algebra, and the free-orbit count
// behind the H^1 dimension formula.

#ifndef NERON_GROUPSCHEME_HPP
#define NERON_GROUPSCHEME_HPP

#include <memory>
#include <vector>

#include "neron/ratfunc.hpp"

namespace neron {

// F_q[x_1..x_k]/(x_1^p,...,x_k^p); supports at most 3 variables and p <= 7 so
// every identity check is a small full symbolic expansion
class TruncRing : public std::enable_shared_from_this<TruncRing> {
  public:
    static std::shared_ptr<const TruncRing> make(const Field& F, int vars);

    const Field& base() const { return F_; }
    long p() const { return F_->p(); }
    int vars() const { return k_; }
    long monomials() const { return size_; }

  private:
    TruncRing(Field F, int k, long size) : F_(std::move(F)), k_(k), size_(size) {}
    Field F_;
    int k_;
    long size_;
};

using TruncRingPtr = std::shared_ptr<const TruncRing>;

class TruncElem {
  public:
    TruncElem() = default;
    static TruncElem zero(const TruncRingPtr& R);
    static TruncElem one(const TruncRingPtr& R);
    static TruncElem constant(const TruncRingPtr& R, const Fq& c);
    static TruncElem gen(const TruncRingPtr& R, int i);

    const TruncRingPtr& ring() const { return R_; }
    bool is_zero() const;
    Fq constant_term() const { return c_[0]; }
    bool is_p_nilpotent() const { return constant_term().is_zero(); }

    TruncElem operator+(const TruncElem& o) const;
    TruncElem operator-(const TruncElem& o) const;
    TruncElem operator*(const TruncElem& o) const;
    TruncElem operator-() const;
    TruncElem mul_scalar(const Fq& c) const;
    TruncElem pow(long e) const;
    bool operator==(const TruncElem& o) const;
    bool operator!=(const TruncElem& o) const { return !(*this == o); }

    std::string str() const;

  private:
    explicit TruncElem(TruncRingPtr R);
    TruncRingPtr R_;
    std::vector<Fq> c_;  // indexed by exponent tuples in mixed radix p
};

// the twisted composition law; requires a^p = b^p = 0 and tau != 0
TruncElem oort_tate_add(const TruncElem& a, const TruncElem& b, const Fq& tau);

// 1 + a + a^2/2! + ... + a^(p-1)/(p-1)!; requires a^p = 0
TruncElem truncated_exp(const TruncElem& a);

// iterated star composition; inverse of a is its (p-1)-fold star power
TruncElem oort_tate_multiple(const TruncElem& a, long n, const Fq& tau);

// the [p]-operation on the rank-1 twisted Lie algebra: (c u)^[p] = c^p / tau u
RatFunc twisted_lie_power(const RatFunc& tau, const RatFunc& coeff);

// monic irreducible polynomials over F of degree <= bound, by sieving
// against irreducibles of smaller degree
std::vector<Poly> irreducible_polys_upto(const Field& F, int degree_bound);

// the (p-1)-st roots of unity in F; error if mu_{p-1} is not contained in F
std::vector<Fq> roots_of_unity(const Field& F, long order);

// number of free mu_{p-1}-orbits of irreducible polynomials of degree
// <= degree_bound, normalized to constant term 1 (plus the prime X)
long h1_free_orbit_count(long p, const Field& F, int degree_bound);

// the two orbit-freeness tests: fixed by some nontrivial zeta, and support
// contained in a proper subring k[X^i]; they agree on normalized polynomials
bool orbit_fixed_by_nontrivial(const Poly& h_normalized, const std::vector<Fq>& mu);
bool in_proper_power_subring(const Poly& h, long group_order);

}  // namespace neron

#endif

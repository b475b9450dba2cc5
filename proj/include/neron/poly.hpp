// Dense univariate polynomials over F_q, normalized with no trailing zeros.
// The zero polynomial has degree() == kNegInfDegree.

#ifndef NERON_POLY_HPP
#define NERON_POLY_HPP

#include <utility>
#include <vector>

#include "neron/fq.hpp"

namespace neron {

inline constexpr int kNegInfDegree = -1;

class Poly {
  public:
    Poly() = default;
    explicit Poly(Field F) : F_(std::move(F)) {}

    static Poly zero(const Field& F) { return Poly(F); }
    static Poly constant(const Fq& c);
    static Poly one(const Field& F) { return constant(F->one()); }
    static Poly x(const Field& F);
    static Poly from_coeffs(const Field& F, std::vector<Fq> coeffs);
    // c * x^k
    static Poly monomial(const Fq& c, int k);

    const Field& field() const { return F_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Fq coeff(int i) const;
    Fq lead() const;
    const std::vector<Fq>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly mul_scalar(const Fq& c) const;
    Poly pow(long e) const;

    // quotient and remainder; divisor must be nonzero
    std::pair<Poly, Poly> divrem(const Poly& d) const;
    bool divisible_by(const Poly& d) const;

    Poly derivative() const;
    Fq eval(const Fq& x) const;
    Poly monic() const;
    // multiply by t^k (k >= 0), or exactly divide by t^-k (k < 0)
    Poly shift(int k) const;
    // multiplicity of root c
    int root_multiplicity(const Fq& c) const;
    // substitute x -> x + c
    Poly translate(const Fq& c) const;
    // coefficientwise p-th power composed with x -> x^p, i.e. f(x)^p
    Poly frobenius() const;

    bool operator==(const Poly& o) const { return equal(o); }
    bool operator!=(const Poly& o) const { return !equal(o); }

    std::string str(const std::string& var = "t") const;

  private:
    bool equal(const Poly& o) const;
    void normalize();

    Field F_;
    std::vector<Fq> c_;
};

Poly gcd(const Poly& a, const Poly& b);

// all roots of h lying in F (the coefficient field), with multiplicities,
// found by exhaustive evaluation
std::vector<std::pair<Fq, int>> roots_in_field(const Poly& h);

// lift a polynomial along a field embedding
Poly lift(const Poly& f, const Embedding& e);

// smallest extension F_{q^m}, m <= cap, over which h splits into linear
// factors; returns the new field
Field extend_for_splitting(const Poly& h, const Field& F, int cap);

}  // namespace neron

#endif

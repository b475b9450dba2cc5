// Exact arithmetic in finite fields F_{p^n}, represented in a fixed
// polynomial basis modulo a deterministically chosen irreducible polynomial.
// Fields are immutable shared contexts; elements are plain values.

#ifndef NERON_FQ_HPP
#define NERON_FQ_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace neron {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error {
    using Error::Error;
};

struct PoleError : Error {
    using Error::Error;
};

struct SingularCurveError : Error {
    using Error::Error;
};

struct CapExceededError : Error {
    int required_degree;  // -1 when unknown
    explicit CapExceededError(const std::string& msg, int required = -1)
        : Error(msg), required_degree(required) {}
};

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos) : Error(msg), position(pos) {}
};

// Hard cap on the degree of the constant field over F_p.
inline constexpr int kMaxFieldDeg = 12;

class Fq;
class FqField;
using Field = std::shared_ptr<const FqField>;

// F_{p^n} = F_p[g]/(modulus).  For n > 1 the modulus is the monic irreducible
// polynomial of degree n over F_p whose coefficient vector (c_0,...,c_{n-1}),
// read as a base-p integer with c_0 least significant, is smallest.  This
// pins embeddings and all reported field data.
class FqField : public std::enable_shared_from_this<FqField> {
  public:
    static Field prime(long p);
    static Field extension(long p, int n);

    long p() const { return p_; }
    int deg() const { return n_; }
    // p^n; throws if it does not fit in 62 bits
    long size() const;
    bool size_fits() const { return q_fits_; }
    const std::vector<long>& modulus() const { return modulus_; }

    Fq zero() const;
    Fq one() const;
    Fq from_int(long v) const;
    // residue class of the basis generator g (= x mod modulus); requires n > 1
    Fq gen() const;
    Fq from_coeffs(const std::vector<long>& c) const;
    // k-th element in the deterministic enumeration, k in [0, size())
    Fq element(long k) const;

    bool same(const FqField& other) const;

    // raw coefficient-array kernels used by the polynomial layer; all arrays
    // have length deg()
    void raw_add(const long* a, const long* b, long* out) const;
    void raw_sub(const long* a, const long* b, long* out) const;
    void raw_mul(const long* a, const long* b, long* out) const;
    void raw_mul_add(long* acc, const long* a, const long* b) const;  // acc += a*b
    void raw_neg(const long* a, long* out) const;
    bool raw_is_zero(const long* a) const;

  private:
    FqField(long p, int n, std::vector<long> modulus);

    long p_;
    int n_;
    std::vector<long> modulus_;  // size n_+1, monic
    long q_;
    bool q_fits_;

    friend class Fq;
};

class Fq {
  public:
    Fq() = default;

    const Field& field() const { return F_; }
    long p() const { return F_->p(); }

    bool is_zero() const;
    bool is_one() const;

    Fq operator+(const Fq& o) const;
    Fq operator-(const Fq& o) const;
    Fq operator*(const Fq& o) const;
    Fq operator/(const Fq& o) const;
    Fq operator-() const;
    Fq& operator+=(const Fq& o) { return *this = *this + o; }
    Fq& operator-=(const Fq& o) { return *this = *this - o; }
    Fq& operator*=(const Fq& o) { return *this = *this * o; }

    bool operator==(const Fq& o) const;
    bool operator!=(const Fq& o) const { return !(*this == o); }
    // coefficientwise order; used for deterministic tie-breaking
    bool operator<(const Fq& o) const;

    Fq inverse() const;
    Fq pow(long e) const;  // negative exponents allowed for nonzero elements
    // x -> x^p and its inverse (Frobenius is bijective on a finite field)
    Fq frobenius() const;
    Fq pth_root() const;
    Fq sqrt_or_throw() const;  // any square root; error if none exists

    // value in [0,p) for prime-field elements
    long to_int() const;
    long coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
    // index of this element in the field enumeration
    long enum_index() const;

    std::string str() const;

    const long* raw() const { return c_.data(); }
    long* raw() { return c_.data(); }

  private:
    Fq(Field F, std::array<long, kMaxFieldDeg> c) : F_(std::move(F)), c_(c) {}

    Field F_;
    std::array<long, kMaxFieldDeg> c_{};

    friend class FqField;
    friend class Embedding;
};

// Precomputed field embedding F_{p^n} -> F_{p^N}, n | N.  The image of the
// source generator is the root of the source modulus in the target field
// that is least in the deterministic element order.
class Embedding {
  public:
    Embedding(const Field& src, const Field& dst);

    Fq apply(const Fq& a) const;
    const Field& src() const { return src_; }
    const Field& dst() const { return dst_; }

  private:
    Field src_;
    Field dst_;
    Fq gen_image_;
};

}  // namespace neron

#endif

#include "neron/fq.hpp"

#include <algorithm>
#include <sstream>

namespace neron {

namespace {

long mod_inverse(long a, long p) {
    long t = 0, new_t = 1, r = p, new_r = a % p;
    if (new_r < 0) new_r += p;
    while (new_r != 0) {
        long q = r / new_r;
        std::swap(t -= q * new_t, new_t);
        std::swap(r -= q * new_r, new_r);
    }
    if (r != 1) throw DomainError("element not invertible mod p");
    return t < 0 ? t + p : t;
}

// dense F_p[x] helpers for modulus search, on plain coefficient vectors
using PVec = std::vector<long>;

void ptrim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec pmulmod(const PVec& a, const PVec& b, const PVec& f, long p) {
    if (a.empty() || b.empty()) return {};
    PVec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    // reduce mod monic f
    long n = static_cast<long>(f.size()) - 1;
    for (long d = static_cast<long>(r.size()) - 1; d >= n; --d) {
        long c = r[d] % p;
        if (c == 0) continue;
        for (long i = 0; i <= n; ++i) {
            long idx = d - n + i;
            r[idx] = ((r[idx] - c * f[i]) % p + p) % p;
        }
    }
    r.resize(n);
    ptrim(r);
    return r;
}

PVec ppowmod(PVec base, long e, const PVec& f, long p) {
    PVec result{1};
    while (e > 0) {
        if (e & 1) result = pmulmod(result, base, f, p);
        base = pmulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

// x^(p^k) mod f via k successive p-th powers
PVec pfrobpow(const PVec& f, long p, int k) {
    PVec x{0, 1};
    PVec r = x;
    for (int i = 0; i < k; ++i) r = ppowmod(r, p, f, p);
    return r;
}

PVec pgcd(PVec a, PVec b, long p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // a mod b with b made monic on the fly
        long inv = mod_inverse(b.back(), p);
        PVec r = a;
        long db = static_cast<long>(b.size()) - 1;
        for (long d = static_cast<long>(r.size()) - 1; d >= db; --d) {
            long c = r[d] % p;
            if (c == 0) continue;
            long scale = c * inv % p;
            for (long i = 0; i <= db; ++i) {
                long idx = d - db + i;
                r[idx] = ((r[idx] - scale * b[i]) % p + p) % p;
            }
        }
        r.resize(db);
        ptrim(r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool is_irreducible(const PVec& f, long p) {
    int n = static_cast<int>(f.size()) - 1;
    if (n < 1) return false;
    // x^(p^n) == x mod f, and x^(p^(n/r)) - x coprime to f for prime r | n
    PVec x{0, 1};
    PVec t = pfrobpow(f, p, n);
    if (t != x) return false;
    for (int r = 2; r <= n; ++r) {
        if (n % r != 0) continue;
        bool rprime = true;
        for (int d = 2; d * d <= r; ++d)
            if (r % d == 0) rprime = false;
        if (!rprime) continue;
        PVec u = pfrobpow(f, p, n / r);
        // u - x
        PVec diff = u;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = ((diff[1] - 1) % p + p) % p;
        ptrim(diff);
        PVec g = pgcd(f, diff, p);
        if (static_cast<int>(g.size()) - 1 != 0) return false;
    }
    return true;
}

PVec least_irreducible(long p, int n) {
    if (n == 1) return {0, 1};
    // coefficient vectors (c_0..c_{n-1}) ordered as base-p integers, c_0
    // least significant
    long total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > (1L << 40) / p) throw CapExceededError("modulus search space too large");
        total *= p;
    }
    for (long k = 0; k < total; ++k) {
        PVec f(static_cast<std::size_t>(n) + 1, 0);
        long v = k;
        for (int i = 0; i < n; ++i) {
            f[static_cast<std::size_t>(i)] = v % p;
            v /= p;
        }
        f[static_cast<std::size_t>(n)] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw Error("no irreducible modulus found");  // unreachable
}

}  // namespace

FqField::FqField(long p, int n, std::vector<long> modulus)
    : p_(p), n_(n), modulus_(std::move(modulus)) {
    q_fits_ = true;
    q_ = 1;
    for (int i = 0; i < n_; ++i) {
        if (q_ > (1L << 62) / p_) {
            q_fits_ = false;
            q_ = 0;
            break;
        }
        q_ *= p_;
    }
}

Field FqField::prime(long p) {
    if (p < 2) throw DomainError("characteristic must be a prime >= 2");
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw DomainError("characteristic must be prime");
    return Field(new FqField(p, 1, {0, 1}));
}

Field FqField::extension(long p, int n) {
    if (n < 1) throw DomainError("extension degree must be >= 1");
    if (n > kMaxFieldDeg)
        throw CapExceededError("extension degree exceeds supported bound", n);
    if (n == 1) return prime(p);
    prime(p);  // validates p
    return Field(new FqField(p, n, least_irreducible(p, n)));
}

long FqField::size() const {
    if (!q_fits_) throw CapExceededError("field too large to enumerate");
    return q_;
}

bool FqField::same(const FqField& other) const {
    return p_ == other.p_ && n_ == other.n_ && modulus_ == other.modulus_;
}

Fq FqField::zero() const {
    return Fq(shared_from_this(), {});
}

Fq FqField::one() const {
    return from_int(1);
}

Fq FqField::from_int(long v) const {
    std::array<long, kMaxFieldDeg> c{};
    c[0] = ((v % p_) + p_) % p_;
    return Fq(shared_from_this(), c);
}

Fq FqField::gen() const {
    if (n_ < 2) throw DomainError("prime field has no declared generator");
    std::array<long, kMaxFieldDeg> c{};
    c[1] = 1;
    return Fq(shared_from_this(), c);
}

Fq FqField::from_coeffs(const std::vector<long>& coeffs) const {
    if (static_cast<int>(coeffs.size()) > n_) throw DomainError("too many coefficients");
    std::array<long, kMaxFieldDeg> c{};
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = ((coeffs[i] % p_) + p_) % p_;
    return Fq(shared_from_this(), c);
}

Fq FqField::element(long k) const {
    std::array<long, kMaxFieldDeg> c{};
    for (int i = 0; i < n_; ++i) {
        c[static_cast<std::size_t>(i)] = k % p_;
        k /= p_;
    }
    return Fq(shared_from_this(), c);
}

void FqField::raw_add(const long* a, const long* b, long* out) const {
    for (int i = 0; i < n_; ++i) {
        long s = a[i] + b[i];
        out[i] = s >= p_ ? s - p_ : s;
    }
}

void FqField::raw_sub(const long* a, const long* b, long* out) const {
    for (int i = 0; i < n_; ++i) {
        long s = a[i] - b[i];
        out[i] = s < 0 ? s + p_ : s;
    }
}

void FqField::raw_neg(const long* a, long* out) const {
    for (int i = 0; i < n_; ++i) out[i] = a[i] == 0 ? 0 : p_ - a[i];
}

bool FqField::raw_is_zero(const long* a) const {
    for (int i = 0; i < n_; ++i)
        if (a[i] != 0) return false;
    return true;
}

void FqField::raw_mul(const long* a, const long* b, long* out) const {
    if (n_ == 1) {
        out[0] = a[0] * b[0] % p_;
        return;
    }
    long prod[2 * kMaxFieldDeg] = {0};
    for (int i = 0; i < n_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
    }
    for (int d = 2 * n_ - 2; d >= n_; --d) {
        long c = prod[d];
        if (c == 0) continue;
        for (int i = 0; i < n_; ++i) {
            long idx = d - n_ + i;
            prod[idx] = ((prod[idx] - c * modulus_[static_cast<std::size_t>(i)]) % p_ + p_) % p_;
        }
        prod[d] = 0;
    }
    for (int i = 0; i < n_; ++i) out[i] = prod[i];
}

void FqField::raw_mul_add(long* acc, const long* a, const long* b) const {
    long tmp[kMaxFieldDeg];
    raw_mul(a, b, tmp);
    raw_add(acc, tmp, acc);
}

bool Fq::is_zero() const {
    return F_->raw_is_zero(c_.data());
}

bool Fq::is_one() const {
    if (c_[0] != 1) return false;
    for (int i = 1; i < F_->deg(); ++i)
        if (c_[static_cast<std::size_t>(i)] != 0) return false;
    return true;
}

Fq Fq::operator+(const Fq& o) const {
    Fq r(F_, {});
    F_->raw_add(c_.data(), o.c_.data(), r.c_.data());
    return r;
}

Fq Fq::operator-(const Fq& o) const {
    Fq r(F_, {});
    F_->raw_sub(c_.data(), o.c_.data(), r.c_.data());
    return r;
}

Fq Fq::operator*(const Fq& o) const {
    Fq r(F_, {});
    F_->raw_mul(c_.data(), o.c_.data(), r.c_.data());
    return r;
}

Fq Fq::operator/(const Fq& o) const {
    return *this * o.inverse();
}

Fq Fq::operator-() const {
    Fq r(F_, {});
    F_->raw_neg(c_.data(), r.c_.data());
    return r;
}

bool Fq::operator==(const Fq& o) const {
    for (int i = 0; i < F_->deg(); ++i)
        if (c_[static_cast<std::size_t>(i)] != o.c_[static_cast<std::size_t>(i)]) return false;
    return true;
}

bool Fq::operator<(const Fq& o) const {
    for (int i = F_->deg() - 1; i >= 0; --i) {
        if (c_[static_cast<std::size_t>(i)] != o.c_[static_cast<std::size_t>(i)])
            return c_[static_cast<std::size_t>(i)] < o.c_[static_cast<std::size_t>(i)];
    }
    return false;
}

Fq Fq::inverse() const {
    if (is_zero()) throw DomainError("division by zero in F_q");
    long p = F_->p();
    if (F_->deg() == 1) {
        Fq r(F_, {});
        r.c_[0] = mod_inverse(c_[0], p);
        return r;
    }
    // extended Euclid in F_p[x] against the modulus
    PVec a(F_->modulus().begin(), F_->modulus().end());
    PVec b(c_.begin(), c_.begin() + F_->deg());
    ptrim(b);
    PVec s0{}, s1{1};  // coefficients of b in the Bezout combination
    while (!b.empty()) {
        long inv = mod_inverse(b.back(), p);
        long db = static_cast<long>(b.size()) - 1;
        PVec r = a, q(a.size(), 0);
        for (long d = static_cast<long>(r.size()) - 1; d >= db; --d) {
            long c = r[static_cast<std::size_t>(d)] % p;
            if (c == 0) continue;
            long scale = c * inv % p;
            q[static_cast<std::size_t>(d - db)] = scale;
            for (long i = 0; i <= db; ++i) {
                long idx = d - db + i;
                r[static_cast<std::size_t>(idx)] =
                    ((r[static_cast<std::size_t>(idx)] - scale * b[static_cast<std::size_t>(i)]) % p + p) % p;
            }
        }
        r.resize(static_cast<std::size_t>(db));
        ptrim(r);
        ptrim(q);
        // s_{k+1} = s_{k-1} - q*s_k
        PVec qs;
        if (!q.empty() && !s1.empty()) {
            qs.assign(q.size() + s1.size() - 1, 0);
            for (std::size_t i = 0; i < q.size(); ++i)
                for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] = (qs[i + j] + q[i] * s1[j]) % p;
        }
        PVec s2(std::max(s0.size(), qs.size()), 0);
        for (std::size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (std::size_t i = 0; i < qs.size(); ++i) s2[i] = ((s2[i] - qs[i]) % p + p) % p;
        ptrim(s2);
        a = std::move(b);
        b = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // a = gcd (degree 0 since modulus is irreducible), s0 the cofactor of this
    if (a.size() != 1) throw DomainError("element not invertible (modulus not irreducible?)");
    long scale = mod_inverse(a[0], p);
    Fq r(F_, {});
    for (std::size_t i = 0; i < s0.size(); ++i) r.c_[i] = s0[i] * scale % p;
    return r;
}

Fq Fq::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Fq base = *this;
    Fq result = F_->one();
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

Fq Fq::frobenius() const {
    return pow(F_->p());
}

Fq Fq::pth_root() const {
    // Frobenius has order n on F_{p^n}
    Fq r = *this;
    for (int i = 0; i < F_->deg() - 1; ++i) r = r.frobenius();
    return r;
}

Fq Fq::sqrt_or_throw() const {
    if (is_zero()) return *this;
    if (F_->p() == 2) return pth_root();
    long q = F_->size();
    if (pow((q - 1) / 2).is_one()) {
        if (q % 4 == 3) return pow((q + 1) / 4);
        // small fields: scan
        for (long k = 0; k < q; ++k) {
            Fq cand = F_->element(k);
            if (cand * cand == *this) return cand;
        }
    }
    throw DomainError("element is not a square in F_q");
}

long Fq::to_int() const {
    for (int i = 1; i < F_->deg(); ++i)
        if (c_[static_cast<std::size_t>(i)] != 0)
            throw DomainError("element not in the prime field");
    return c_[0];
}

long Fq::enum_index() const {
    long idx = 0;
    for (int i = F_->deg() - 1; i >= 0; --i) idx = idx * F_->p() + c_[static_cast<std::size_t>(i)];
    return idx;
}

std::string Fq::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = F_->deg() - 1; i >= 1; --i) {
        long v = c_[static_cast<std::size_t>(i)];
        if (v == 0) continue;
        if (!first) os << "+";
        if (v != 1) os << v << "*";
        os << "g";
        if (i > 1) os << "^" << i;
        first = false;
    }
    if (c_[0] != 0 || first) {
        if (!first) os << "+";
        os << c_[0];
    }
    return os.str();
}

Embedding::Embedding(const Field& src, const Field& dst) : src_(src), dst_(dst) {
    if (dst->p() != src->p() || dst->deg() % src->deg() != 0)
        throw DomainError("no embedding between these fields");
    if (src->deg() == 1) {
        gen_image_ = dst->one();
        return;
    }
    // least root of the source modulus in the target field
    long q = dst->size();
    bool found = false;
    for (long k = 0; k < q; ++k) {
        Fq x = dst->element(k);
        Fq acc = dst->zero();
        for (int i = static_cast<int>(src->modulus().size()) - 1; i >= 0; --i)
            acc = acc * x + dst->from_int(src->modulus()[static_cast<std::size_t>(i)]);
        if (acc.is_zero()) {
            gen_image_ = x;
            found = true;
            break;
        }
    }
    if (!found) throw DomainError("source modulus has no root in target field");
}

Fq Embedding::apply(const Fq& a) const {
    Fq acc = dst_->zero();
    for (int i = src_->deg() - 1; i >= 0; --i)
        acc = acc * gen_image_ + dst_->from_int(a.coeff(i));
    return acc;
}

}  // namespace neron

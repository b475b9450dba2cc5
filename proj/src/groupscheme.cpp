#include "neron/groupscheme.hpp"

#include <sstream>

namespace neron {

std::shared_ptr<const TruncRing> TruncRing::make(const Field& F, int vars) {
    if (vars < 1 || vars > 3) throw DomainError("truncated ring supports 1..3 variables");
    if (F->p() > 7) throw DomainError("truncated ring supports p <= 7");
    long size = 1;
    for (int i = 0; i < vars; ++i) size *= F->p();
    return std::shared_ptr<const TruncRing>(new TruncRing(F, vars, size));
}

TruncElem::TruncElem(TruncRingPtr R) : R_(std::move(R)) {
    c_.assign(static_cast<std::size_t>(R_->monomials()), R_->base()->zero());
}

TruncElem TruncElem::zero(const TruncRingPtr& R) {
    return TruncElem(R);
}

TruncElem TruncElem::one(const TruncRingPtr& R) {
    return constant(R, R->base()->one());
}

TruncElem TruncElem::constant(const TruncRingPtr& R, const Fq& c) {
    TruncElem e(R);
    e.c_[0] = c;
    return e;
}

TruncElem TruncElem::gen(const TruncRingPtr& R, int i) {
    if (i < 0 || i >= R->vars()) throw DomainError("generator index out of range");
    TruncElem e(R);
    long idx = 1;
    for (int j = 0; j < i; ++j) idx *= R->p();
    e.c_[static_cast<std::size_t>(idx)] = R->base()->one();
    return e;
}

bool TruncElem::is_zero() const {
    for (const Fq& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

TruncElem TruncElem::operator+(const TruncElem& o) const {
    TruncElem r(R_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

TruncElem TruncElem::operator-(const TruncElem& o) const {
    TruncElem r(R_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

TruncElem TruncElem::operator-() const {
    TruncElem r(R_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

TruncElem TruncElem::mul_scalar(const Fq& s) const {
    TruncElem r(R_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * s;
    return r;
}

TruncElem TruncElem::operator*(const TruncElem& o) const {
    TruncElem r(R_);
    long p = R_->p();
    int k = R_->vars();
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            // add exponent tuples; drop the product when any exponent >= p
            long a = static_cast<long>(i), b = static_cast<long>(j), idx = 0, radix = 1;
            bool dead = false;
            for (int v = 0; v < k; ++v) {
                long e = a % p + b % p;
                if (e >= p) {
                    dead = true;
                    break;
                }
                idx += e * radix;
                radix *= p;
                a /= p;
                b /= p;
            }
            if (!dead) r.c_[static_cast<std::size_t>(idx)] += c_[i] * o.c_[j];
        }
    }
    return r;
}

TruncElem TruncElem::pow(long e) const {
    if (e < 0) throw DomainError("negative power in truncated ring");
    TruncElem base = *this;
    TruncElem result = one(R_);
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

bool TruncElem::operator==(const TruncElem& o) const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

std::string TruncElem::str() const {
    std::ostringstream os;
    bool first = true;
    long p = R_->p();
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i].str();
        long rest = static_cast<long>(i);
        for (int v = 0; v < R_->vars(); ++v) {
            long e = rest % p;
            rest /= p;
            if (e == 0) continue;
            os << "*x" << (v + 1);
            if (e > 1) os << "^" << e;
        }
    }
    if (first) return "0";
    return os.str();
}

namespace {

Fq factorial(const Field& F, long n) {
    Fq r = F->one();
    for (long i = 2; i <= n; ++i) r = r * F->from_int(i);
    return r;
}

}  // namespace

TruncElem oort_tate_add(const TruncElem& a, const TruncElem& b, const Fq& tau) {
    if (tau.is_zero()) throw DomainError("twist parameter tau must be nonzero");
    if (!a.is_p_nilpotent() || !b.is_p_nilpotent())
        throw DomainError("star composition requires a^p = b^p = 0");
    const TruncRingPtr& R = a.ring();
    const Field& F = R->base();
    long p = R->p();
    TruncElem sum = a + b;
    if (p == 2) {
        // single correction term a*b / (1! 1!)
        return sum + (a * b).mul_scalar(tau.inverse());
    }
    TruncElem corr = TruncElem::zero(R);
    std::vector<TruncElem> apow{TruncElem::one(R)}, bpow{TruncElem::one(R)};
    for (long i = 1; i <= p - 1; ++i) {
        apow.push_back(apow.back() * a);
        bpow.push_back(bpow.back() * b);
    }
    for (long i = 1; i <= p - 1; ++i) {
        Fq coef = (factorial(F, i) * factorial(F, p - i)).inverse();
        corr = corr + (apow[static_cast<std::size_t>(i)] *
                       bpow[static_cast<std::size_t>(p - i)])
                          .mul_scalar(coef);
    }
    return sum + corr.mul_scalar(tau.inverse());
}

TruncElem truncated_exp(const TruncElem& a) {
    if (!a.is_p_nilpotent()) throw DomainError("truncated exponential requires a^p = 0");
    const TruncRingPtr& R = a.ring();
    const Field& F = R->base();
    long p = R->p();
    TruncElem r = TruncElem::one(R);
    TruncElem apow = TruncElem::one(R);
    for (long i = 1; i <= p - 1; ++i) {
        apow = apow * a;
        r = r + apow.mul_scalar(factorial(F, i).inverse());
    }
    return r;
}

TruncElem oort_tate_multiple(const TruncElem& a, long n, const Fq& tau) {
    TruncElem acc = TruncElem::zero(a.ring());
    for (long i = 0; i < n; ++i) acc = oort_tate_add(acc, a, tau);
    return acc;
}

RatFunc twisted_lie_power(const RatFunc& tau, const RatFunc& coeff) {
    if (tau.is_zero()) throw DomainError("twist parameter tau must be nonzero");
    return coeff.pow(coeff.field()->p()) / tau;
}

std::vector<Poly> irreducible_polys_upto(const Field& F, int degree_bound) {
    if (degree_bound < 1) throw DomainError("degree bound must be >= 1");
    long q = F->size();
    std::vector<Poly> irr;
    for (int d = 1; d <= degree_bound; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= q;
        for (long k = 0; k < count; ++k) {
            std::vector<Fq> c;
            long v = k;
            for (int i = 0; i < d; ++i) {
                c.push_back(F->element(v % q));
                v /= q;
            }
            c.push_back(F->one());
            Poly cand = Poly::from_coeffs(F, std::move(c));
            bool composite = false;
            for (const Poly& g : irr) {
                if (2 * g.degree() > d) break;
                if (cand.divisible_by(g)) {
                    composite = true;
                    break;
                }
            }
            if (!composite) irr.push_back(cand);
        }
    }
    return irr;
}

std::vector<Fq> roots_of_unity(const Field& F, long order) {
    if (order < 1) throw DomainError("order must be >= 1");
    if ((F->size() - 1) % order != 0)
        throw DomainError("required roots of unity are absent from the field");
    std::vector<Fq> mu;
    long q = F->size();
    for (long k = 1; k < q; ++k) {
        Fq x = F->element(k);
        if (x.pow(order).is_one()) mu.push_back(x);
    }
    return mu;
}

namespace {

// h(0) = 1 normalization; requires nonzero constant term
Poly normalize_constant(const Poly& h) {
    return h.mul_scalar(h.coeff(0).inverse());
}

// h(zeta X), renormalized to constant term 1
Poly act(const Poly& h, const Fq& zeta) {
    std::vector<Fq> c;
    Fq zp = h.field()->one();
    for (int i = 0; i <= h.degree(); ++i) {
        c.push_back(h.coeff(i) * zp);
        zp = zp * zeta;
    }
    return Poly::from_coeffs(h.field(), std::move(c));
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        long ia = a.coeff(i).enum_index(), ib = b.coeff(i).enum_index();
        if (ia != ib) return ia < ib;
    }
    return false;
}

}  // namespace

bool orbit_fixed_by_nontrivial(const Poly& h, const std::vector<Fq>& mu) {
    for (const Fq& z : mu) {
        if (z.is_one()) continue;
        if (act(h, z) == h) return true;
    }
    return false;
}

bool in_proper_power_subring(const Poly& h, long group_order) {
    for (long i = 2; i <= group_order; ++i) {
        if (group_order % i != 0) continue;
        bool contained = true;
        for (int d = 0; d <= h.degree(); ++d)
            if (!h.coeff(d).is_zero() && d % i != 0) contained = false;
        if (contained) return true;
    }
    return false;
}

long h1_free_orbit_count(long p, const Field& F, int degree_bound) {
    std::vector<Fq> mu = roots_of_unity(F, p - 1);
    std::vector<Poly> irr = irreducible_polys_upto(F, degree_bound);
    std::vector<Poly> reps;
    long free_orbits = 0;
    for (const Poly& h : irr) {
        if (h.coeff(0).is_zero()) {
            // the prime X is fixed by every zeta up to scalar; its orbit is
            // free only for the trivial group
            if (p == 2) ++free_orbits;
            continue;
        }
        Poly hn = normalize_constant(h);
        if (orbit_fixed_by_nontrivial(hn, mu)) continue;
        // canonical representative: least element of the orbit
        Poly rep = hn;
        for (const Fq& z : mu) {
            Poly img = act(hn, z);
            if (poly_less(img, rep)) rep = img;
        }
        bool seen = false;
        for (const Poly& r : reps)
            if (r == rep) seen = true;
        if (!seen) {
            reps.push_back(rep);
            ++free_orbits;
        }
    }
    return free_orbits;
}

}  // namespace neron

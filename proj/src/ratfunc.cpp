#include "neron/ratfunc.hpp"

#include <sstream>

namespace neron {

std::string Place::str() const {
    if (infinite) return "inf";
    return center.str();
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::one(num_.field());
        return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divrem(g).first;
        den_ = den_.divrem(g).first;
    }
    Fq scale = den_.lead().inverse();
    num_ = num_.mul_scalar(scale);
    den_ = den_.mul_scalar(scale);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw DomainError("division by zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    return RatFunc(num_.pow(e), den_.pow(e));
}

std::string RatFunc::str(const std::string& var) const {
    if (den_.is_constant()) {
        if (num_.is_constant() || num_.coeffs().size() == 1 ||
            (num_.degree() >= 0 && num_.str(var).find('+') == std::string::npos))
            return num_.str(var);
        return "(" + num_.str(var) + ")";
    }
    std::ostringstream os;
    std::string ns = num_.str(var), ds = den_.str(var);
    if (ns.find('+') != std::string::npos || ns.find('*') != std::string::npos)
        os << "(" << ns << ")";
    else
        os << ns;
    os << "/";
    if (ds.find('+') != std::string::npos || ds.find('*') != std::string::npos ||
        ds.find('^') != std::string::npos)
        os << "(" << ds << ")";
    else
        os << ds;
    return os.str();
}

long valuation(const RatFunc& f, const Place& v) {
    if (f.is_zero()) return kValInf;
    if (v.infinite) return f.den().degree() - f.num().degree();
    return f.num().root_multiplicity(v.center) - f.den().root_multiplicity(v.center);
}

Fq residue_at(const RatFunc& f, const Place& v) {
    const Field& F = f.field();
    if (f.is_zero()) return F->zero();
    long ord = valuation(f, v);
    if (ord < 0) throw PoleError("rational function has a pole at the place");
    if (ord > 0) return F->zero();
    if (v.infinite) return f.num().lead() / f.den().lead();
    Poly num = f.num(), den = f.den();
    int m = num.root_multiplicity(v.center);
    if (m > 0) {
        Poly lin = Poly::from_coeffs(F, {-v.center, F->one()});
        for (int i = 0; i < m; ++i) {
            num = num.divrem(lin).first;
            den = den.divrem(lin).first;
        }
    }
    return num.eval(v.center) / den.eval(v.center);
}

namespace {

// f(g) for a polynomial f, by Horner over the rational function field
RatFunc compose_poly(const Poly& f, const RatFunc& g) {
    const Field& F = g.field();
    RatFunc acc = RatFunc::zero(F);
    for (int i = f.degree(); i >= 0; --i)
        acc = acc * g + RatFunc::constant(f.coeff(i));
    return acc;
}

}  // namespace

RatFunc substitute(const RatFunc& f, const RatFunc& g) {
    if (g.is_constant()) throw DomainError("substitution by a constant function");
    return compose_poly(f.num(), g) / compose_poly(f.den(), g);
}

RatFunc lift(const RatFunc& f, const Embedding& e) {
    return RatFunc(lift(f.num(), e), lift(f.den(), e));
}

Place lift(const Place& v, const Embedding& e) {
    if (v.infinite) return Place::infinity(e.dst());
    return Place::at(e.apply(v.center));
}

namespace {

bool poly_pth_root(const Poly& f, Poly* out) {
    const Field& F = f.field();
    long p = F->p();
    if (f.is_zero()) {
        if (out) *out = f;
        return true;
    }
    if (f.degree() % p != 0) return false;
    std::vector<Fq> c(static_cast<std::size_t>(f.degree() / p) + 1, F->zero());
    for (int i = 0; i <= f.degree(); ++i) {
        if (i % p != 0) {
            if (!f.coeff(i).is_zero()) return false;
        } else {
            c[static_cast<std::size_t>(i / p)] = f.coeff(i).pth_root();
        }
    }
    if (out) *out = Poly::from_coeffs(F, std::move(c));
    return true;
}

}  // namespace

bool is_pth_power(const RatFunc& f) {
    return poly_pth_root(f.num(), nullptr) && poly_pth_root(f.den(), nullptr);
}

RatFunc pth_root(const RatFunc& f) {
    Poly n(f.field()), d(f.field());
    if (!poly_pth_root(f.num(), &n) || !poly_pth_root(f.den(), &d))
        throw DomainError("rational function is not a p-th power");
    return RatFunc(n, d);
}

}  // namespace neron

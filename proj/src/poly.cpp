#include "neron/poly.hpp"

#include <algorithm>
#include <sstream>

namespace neron {

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Fq& c) {
    Poly r(c.field());
    r.c_ = {c};
    r.normalize();
    return r;
}

Poly Poly::x(const Field& F) {
    Poly r(F);
    r.c_ = {F->zero(), F->one()};
    return r;
}

Poly Poly::from_coeffs(const Field& F, std::vector<Fq> coeffs) {
    Poly r(F);
    r.c_ = std::move(coeffs);
    r.normalize();
    return r;
}

Poly Poly::monomial(const Fq& c, int k) {
    Poly r(c.field());
    if (c.is_zero()) return r;
    r.c_.assign(static_cast<std::size_t>(k) + 1, c.field()->zero());
    r.c_.back() = c;
    return r;
}

Fq Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return F_->zero();
    return c_[static_cast<std::size_t>(i)];
}

Fq Poly::lead() const {
    if (is_zero()) throw DomainError("zero polynomial has no leading coefficient");
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    Poly r(F_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), F_->zero());
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
        if (i < c_.size() && i < o.c_.size())
            r.c_[i] = c_[i] + o.c_[i];
        else if (i < c_.size())
            r.c_[i] = c_[i];
        else
            r.c_[i] = o.c_[i];
    }
    r.normalize();
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    return *this + (-o);
}

Poly Poly::operator-() const {
    Poly r(F_);
    r.c_.reserve(c_.size());
    for (const Fq& a : c_) r.c_.push_back(-a);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r(F_);
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, F_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        const long* a = c_[i].raw();
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            F_->raw_mul_add(r.c_[i + j].raw(), a, o.c_[j].raw());
        }
    }
    r.normalize();
    return r;
}

Poly Poly::mul_scalar(const Fq& c) const {
    Poly r(F_);
    if (c.is_zero()) return r;
    r.c_.reserve(c_.size());
    for (const Fq& a : c_) r.c_.push_back(a * c);
    r.normalize();
    return r;
}

Poly Poly::pow(long e) const {
    if (e < 0) throw DomainError("negative polynomial power");
    Poly base = *this;
    Poly result = Poly::one(F_);
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    Poly q(F_), r = *this;
    if (r.degree() < d.degree()) return {q, r};
    q.c_.assign(static_cast<std::size_t>(r.degree() - d.degree()) + 1, F_->zero());
    Fq inv_lead = d.lead().inverse();
    for (int k = r.degree(); k >= d.degree(); --k) {
        Fq c = r.coeff(k);
        if (c.is_zero()) continue;
        Fq scale = c * inv_lead;
        q.c_[static_cast<std::size_t>(k - d.degree())] = scale;
        for (int i = 0; i <= d.degree(); ++i)
            r.c_[static_cast<std::size_t>(k - d.degree() + i)] -= scale * d.coeff(i);
    }
    q.normalize();
    r.normalize();
    return {q, r};
}

bool Poly::divisible_by(const Poly& d) const {
    return divrem(d).second.is_zero();
}

Poly Poly::derivative() const {
    Poly r(F_);
    if (degree() < 1) return r;
    r.c_.reserve(c_.size() - 1);
    for (int i = 1; i <= degree(); ++i) r.c_.push_back(c_[static_cast<std::size_t>(i)] * F_->from_int(i));
    r.normalize();
    return r;
}

Fq Poly::eval(const Fq& x) const {
    Fq acc = F_->zero();
    for (int i = degree(); i >= 0; --i) acc = acc * x + c_[static_cast<std::size_t>(i)];
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return mul_scalar(lead().inverse());
}

Poly Poly::shift(int k) const {
    if (is_zero()) return *this;
    Poly r(F_);
    if (k >= 0) {
        r.c_.assign(static_cast<std::size_t>(k), F_->zero());
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
        return r;
    }
    int drop = -k;
    for (int i = 0; i < drop && i < static_cast<int>(c_.size()); ++i)
        if (!c_[static_cast<std::size_t>(i)].is_zero())
            throw DomainError("polynomial not divisible by t^k");
    if (drop >= static_cast<int>(c_.size())) return r;
    r.c_.assign(c_.begin() + drop, c_.end());
    return r;
}

int Poly::root_multiplicity(const Fq& c) const {
    if (is_zero()) throw DomainError("zero polynomial: root multiplicity undefined");
    Poly lin = Poly::from_coeffs(F_, {-c, F_->one()});
    Poly rest = *this;
    int m = 0;
    while (true) {
        auto [q, r] = rest.divrem(lin);
        if (!r.is_zero()) return m;
        ++m;
        rest = q;
        if (rest.is_zero()) return m;
    }
}

Poly Poly::translate(const Fq& c) const {
    // Horner: f(x+c) = sum over coefficients re-expanded
    Poly acc(F_);
    Poly lin = Poly::from_coeffs(F_, {c, F_->one()});
    for (int i = degree(); i >= 0; --i) acc = acc * lin + Poly::constant(c_[static_cast<std::size_t>(i)]);
    return acc;
}

Poly Poly::frobenius() const {
    Poly r(F_);
    if (is_zero()) return r;
    long p = F_->p();
    r.c_.assign(static_cast<std::size_t>(degree()) * static_cast<std::size_t>(p) + 1, F_->zero());
    for (int i = 0; i <= degree(); ++i)
        r.c_[static_cast<std::size_t>(i) * static_cast<std::size_t>(p)] =
            c_[static_cast<std::size_t>(i)].pow(p);
    r.normalize();
    return r;
}

bool Poly::equal(const Poly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!(c_[i] == o.c_[i])) return false;
    return true;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    bool ext = F_->deg() > 1;
    for (int i = degree(); i >= 0; --i) {
        Fq a = c_[static_cast<std::size_t>(i)];
        if (a.is_zero()) continue;
        if (!first) os << "+";
        first = false;
        std::string cs = a.str();
        bool needs_coeff = !(a.is_one() && i > 0);
        if (needs_coeff) {
            if (ext && cs.find('+') != std::string::npos)
                os << "(" << cs << ")";
            else
                os << cs;
            if (i > 0) os << "*";
        }
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly u = a, v = b;
    while (!v.is_zero()) {
        Poly r = u.divrem(v).second;
        u = std::move(v);
        v = std::move(r);
    }
    return u.monic();
}

std::vector<std::pair<Fq, int>> roots_in_field(const Poly& h) {
    if (h.is_zero()) throw DomainError("zero polynomial has every root");
    const Field& F = h.field();
    if (!F->size_fits() || F->size() > (1L << 22))
        throw CapExceededError("field too large for exhaustive root search");
    std::vector<std::pair<Fq, int>> out;
    Poly rest = h;
    long q = F->size();
    for (long k = 0; k < q && rest.degree() > 0; ++k) {
        Fq c = F->element(k);
        if (!rest.eval(c).is_zero()) continue;
        int m = rest.root_multiplicity(c);
        out.emplace_back(c, m);
        Poly lin = Poly::from_coeffs(F, {-c, F->one()});
        for (int i = 0; i < m; ++i) rest = rest.divrem(lin).first;
    }
    return out;
}

Poly lift(const Poly& f, const Embedding& e) {
    std::vector<Fq> c;
    c.reserve(static_cast<std::size_t>(f.degree() + 1));
    for (int i = 0; i <= f.degree(); ++i) c.push_back(e.apply(f.coeff(i)));
    return Poly::from_coeffs(e.dst(), std::move(c));
}

Field extend_for_splitting(const Poly& h, const Field& F, int cap) {
    if (h.is_zero()) throw DomainError("cannot split the zero polynomial");
    if (cap < 1) throw DomainError("extension cap must be >= 1");
    for (int m = 1; m <= cap; ++m) {
        int total = F->deg() * m;
        if (total > kMaxFieldDeg)
            throw CapExceededError("required extension exceeds supported field degree", total);
        Field Fm = m == 1 ? F : FqField::extension(F->p(), total);
        Poly hm = m == 1 ? h : lift(h, Embedding(F, Fm));
        auto roots = roots_in_field(hm);
        int count = 0;
        for (auto& [r, mult] : roots) count += mult;
        if (count == hm.degree()) return Fm;
    }
    throw CapExceededError("polynomial does not split within the extension cap");
}

}  // namespace neron

// Swan-conductor arithmetic on explicit higher-ramification filtrations:
// delta(V) = sum_{i>=1} dim(V/V^{G_i}) / [G:G_i] on the tautological module
// V = F_l^2, the Hasse-Herbrand function, and the SL(2,F3) / GL(2,F2) data.

#ifndef NERON_RAMIFY_HPP
#define NERON_RAMIFY_HPP

#include <array>
#include <string>
#include <vector>

#include "neron/fq.hpp"

namespace neron {

// exact rational numbers small enough for filtration arithmetic
struct Rat {
    long num = 0;
    long den = 1;

    Rat() = default;
    Rat(long n) : num(n), den(1) {}
    Rat(long n, long d);

    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;
    Rat operator*(const Rat& o) const;
    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const { return num * o.den < o.num * den; }
    bool operator<=(const Rat& o) const { return num * o.den <= o.num * den; }
    bool is_integer() const { return den == 1; }
    std::string str() const;
    static Rat parse(const std::string& s);
};

// a descending chain of ramification-group orders g_0 >= g_1 >= ... >= g_N,
// continued by 1; every g_i divides g_0
struct RamFiltration {
    std::vector<long> orders;

    explicit RamFiltration(std::vector<long> o);
    long g(std::size_t i) const {
        return i < orders.size() ? orders[i] : 1;
    }
    std::size_t length() const { return orders.size(); }
};

using Mat2 = std::array<long, 4>;  // row-major 2x2 over F_l

// a finite subgroup of GL(2,F_l) with an assigned higher-ramification
// filtration; `order` is the abstract group order (it may exceed the size of
// the matrix image, e.g. for C_3 x| C_{g/3} acting through GL(2,F_2))
struct MatrixGroup {
    int l = 3;
    std::vector<Mat2> elements;
    long order = 0;
    struct Level {
        long order;                // abstract |G_i|
        std::vector<Mat2> image;   // image of G_i in GL(2,F_l)
    };
    std::vector<Level> levels;  // G_1, G_2, ...; trivial afterwards
};

// closure of a generating set under multiplication mod l
std::vector<Mat2> closure(int l, std::vector<Mat2> gens);
// dimension of the common fixed space of S acting on F_l^2
int fixed_space_dim(int l, const std::vector<Mat2>& S);

std::vector<Mat2> sl2f3_elements();
std::vector<Mat2> gl2f2_elements();
// subgroup of SL(2,F3) by name: SL2F3, C6, Q, C4, C3, C2, 1
std::vector<Mat2> named_subgroup_sl2f3(const std::string& name);

// SL(2,F3)-type filtration with G_1..G_s = Q, G_{s+1}..G_{3s} = C_2 and
// abstract order g = 24 s
MatrixGroup sl2f3_wild_group(int s);
// GL(2,F2)-type filtration with G_1..G_m = C_3, m = g/6, abstract order g
MatrixGroup gl2f2_wild_group(long g);

// exact Swan conductor of the tautological module; error if non-integral
long swan_delta(const MatrixGroup& G);
// delta for the subgroup H with the intersected filtration G'_i = H n G_i
long subgroup_swan(const MatrixGroup& G, const std::vector<Mat2>& H);

// phi(x) = sum_{i=1..n} 1/[G0:Gi] + (x-n)/[G0:G_{n+1}], n = floor(x)
Rat hasse_herbrand_phi(const RamFiltration& fil, const Rat& x);

// behavior of delta under base change: d*delta for gcd(d,p)=1, delta when
// purely inseparable
long scale_delta(long delta, long d, long p, bool inseparable);

// the C_2-filtration of a quadratic Artin-Schreier extension with break at
// 2n-1: orders (2,...,2) with 2n entries
RamFiltration artin_schreier_quadratic_breaks(long n);

}  // namespace neron

#endif

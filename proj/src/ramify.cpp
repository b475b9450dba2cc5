#include "neron/ramify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace neron {

Rat::Rat(long n, long d) : num(n), den(d) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rat Rat::operator+(const Rat& o) const {
    return Rat(num * o.den + o.num * den, den * o.den);
}

Rat Rat::operator-(const Rat& o) const {
    return Rat(num * o.den - o.num * den, den * o.den);
}

Rat Rat::operator*(const Rat& o) const {
    return Rat(num * o.num, den * o.den);
}

std::string Rat::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rat Rat::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(std::stol(s));
    return Rat(std::stol(s.substr(0, slash)), std::stol(s.substr(slash + 1)));
}

RamFiltration::RamFiltration(std::vector<long> o) : orders(std::move(o)) {
    if (orders.empty()) throw DomainError("filtration needs at least g_0");
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (orders[i] < 1) throw DomainError("filtration orders must be >= 1");
        if (i > 0 && orders[i] > orders[i - 1])
            throw DomainError("filtration orders must be non-increasing");
        if (orders[0] % orders[i] != 0)
            throw DomainError("each filtration order must divide g_0");
    }
}

namespace {

Mat2 mat_mul(int l, const Mat2& a, const Mat2& b) {
    auto m = [&](long x) { return ((x % l) + l) % l; };
    return Mat2{m(a[0] * b[0] + a[1] * b[2]), m(a[0] * b[1] + a[1] * b[3]),
                m(a[2] * b[0] + a[3] * b[2]), m(a[2] * b[1] + a[3] * b[3])};
}

bool contains(const std::vector<Mat2>& set, const Mat2& m) {
    return std::find(set.begin(), set.end(), m) != set.end();
}

std::vector<Mat2> intersect(const std::vector<Mat2>& a, const std::vector<Mat2>& b) {
    std::vector<Mat2> out;
    for (const Mat2& m : a)
        if (contains(b, m)) out.push_back(m);
    return out;
}

}  // namespace

std::vector<Mat2> closure(int l, std::vector<Mat2> gens) {
    std::vector<Mat2> set{Mat2{1, 0, 0, 1}};
    for (Mat2& g : gens)
        for (long& x : g) x = ((x % l) + l) % l;
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t i = 0; i < set.size(); ++i) {
            for (const Mat2& g : gens) {
                Mat2 m = mat_mul(l, set[i], g);
                if (!contains(set, m)) {
                    set.push_back(m);
                    grew = true;
                }
            }
        }
        if (set.size() > 48) throw DomainError("generated group is unexpectedly large");
    }
    return set;
}

int fixed_space_dim(int l, const std::vector<Mat2>& S) {
    int count = 0;
    for (long x = 0; x < l; ++x) {
        for (long y = 0; y < l; ++y) {
            bool fixed = true;
            for (const Mat2& m : S) {
                long nx = ((m[0] * x + m[1] * y) % l + l) % l;
                long ny = ((m[2] * x + m[3] * y) % l + l) % l;
                if (nx != x || ny != y) {
                    fixed = false;
                    break;
                }
            }
            if (fixed) ++count;
        }
    }
    int dim = 0;
    while (count > 1) {
        count /= l;
        ++dim;
    }
    return dim;
}

std::vector<Mat2> sl2f3_elements() {
    std::vector<Mat2> out;
    for (long a = 0; a < 3; ++a)
        for (long b = 0; b < 3; ++b)
            for (long c = 0; c < 3; ++c)
                for (long d = 0; d < 3; ++d)
                    if (((a * d - b * c) % 3 + 3) % 3 == 1) out.push_back(Mat2{a, b, c, d});
    return out;
}

std::vector<Mat2> gl2f2_elements() {
    std::vector<Mat2> out;
    for (long a = 0; a < 2; ++a)
        for (long b = 0; b < 2; ++b)
            for (long c = 0; c < 2; ++c)
                for (long d = 0; d < 2; ++d)
                    if (((a * d - b * c) % 2 + 2) % 2 == 1) out.push_back(Mat2{a, b, c, d});
    return out;
}

std::vector<Mat2> named_subgroup_sl2f3(const std::string& name) {
    const Mat2 i{0, 2, 1, 0};    // order 4
    const Mat2 j{1, 1, 1, 2};    // order 4, i*j = k
    const Mat2 m1{2, 0, 0, 2};   // -1
    const Mat2 w{1, 1, 0, 1};    // order 3
    if (name == "SL2F3" || name == "full") return sl2f3_elements();
    if (name == "Q") return closure(3, {i, j});
    if (name == "C6") return closure(3, {mat_mul(3, m1, w)});
    if (name == "C4") return closure(3, {i});
    if (name == "C3") return closure(3, {w});
    if (name == "C2") return closure(3, {m1});
    if (name == "1") return {Mat2{1, 0, 0, 1}};
    throw DomainError("unknown subgroup name: " + name);
}

MatrixGroup sl2f3_wild_group(int s) {
    if (s < 1) throw DomainError("filtration parameter s must be >= 1");
    MatrixGroup G;
    G.l = 3;
    G.elements = sl2f3_elements();
    G.order = 24L * s;
    std::vector<Mat2> Q = named_subgroup_sl2f3("Q");
    std::vector<Mat2> C2 = named_subgroup_sl2f3("C2");
    for (int i = 0; i < s; ++i) G.levels.push_back({8, Q});
    for (int i = 0; i < 2 * s; ++i) G.levels.push_back({2, C2});
    return G;
}

MatrixGroup gl2f2_wild_group(long g) {
    if (g % 6 != 0) throw DomainError("group order must be divisible by 6");
    MatrixGroup G;
    G.l = 2;
    G.elements = gl2f2_elements();
    G.order = g;
    std::vector<Mat2> C3 = closure(2, {Mat2{0, 1, 1, 1}});
    for (long i = 0; i < g / 6; ++i) G.levels.push_back({3, C3});
    return G;
}

long swan_delta(const MatrixGroup& G) {
    Rat sum(0);
    for (const auto& level : G.levels) {
        int fixed = fixed_space_dim(G.l, level.image);
        int codim = 2 - fixed;
        // 1/[G:G_i] * dim V/V^{G_i}
        sum = sum + Rat(level.order * codim, G.order);
    }
    if (!sum.is_integer())
        throw DomainError("Swan conductor is not an integer; inconsistent filtration");
    return sum.num;
}

long subgroup_swan(const MatrixGroup& G, const std::vector<Mat2>& H) {
    if (static_cast<long>(G.elements.size()) != G.order)
        throw DomainError("subgroup Swan conductor needs a faithful matrix group");
    for (const Mat2& h : H)
        if (!contains(G.elements, h)) throw DomainError("H is not a subgroup of G");
    MatrixGroup Gp;
    Gp.l = G.l;
    Gp.elements = H;
    Gp.order = static_cast<long>(H.size());
    for (const auto& level : G.levels) {
        std::vector<Mat2> inter = intersect(H, level.image);
        Gp.levels.push_back({static_cast<long>(inter.size()), inter});
    }
    return swan_delta(Gp);
}

Rat hasse_herbrand_phi(const RamFiltration& fil, const Rat& x) {
    if (x.num < 0) throw DomainError("phi is defined for x >= 0");
    long n = x.num / x.den;  // floor for non-negative x
    Rat sum(0);
    for (long i = 1; i <= n; ++i) sum = sum + Rat(fil.g(static_cast<std::size_t>(i)), fil.g(0));
    sum = sum + (x - Rat(n)) * Rat(fil.g(static_cast<std::size_t>(n) + 1), fil.g(0));
    return sum;
}

long scale_delta(long delta, long d, long p, bool inseparable) {
    if (delta < 0 || d < 1) throw DomainError("invalid delta or degree");
    if (inseparable) return delta;
    if (d % p == 0)
        throw DomainError("degree divisible by p: the tame scaling rule does not apply");
    return d * delta;
}

RamFiltration artin_schreier_quadratic_breaks(long n) {
    if (n < 1) throw DomainError("break parameter must be >= 1");
    return RamFiltration(std::vector<long>(static_cast<std::size_t>(2 * n), 2));
}

}  // namespace neron

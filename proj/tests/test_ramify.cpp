#include <doctest.h>

#include "neron/ramify.hpp"

using namespace neron;

TEST_CASE("matrix group construction") {
    CHECK(sl2f3_elements().size() == 24);
    CHECK(gl2f2_elements().size() == 6);
    CHECK(named_subgroup_sl2f3("Q").size() == 8);
    CHECK(named_subgroup_sl2f3("C6").size() == 6);
    CHECK(named_subgroup_sl2f3("C4").size() == 4);
    CHECK(named_subgroup_sl2f3("C3").size() == 3);
    CHECK(named_subgroup_sl2f3("C2").size() == 2);
    CHECK(named_subgroup_sl2f3("1").size() == 1);
    CHECK_THROWS_AS((void)named_subgroup_sl2f3("C8"), DomainError);
    // -1 fixes nothing, the trivial group fixes the plane
    CHECK(fixed_space_dim(3, named_subgroup_sl2f3("C2")) == 0);
    CHECK(fixed_space_dim(3, named_subgroup_sl2f3("1")) == 2);
    // an order-3 matrix in GL(2,F2) fixes only 0
    CHECK(fixed_space_dim(2, closure(2, {Mat2{0, 1, 1, 1}})) == 0);
}

TEST_CASE("swan delta of the wild filtrations") {
    // G_1 = Q, G_2 = G_3 = C_2 gives delta = 1, for every scale s
    for (int s : {1, 2, 3}) CHECK(swan_delta(sl2f3_wild_group(s)) == 1);
    // C_3 filtration of length g/6 gives delta = 1
    for (long g : {6L, 12L, 24L}) CHECK(swan_delta(gl2f2_wild_group(g)) == 1);
    // tame group: no levels, delta = 0
    MatrixGroup tame;
    tame.l = 3;
    tame.elements = named_subgroup_sl2f3("C3");
    tame.order = 3;
    CHECK(swan_delta(tame) == 0);
    // inconsistent filtration: non-integral sum is rejected
    MatrixGroup broken;
    broken.l = 3;
    broken.elements = sl2f3_elements();
    broken.order = 24;
    broken.levels = {{8, named_subgroup_sl2f3("Q")}};
    CHECK_THROWS_AS((void)swan_delta(broken), DomainError);
}

TEST_CASE("subgroup swan conductors") {
    MatrixGroup G = sl2f3_wild_group(1);
    CHECK(subgroup_swan(G, named_subgroup_sl2f3("SL2F3")) == 1);
    CHECK(subgroup_swan(G, named_subgroup_sl2f3("C6")) == 2);
    CHECK(subgroup_swan(G, named_subgroup_sl2f3("Q")) == 3);
    CHECK(subgroup_swan(G, named_subgroup_sl2f3("C4")) == 4);
    CHECK(subgroup_swan(G, named_subgroup_sl2f3("C3")) == 0);
    CHECK(subgroup_swan(G, named_subgroup_sl2f3("C2")) == 6);
    CHECK(subgroup_swan(G, named_subgroup_sl2f3("1")) == 0);
    // H must be contained in G
    CHECK_THROWS_AS((void)subgroup_swan(G, {Mat2{1, 1, 1, 1}}), DomainError);
}

TEST_CASE("hasse-herbrand function") {
    RamFiltration f1({24, 8, 2, 2});
    CHECK(hasse_herbrand_phi(f1, Rat(1)) == Rat(1, 3));
    CHECK(hasse_herbrand_phi(f1, Rat(0)) == Rat(0));
    RamFiltration f2({2, 2});
    CHECK(hasse_herbrand_phi(f2, Rat(2)) == Rat(3, 2));
    // piecewise-linear interpolation between integers
    CHECK(hasse_herbrand_phi(f1, Rat(3, 2)) ==
          hasse_herbrand_phi(f1, Rat(1)) + Rat(1, 2) * Rat(2, 24));
    CHECK_THROWS_AS((void)hasse_herbrand_phi(f1, Rat(-1)), DomainError);
    // filtration validation
    CHECK_THROWS_AS((void)RamFiltration({4, 8}), DomainError);
    CHECK_THROWS_AS((void)RamFiltration({6, 4}), DomainError);
}

TEST_CASE("delta scaling under base change") {
    CHECK(scale_delta(1, 5, 3, false) == 5);
    CHECK(scale_delta(2, 7, 3, false) == 14);
    CHECK(scale_delta(1, 2, 2, true) == 1);
    CHECK_THROWS_AS((void)scale_delta(1, 2, 2, false), DomainError);
    CHECK_THROWS_AS((void)scale_delta(1, 6, 3, false), DomainError);
}

TEST_CASE("artin-schreier quadratic breaks") {
    RamFiltration f1 = artin_schreier_quadratic_breaks(1);
    CHECK(f1.orders == std::vector<long>{2, 2});
    RamFiltration f2 = artin_schreier_quadratic_breaks(2);
    CHECK(f2.orders == std::vector<long>{2, 2, 2, 2});
    // the break at 2n-1 means the faithful character has Swan conductor 2n-1
    for (long n : {1L, 2L, 3L}) {
        RamFiltration f = artin_schreier_quadratic_breaks(n);
        long swan = 0;
        for (std::size_t i = 1; i < f.length(); ++i) swan += f.orders[i] / f.orders[0];
        CHECK(swan == 2 * n - 1);
    }
}

TEST_CASE("exact rationals") {
    CHECK(Rat(6, 4) == Rat(3, 2));
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK((Rat(3, 2) - Rat(1, 2)).is_integer());
    CHECK(Rat::parse("3/2") == Rat(3, 2));
    CHECK(Rat::parse("7") == Rat(7));
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK_THROWS_AS((void)Rat(1, 0), DomainError);
}

#include <doctest.h>

#include "quatgraph/ideal.hpp"

using namespace quatgraph;

namespace {

QuatOrder max33() { return maximal_order(QuaternionAlgebra(Rat(-3), Rat(-3))); }

}  // namespace

TEST_CASE("the three norm-2 left ideals") {
    QuatOrder d = max33();
    auto ideals = left_ideals_norm_p(d, 2);
    REQUIRE(ideals.size() == 3);
    for (const QuatIdeal& ideal : ideals) {
        CHECK(ideal.reduced_norm == 2);
        CHECK(ideal.left == d);
        CHECK(ideal.lattice.index_in(d.lattice()) == 4);  // index p^2
        CHECK(ideal.right.reduced_discriminant() == d.reduced_discriminant());
        // 2*D sits inside each ideal.
        for (const QuatElement& e : d.lattice().elements())
            CHECK(ideal.lattice.contains(Rat(2) * e));
        // Minimal vectors have norm exactly 2.
        GramForm g = norm_gram(ideal.lattice);
        CHECK(short_vectors(g, 1).empty());
        CHECK(!short_vectors(g, 2).empty());
    }
    CHECK(!(ideals[0].lattice == ideals[1].lattice));
    CHECK(!(ideals[0].lattice == ideals[2].lattice));
    CHECK(!(ideals[1].lattice == ideals[2].lattice));
}

TEST_CASE("norm-p ideals reject ramified primes") {
    CHECK_THROWS_AS(left_ideals_norm_p(max33(), 3), precondition_error);
}

TEST_CASE("connecting ideal of an order with itself") {
    QuatOrder d = max33();
    QuatIdeal c = connecting_ideal(d, d);
    CHECK(c.lattice == d.lattice());
    CHECK(c.reduced_norm == 1);
    auto unit = is_principal(c);
    REQUIRE(unit);
    CHECK(nrd(*unit) == 1);
}

TEST_CASE("connecting ideal to a neighbor") {
    QuatOrder d = max33();
    QuatIdeal first = left_ideals_norm_p(d, 2).front();
    QuatIdeal c = connecting_ideal(d, first.right);
    CHECK(c.left == d);
    CHECK(c.right == first.right);
    Rat content = c.lattice.coordinate_content(d.lattice());
    CHECK(ideal_norm(c.lattice.scaled(1 / content)) == 2);
}

TEST_CASE("left and right orders of a one-sided ideal") {
    QuatOrder d = max33();
    for (const QuatIdeal& ideal : left_ideals_norm_p(d, 2)) {
        CHECK(left_order(ideal.lattice) == d);
        CHECK(right_order(ideal.lattice) == ideal.right);
    }
}

TEST_CASE("connecting ideals between walk vertices keep their orders") {
    QuatOrder d = max33();
    std::vector<QuatOrder> reach{d};
    for (const QuatIdeal& i1 : left_ideals_norm_p(d, 2))
        for (QuatIdeal& i2 : left_ideals_norm_p(i1.right, 2)) reach.push_back(std::move(i2.right));
    for (size_t a = 0; a < reach.size(); a += 3)
        for (size_t b = 0; b < reach.size(); b += 4) {
            QuatIdeal c = connecting_ideal(reach[a], reach[b]);
            CHECK(c.left == reach[a]);
            CHECK(c.right == reach[b]);
        }
}

TEST_CASE("principality with scaling") {
    QuatOrder d = max33();
    QuatLattice scaled = d.lattice().scaled(Rat(7, 3));
    auto gen = principal_generator(d, scaled);
    REQUIRE(gen);
    // The generator reproduces the lattice exactly.
    std::vector<QuatElement> rows;
    for (int i = 0; i < 4; ++i) rows.push_back(d.element(i) * *gen);
    CHECK(QuatLattice::from_elements(d.algebra(), rows) == scaled);
}

TEST_CASE("all norm-2 ideals of the class-number-one genus are principal") {
    QuatOrder d = max33();
    for (const QuatIdeal& ideal : left_ideals_norm_p(d, 2)) {
        auto gen = is_principal(ideal);
        REQUIRE(gen);
        CHECK(nrd(*gen) == 2);
        std::vector<QuatElement> rows;
        for (int i = 0; i < 4; ++i) rows.push_back(d.element(i) * *gen);
        CHECK(QuatLattice::from_elements(d.algebra(), rows) == ideal.lattice);
    }
}

TEST_CASE("eichler orders") {
    QuatOrder d3 = max33();
    CHECK(eichler_order(d3, 1) == d3);
    QuatOrder e15 = eichler_order(d3, 5);
    CHECK(e15.reduced_discriminant() == 15);
    QuatOrder d7 = maximal_order(QuaternionAlgebra(Rat(-7), Rat(-1)));
    QuatOrder e21 = eichler_order(d7, 3);
    CHECK(e21.reduced_discriminant() == 21);
    CHECK_THROWS_AS(eichler_order(d3, 4), precondition_error);   // even
    CHECK_THROWS_AS(eichler_order(d3, 9), precondition_error);   // not squarefree
    CHECK_THROWS_AS(eichler_order(d3, 15), precondition_error);  // shares the discriminant
    CHECK_THROWS_AS(eichler_order(e15, 7), precondition_error);  // base not maximal
}

TEST_CASE("maximal superorder counts") {
    QuaternionAlgebra alg(Rat(-3), Rat(-3));
    QuatElement i = gen_i(alg), j = gen_j(alg);
    QuatOrder m = maximal_order(alg);
    CHECK(count_maximal_superorders(m).count == 1);

    QuatElement eta = Rat(1, 2) * (i - one(alg));
    QuatOrder zej = order_from_generators(alg, {eta, j});
    auto c1 = count_maximal_superorders(zej);
    CHECK(c1.finite);
    CHECK(c1.count == 1);

    QuatOrder zij = order_from_generators(alg, {i, j});
    auto c2 = count_maximal_superorders(zij);
    CHECK(c2.finite);
    CHECK(c2.count == 2);
}

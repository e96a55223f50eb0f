#include <doctest.h>

#include <random>

#include "quatgraph/quatalg.hpp"

using namespace quatgraph;

namespace {

QuatElement random_element(const QuaternionAlgebra& alg, std::mt19937_64& rng) {
    std::array<Rat, 4> c;
    for (int i = 0; i < 4; ++i) {
        c[i] = Rat(static_cast<long>(rng() % 13) - 6, 1 + static_cast<long>(rng() % 3));
        c[i].canonicalize();
    }
    return QuatElement(alg, c);
}

}  // namespace

TEST_CASE("defining relations") {
    QuaternionAlgebra alg(Rat(-3), Rat(-3));
    QuatElement i = gen_i(alg), j = gen_j(alg);
    CHECK(i * j == make_element(alg, 0, 0, 0, 1));
    CHECK(j * i == -(i * j));
    CHECK(i * i == make_element(alg, -3, 0, 0, 0));
    std::mt19937_64 rng(1);
    QuatElement x = random_element(alg, rng);
    CHECK(one(alg) * x == x);
    CHECK(x * one(alg) == x);
}

TEST_CASE("cubic unit in (-3,-3)") {
    QuaternionAlgebra alg(Rat(-3), Rat(-3));
    QuatElement omega = Rat(1, 2) * (gen_j(alg) - one(alg));
    CHECK(trd(omega) == -1);
    CHECK(nrd(omega) == 1);
    CHECK(omega * omega == -one(alg) - omega);
    CHECK(omega * omega * omega == one(alg));
}

TEST_CASE("trace, norm, conjugate") {
    QuaternionAlgebra alg(Rat(-1), Rat(-1));
    CHECK(nrd(one(alg)) == 1);
    CHECK(trd(one(alg)) == 2);
    QuatElement x = make_element(alg, 2, 3, -1, 5);
    CHECK(nrd(x) == 4 + 9 + 1 + 25);
    CHECK(conj(x) == make_element(alg, 2, -3, 1, -5));
    CHECK(x * conj(x) == nrd(x) * one(alg));
    CHECK(x * inverse(x) == one(alg));
}

TEST_CASE("norm is multiplicative and trace conjugation-invariant") {
    std::mt19937_64 rng(3);
    QuaternionAlgebra alg(Rat(-2), Rat(-5));
    for (int trial = 0; trial < 100; ++trial) {
        QuatElement x = random_element(alg, rng), y = random_element(alg, rng);
        CHECK(nrd(x * y) == nrd(x) * nrd(y));
        CHECK(trd(x) == trd(conj(x)));
        CHECK(trd(x * y) == trd(y * x));
    }
}

TEST_CASE("definite norms are positive") {
    std::mt19937_64 rng(9);
    QuaternionAlgebra alg(Rat(-7), Rat(-1));
    REQUIRE(is_definite(alg));
    for (int trial = 0; trial < 50; ++trial) {
        QuatElement x = random_element(alg, rng);
        if (!x.is_zero()) CHECK(nrd(x) > 0);
    }
}

TEST_CASE("mismatched algebras are rejected") {
    QuaternionAlgebra a(Rat(-1), Rat(-1)), b(Rat(-3), Rat(-3));
    CHECK_THROWS_AS(gen_i(a) * gen_i(b), precondition_error);
}

TEST_CASE("ramified places of standard examples") {
    QuaternionAlgebra split(Rat(1), Rat(5));
    CHECK(ramified_places(split).finite.empty());
    CHECK(!ramified_places(split).infinite);
    CHECK(!is_definite(split));

    QuaternionAlgebra a33(Rat(-3), Rat(-3));
    auto r33 = ramified_places(a33);
    CHECK(r33.finite == std::vector<Int>{3});
    CHECK(r33.infinite);
    CHECK(is_definite(a33));

    QuaternionAlgebra a11(Rat(-1), Rat(-1));
    auto r11 = ramified_places(a11);
    CHECK(r11.finite == std::vector<Int>{2});
    CHECK(r11.infinite);
}

TEST_CASE("ramification parity on random algebras") {
    std::mt19937_64 rng(31);
    int checked = 0;
    for (int trial = 0; checked < 500; ++trial) {
        long a = static_cast<long>(rng() % 40) - 20;
        long b = static_cast<long>(rng() % 40) - 20;
        if (a == 0 || b == 0) continue;
        ++checked;
        auto ram = ramified_places(QuaternionAlgebra(Rat(a), Rat(b)));
        size_t total = ram.finite.size() + (ram.infinite ? 1 : 0);
        CHECK(total % 2 == 0);
    }
}

TEST_CASE("algebra_for_ramification hits the requested places") {
    for (long p : {3, 5, 7, 13, 37}) {
        QuaternionAlgebra alg = algebra_for_ramification(p);
        CHECK(is_definite(alg));
        auto ram = alg.ramified();
        REQUIRE(ram.finite.size() == 1);
        CHECK(ram.finite[0] == p);
        CHECK(ram.infinite);
    }
    CHECK_THROWS_AS(algebra_for_ramification(2), precondition_error);
    CHECK_THROWS_AS(algebra_for_ramification(9), precondition_error);
}

TEST_CASE("the paper's models are admissible") {
    auto r7 = ramified_places(QuaternionAlgebra(Rat(-7), Rat(-1)));
    CHECK(r7.finite == std::vector<Int>{7});
    auto r13 = ramified_places(QuaternionAlgebra(Rat(-7), Rat(-13)));
    CHECK(r13.finite == std::vector<Int>{13});
}

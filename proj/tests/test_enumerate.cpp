#include <doctest.h>

#include <algorithm>
#include <random>

#include "quatgraph/gram.hpp"

using namespace quatgraph;

namespace {

GramForm identity_form(int dim) {
    GramForm g;
    g.dim = dim;
    g.mat = IntMat::identity(dim);
    g.scale = 1;
    return g;
}

// Oracle: exhaustive box search. Valid when the form dominates the
// standard inner product, so solutions satisfy |v_i| <= sqrt(target).
std::vector<std::vector<Int>> box_search(const GramForm& g, const Int& target) {
    long radius = floor_sqrt(Rat(target)).get_si() + 1;
    std::vector<std::vector<Int>> out;
    std::vector<long> v(g.dim, -radius);
    for (;;) {
        std::vector<Int> cand(v.begin(), v.end());
        if (g.value(cand) == target) {
            int first = -1;
            for (int i = 0; i < g.dim; ++i)
                if (cand[i] != 0) { first = i; break; }
            if (first < 0 || cand[first] > 0) out.push_back(cand);
        }
        int i = 0;
        while (i < g.dim && v[i] == radius) v[i++] = -radius;
        if (i == g.dim) break;
        ++v[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("target zero yields the zero vector") {
    auto vs = short_vectors(identity_form(4), 0);
    REQUIRE(vs.size() == 1);
    CHECK(vs[0] == std::vector<Int>{0, 0, 0, 0});
}

TEST_CASE("unit vectors of the standard form") {
    auto vs = short_vectors(identity_form(4), 1);
    REQUIRE(vs.size() == 4);
    for (const auto& v : vs) {
        Int norm = 0;
        for (const Int& c : v) norm += c * c;
        CHECK(norm == 1);
    }
}

TEST_CASE("norm-two vectors in dimension 3") {
    auto vs = short_vectors(identity_form(3), 2);
    CHECK(vs.size() == 6);
    CHECK(vs == box_search(identity_form(3), 2));
}

TEST_CASE("random definite forms against the box oracle") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        int dim = 2 + static_cast<int>(rng() % 3);
        // A^T A + I dominates the standard form, keeping the oracle box valid.
        IntMat a(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) a.at(i, j) = static_cast<long>(rng() % 5) - 2;
        GramForm g;
        g.dim = dim;
        g.mat = a.transposed().mul(a);
        for (int i = 0; i < dim; ++i) g.mat.at(i, i) += 1;
        g.scale = 1;
        REQUIRE(g.is_positive_definite());
        Int target = static_cast<long>(rng() % 51);
        CHECK(short_vectors(g, target) == box_search(g, target));
    }
}

TEST_CASE("scaled forms hit only divisible targets") {
    GramForm g = identity_form(2);
    g.scale = Rat(1, 2);
    g.scale.canonicalize();
    CHECK(short_vectors(g, 1).size() == 2);  // x^2 + y^2 = 2: (1,1) and (1,-1)
    CHECK(short_vectors(g, 3).empty());      // x^2 + y^2 = 6 has no solutions
}

TEST_CASE("rejects indefinite and degenerate forms") {
    GramForm g;
    g.dim = 2;
    g.mat = IntMat(2, 2);
    g.mat.at(0, 0) = 1;
    g.mat.at(1, 1) = -1;
    g.scale = 1;
    CHECK(!g.is_positive_definite());
    CHECK_THROWS_AS(short_vectors(g, 1), precondition_error);
}

TEST_CASE("shifted enumeration matches a shifted oracle") {
    std::mt19937_64 rng(17);
    GramForm g = identity_form(3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rat> shift(3);
        for (int i = 0; i < 3; ++i) {
            shift[i] = Rat(static_cast<long>(rng() % 7) - 3, 2);
            shift[i].canonicalize();
        }
        Rat target(static_cast<long>(rng() % 30), 1);
        auto sols = short_vectors_shifted(g, shift, target);
        // Oracle over a safe box.
        long radius = floor_sqrt(target).get_si() + 4;
        std::vector<std::vector<Int>> expect;
        for (long x = -radius; x <= radius; ++x)
            for (long y = -radius; y <= radius; ++y)
                for (long z = -radius; z <= radius; ++z) {
                    Rat q = 0;
                    std::array<long, 3> v{x, y, z};
                    for (int i = 0; i < 3; ++i) {
                        Rat c = Rat(v[i]) + shift[i];
                        q += c * c;
                    }
                    if (q == target) expect.push_back({Int(x), Int(y), Int(z)});
                }
        std::sort(expect.begin(), expect.end());
        CHECK(sols == expect);
    }
}

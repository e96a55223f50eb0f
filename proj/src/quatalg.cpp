#include "quatgraph/quatalg.hpp"

#include <algorithm>
#include <set>

namespace quatgraph {

namespace {

RamifiedPlaces compute_ramified(const Rat& a, const Rat& b) {
    std::set<Int> candidates{Int(2)};
    for (const Rat* r : {&a, &b}) {
        for (const Int& p : prime_factors(r->get_num())) candidates.insert(p);
        for (const Int& p : prime_factors(r->get_den())) candidates.insert(p);
    }
    RamifiedPlaces out;
    for (const Int& p : candidates)
        if (hilbert_symbol(a, b, Place::at(p)) == -1) out.finite.push_back(p);
    out.infinite = hilbert_symbol(a, b, Place::at_infinity()) == -1;
    return out;
}

}  // namespace

QuaternionAlgebra::QuaternionAlgebra(const Rat& a, const Rat& b) {
    if (a == 0 || b == 0)
        throw precondition_error("quaternion algebra parameters must be nonzero");
    auto impl = std::make_shared<Impl>();
    impl->a = a;
    impl->b = b;
    impl->ram = compute_ramified(a, b);
    impl_ = std::move(impl);
}

namespace {

void check_same(const QuatElement& x, const QuatElement& y) {
    if (!x.algebra().same_as(y.algebra()))
        throw precondition_error("elements of different quaternion algebras");
}

}  // namespace

QuatElement make_element(const QuaternionAlgebra& alg, const Rat& w, const Rat& x,
                         const Rat& y, const Rat& z) {
    return QuatElement(alg, {w, x, y, z});
}

QuatElement one(const QuaternionAlgebra& alg) { return make_element(alg, 1, 0, 0, 0); }
QuatElement gen_i(const QuaternionAlgebra& alg) { return make_element(alg, 0, 1, 0, 0); }
QuatElement gen_j(const QuaternionAlgebra& alg) { return make_element(alg, 0, 0, 1, 0); }

QuatElement operator+(const QuatElement& x, const QuatElement& y) {
    check_same(x, y);
    return QuatElement(x.algebra(), {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]});
}

QuatElement operator-(const QuatElement& x, const QuatElement& y) {
    check_same(x, y);
    return QuatElement(x.algebra(), {x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]});
}

QuatElement operator-(const QuatElement& x) {
    return QuatElement(x.algebra(), {-x[0], -x[1], -x[2], -x[3]});
}

QuatElement operator*(const QuatElement& x, const QuatElement& y) {
    check_same(x, y);
    const Rat& a = x.algebra().a();
    const Rat& b = x.algebra().b();
    const Rat &w1 = x[0], &x1 = x[1], &y1 = x[2], &z1 = x[3];
    const Rat &w2 = y[0], &x2 = y[1], &y2 = y[2], &z2 = y[3];
    return QuatElement(x.algebra(),
                       {w1 * w2 + a * x1 * x2 + b * y1 * y2 - a * b * z1 * z2,
                        w1 * x2 + x1 * w2 - b * (y1 * z2 - z1 * y2),
                        w1 * y2 + y1 * w2 + a * (x1 * z2 - z1 * x2),
                        w1 * z2 + z1 * w2 + x1 * y2 - y1 * x2});
}

QuatElement operator*(const Rat& s, const QuatElement& x) {
    return QuatElement(x.algebra(), {s * x[0], s * x[1], s * x[2], s * x[3]});
}

Rat trd(const QuatElement& x) { return 2 * x[0]; }

Rat nrd(const QuatElement& x) {
    const Rat& a = x.algebra().a();
    const Rat& b = x.algebra().b();
    return x[0] * x[0] - a * x[1] * x[1] - b * x[2] * x[2] + a * b * x[3] * x[3];
}

QuatElement conj(const QuatElement& x) {
    return QuatElement(x.algebra(), {x[0], -x[1], -x[2], -x[3]});
}

QuatElement inverse(const QuatElement& x) {
    Rat n = nrd(x);
    if (n == 0) throw precondition_error("inverse of a non-invertible element");
    return (1 / n) * conj(x);
}

RamifiedPlaces ramified_places(const QuaternionAlgebra& alg) { return alg.ramified(); }

bool is_definite(const QuaternionAlgebra& alg) { return alg.ramified().infinite; }

QuaternionAlgebra algebra_for_ramification(const Int& p) {
    if (p == 2 || !is_prime(p))
        throw precondition_error("algebra_for_ramification: p must be an odd prime");
    const int max_bound = 200;
    for (int m = 1; m <= max_bound; ++m) {
        std::vector<std::pair<int, int>> pairs;
        for (int k = 1; k <= m; ++k) pairs.emplace_back(-m, -k);
        for (int k = 1; k < m; ++k) pairs.emplace_back(-k, -m);
        for (auto [a, b] : pairs) {
            QuaternionAlgebra alg{Rat(a), Rat(b)};
            const RamifiedPlaces& ram = alg.ramified();
            if (ram.infinite && ram.finite.size() == 1 && ram.finite[0] == p) return alg;
        }
    }
    throw internal_error("algebra_for_ramification: search bound exhausted for p = " +
                         to_string(p));
}

}  // namespace quatgraph

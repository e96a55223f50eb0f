#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "quatgraph/symbols.hpp"

namespace quatgraph {

struct RamifiedPlaces {
    std::vector<Int> finite;  // sorted
    bool infinite = false;
};

// The rational quaternion algebra with i^2 = a, j^2 = b, ij = -ji.
// Cheap to copy; ramification data is computed up front so the shared
// state is immutable afterwards.
class QuaternionAlgebra {
public:
    QuaternionAlgebra(const Rat& a, const Rat& b);

    const Rat& a() const { return impl_->a; }
    const Rat& b() const { return impl_->b; }

    bool same_as(const QuaternionAlgebra& rhs) const {
        return impl_ == rhs.impl_ || (a() == rhs.a() && b() == rhs.b());
    }

    const RamifiedPlaces& ramified() const { return impl_->ram; }

private:
    struct Impl {
        Rat a, b;
        RamifiedPlaces ram;
    };
    std::shared_ptr<const Impl> impl_;
};

class QuatElement {
public:
    QuatElement(const QuaternionAlgebra& alg, std::array<Rat, 4> coords)
        : alg_(alg), c_(std::move(coords)) {}

    const QuaternionAlgebra& algebra() const { return alg_; }
    const std::array<Rat, 4>& coords() const { return c_; }
    const Rat& operator[](int i) const { return c_[i]; }

    bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

    friend bool operator==(const QuatElement& x, const QuatElement& y) {
        return x.alg_.same_as(y.alg_) && x.c_ == y.c_;
    }

private:
    QuaternionAlgebra alg_;
    std::array<Rat, 4> c_;
};

QuatElement make_element(const QuaternionAlgebra& alg, const Rat& w, const Rat& x,
                         const Rat& y, const Rat& z);
QuatElement one(const QuaternionAlgebra& alg);
QuatElement gen_i(const QuaternionAlgebra& alg);
QuatElement gen_j(const QuaternionAlgebra& alg);

QuatElement operator+(const QuatElement& x, const QuatElement& y);
QuatElement operator-(const QuatElement& x, const QuatElement& y);
QuatElement operator-(const QuatElement& x);
QuatElement operator*(const QuatElement& x, const QuatElement& y);
QuatElement operator*(const Rat& s, const QuatElement& x);

Rat trd(const QuatElement& x);
Rat nrd(const QuatElement& x);
QuatElement conj(const QuatElement& x);
QuatElement inverse(const QuatElement& x);

RamifiedPlaces ramified_places(const QuaternionAlgebra& alg);
bool is_definite(const QuaternionAlgebra& alg);

// Smallest definite (a,b)-model ramified exactly at {p, infinity}, by a
// deterministic search over negative integer pairs.
QuaternionAlgebra algebra_for_ramification(const Int& p);

}  // namespace quatgraph

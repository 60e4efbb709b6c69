/*
   Copyright 2026 The valfield Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Galois ring GR(p^n, r) = (Z/p^n)[x]/(M), M a monic lift of the modulus of
// F_{p^r}. W_n(F_q) is isomorphic to it via x -> sum_i p^i tau(x_i^{1/p^i}),
// tau the Teichmuller representative; the tests use this as an oracle for
// Witt arithmetic independent of the Witt polynomials.

#ifndef VALFIELD_TESTS_ORACLES_GALOIS_RING_HPP
#define VALFIELD_TESTS_ORACLES_GALOIS_RING_HPP

#include <cstdint>
#include <vector>

#include "valfield/core/finite_field.hpp"

namespace valfield::testing {

class GaloisRing {
   public:
    using Elt = std::vector<std::int64_t>;

    GaloisRing(const FiniteField& f, int n) : field_(&f), r_(f.degree()), mod_(1) {
        for (int i = 0; i < n; ++i) mod_ *= f.characteristic();
        q_ = f.order();
    }

    std::int64_t modulus() const { return mod_; }

    Elt zero() const { return Elt(static_cast<std::size_t>(r_), 0); }
    Elt constant(std::int64_t c) const {
        Elt e = zero();
        e[0] = norm(c);
        return e;
    }
    Elt add(const Elt& a, const Elt& b) const {
        Elt e = zero();
        for (int i = 0; i < r_; ++i) e[idx(i)] = norm(a[idx(i)] + b[idx(i)]);
        return e;
    }
    Elt mul(const Elt& a, const Elt& b) const {
        std::vector<std::int64_t> prod(static_cast<std::size_t>(2 * r_), 0);
        for (int i = 0; i < r_; ++i) {
            for (int j = 0; j < r_; ++j) prod[idx(i + j)] = norm(prod[idx(i + j)] + a[idx(i)] * b[idx(j)]);
        }
        const auto& m = field_->modulus();
        for (int d = 2 * r_ - 1; d >= r_; --d) {
            const std::int64_t c = prod[idx(d)];
            if (c == 0) continue;
            for (int i = 0; i < r_; ++i) prod[idx(d - r_ + i)] = norm(prod[idx(d - r_ + i)] - c * m[idx(i)]);
            prod[idx(d)] = 0;
        }
        return Elt(prod.begin(), prod.begin() + r_);
    }
    Elt pow(Elt a, std::uint64_t e) const {
        Elt acc = constant(1);
        while (e > 0) {
            if (e & 1U) acc = mul(acc, a);
            e >>= 1U;
            if (e > 0) a = mul(a, a);
        }
        return acc;
    }
    Elt lift(const FinFieldElt& a) const {
        Elt e = zero();
        for (int i = 0; i < r_; ++i) e[idx(i)] = a.coord(i);
        return e;
    }
    /// tau(a) = lift(a)^{q^n}, independent of the chosen lift.
    Elt teich(const FinFieldElt& a) const {
        std::uint64_t e = 1;
        for (std::int64_t m = mod_; m > 1; m /= field_->characteristic()) e *= static_cast<std::uint64_t>(q_);
        return pow(lift(a), e);
    }
    /// Image of a Witt vector given by its components.
    Elt from_witt(const std::vector<FinFieldElt>& x) const {
        Elt acc = zero();
        std::int64_t pi = 1;
        std::uint64_t root_exp = 1;  // x^{1/p^i} = x^{p^{(r-1) i}}
        for (const auto& xi : x) {
            const Elt t = teich(xi.pow(root_exp));
            acc = add(acc, mul(constant(pi), t));
            pi *= field_->characteristic();
            for (int k = 0; k < r_ - 1; ++k) root_exp *= static_cast<std::uint64_t>(field_->characteristic());
        }
        return acc;
    }

   private:
    static std::size_t idx(int i) { return static_cast<std::size_t>(i); }
    std::int64_t norm(std::int64_t v) const {
        v %= mod_;
        return v < 0 ? v + mod_ : v;
    }

    const FiniteField* field_;
    int r_;
    std::int64_t mod_;
    std::int64_t q_;
};

}  // namespace valfield::testing

#endif

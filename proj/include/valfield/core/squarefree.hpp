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

#ifndef VALFIELD_CORE_SQUAREFREE_HPP
#define VALFIELD_CORE_SQUAREFREE_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "valfield/core/finite_field.hpp"
#include "valfield/core/ratfn.hpp"

namespace valfield {

template <FieldElement F>
struct SquarefreeFactor {
    Polynomial<F> factor;  // monic, positive degree
    std::int64_t multiplicity;
};

/**
 * Squarefree decomposition in characteristic p (Musser's algorithm).
 *
 * The product of factor^multiplicity equals f / lc(f); factors are pairwise
 * coprime. The part of f whose derivative vanishes is a polynomial g(t^p):
 * when the coefficients of g have p-th roots in F the recursion runs on the
 * Frobenius-twisted g and multiplicities are scaled by p. Over an imperfect
 * coefficient field (F_q(s) itself) the recursion runs on g and reports the
 * factors h(t^p); such a factor may still be an odd power of an inseparable
 * irreducible, which does not change any multiplicity parity since p is odd.
 */
template <FieldElement F>
std::vector<SquarefreeFactor<F>> squarefree_decompose(const Polynomial<F>& f) {
    if (f.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
    const auto p = f.zero_coeff().characteristic();
    if (p == 2) throw DomainError("characteristic 2 is not supported");
    std::vector<SquarefreeFactor<F>> out;
    Polynomial<F> g = f.monic();
    if (g.degree() <= 0) return out;

    auto merge_pth_part = [&](const Polynomial<F>& c) {
        if (c.degree() <= 0) return;
        const auto deflated = c.deflate(static_cast<std::size_t>(p));
        if (auto root = detail::try_pth_root_poly(c)) {
            for (auto& sf : squarefree_decompose(*root)) out.push_back({std::move(sf.factor), sf.multiplicity * p});
        } else {
            for (auto& sf : squarefree_decompose(deflated))
                out.push_back({sf.factor.inflate(static_cast<std::size_t>(p)), sf.multiplicity});
        }
    };

    const auto dg = g.derivative();
    if (dg.is_zero()) {
        merge_pth_part(g);
    } else {
        Polynomial<F> c = gcd(g, dg);
        Polynomial<F> w = g / c;
        std::int64_t i = 1;
        while (w.degree() > 0) {
            Polynomial<F> y = gcd(w, c);
            Polynomial<F> z = w / y;
            if (z.degree() > 0) out.push_back({z.monic(), i});
            ++i;
            w = y;
            c = c / y;
        }
        merge_pth_part(c.monic());
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.multiplicity != b.multiplicity) return a.multiplicity < b.multiplicity;
        return a.factor.degree() < b.factor.degree();
    });
    return out;
}

// Square test in the coefficient field, dispatched down the tower.
inline bool is_square_in_field(const FinFieldElt& a) { return finite_field_square(a); }

template <FieldElement F>
bool is_square_perf(const RatFn<F>& x);

template <FieldElement F>
bool is_square_in_field(const RatFn<F>& a) {
    return is_square_perf(a);
}

/// Whether a nonzero polynomial is a square in F[t] (F of odd characteristic).
template <FieldElement F>
bool is_square_polynomial(const Polynomial<F>& f) {
    if (f.is_zero()) throw DomainError("square-class test of zero");
    if (!is_square_in_field(f.leading())) return false;
    for (const auto& sf : squarefree_decompose(f))
        if (sf.multiplicity % 2 != 0) return false;
    return true;
}

/**
 * Whether x is a square in the perfect closure of F(t). Since p is odd,
 * x is a square in F(t)^perf iff it is a square in F(t) (if y^2 = x with
 * y^{p^m} in F(t), then x = (y^{p^m} / x^{(p^m-1)/2})^2), so it suffices to
 * look at multiplicity parities of numerator and denominator and at the
 * leading coefficient.
 */
template <FieldElement F>
bool is_square_perf(const RatFn<F>& x) {
    if (x.is_zero()) throw DomainError("square-class test of zero");
    if (!is_square_polynomial(x.num())) return false;
    for (const auto& sf : squarefree_decompose(x.den()))
        if (sf.multiplicity % 2 != 0) return false;
    return true;
}

}  // namespace valfield

#endif

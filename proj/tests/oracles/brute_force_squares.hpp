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

// Enumeration oracle for polynomial squareness over a small prime field:
// a nonzero f is a square iff lc(f) is a square and f/lc(f) = g^2 for some
// monic g of half the degree. Independent of squarefree decomposition.
#ifndef VALFIELD_TESTS_BRUTE_FORCE_SQUARES_HPP
#define VALFIELD_TESTS_BRUTE_FORCE_SQUARES_HPP

#include <cstdint>
#include <vector>

#include "valfield/core/finite_field.hpp"
#include "valfield/core/polynomial.hpp"

namespace valfield::testing {

inline bool brute_force_constant_square(const FinFieldElt& a) {
    for (const auto& x : a.field().elements())
        if (x * x == a) return true;
    return false;
}

inline bool brute_force_polynomial_square(const Polynomial<FinFieldElt>& f) {
    if (f.degree() % 2 != 0) return false;
    if (!brute_force_constant_square(f.leading())) return false;
    const auto monic = f.monic();
    const auto& field = f.zero_coeff().field();
    const int half = f.degree() / 2;
    std::int64_t count = 1;
    for (int i = 0; i < half; ++i) count *= field.order();
    for (std::int64_t idx = 0; idx < count; ++idx) {
        std::vector<FinFieldElt> c;
        std::int64_t r = idx;
        for (int i = 0; i < half; ++i) {
            c.push_back(field.element(r % field.order()));
            r /= field.order();
        }
        c.push_back(field.one());
        Polynomial<FinFieldElt> g(c, field.zero(), f.var());
        if (g * g == monic) return true;
    }
    return false;
}

}  // namespace valfield::testing

#endif

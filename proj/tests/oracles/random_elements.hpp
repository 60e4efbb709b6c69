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

// Seeded generators for property tests.
#ifndef VALFIELD_TESTS_RANDOM_ELEMENTS_HPP
#define VALFIELD_TESTS_RANDOM_ELEMENTS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "valfield/core/finite_field.hpp"
#include "valfield/core/ratfn.hpp"

namespace valfield::testing {

inline FinFieldElt random_elt(const FiniteField& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> d(0, f.order() - 1);
    return f.element(d(rng));
}

inline FinFieldElt random_nonzero(const FiniteField& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> d(1, f.order() - 1);
    return f.element(d(rng));
}

inline Polynomial<FinFieldElt> random_poly(const FiniteField& f, int max_degree, std::mt19937_64& rng,
                                           char var = 't') {
    std::uniform_int_distribution<int> deg(0, max_degree);
    const int d = deg(rng);
    std::vector<FinFieldElt> c;
    for (int i = 0; i <= d; ++i) c.push_back(random_elt(f, rng));
    return Polynomial<FinFieldElt>(c, f.zero(), var);
}

inline Polynomial<FinFieldElt> random_nonzero_poly(const FiniteField& f, int max_degree, std::mt19937_64& rng,
                                                   char var = 't') {
    for (;;) {
        auto g = random_poly(f, max_degree, rng, var);
        if (!g.is_zero()) return g;
    }
}

inline RatFn<FinFieldElt> random_ratfn(const FiniteField& f, int max_degree, std::mt19937_64& rng, char var = 't') {
    auto n = random_poly(f, max_degree, rng, var);
    auto d = random_nonzero_poly(f, max_degree, rng, var);
    return RatFn<FinFieldElt>(n, d);
}

inline RatFn<FinFieldElt> random_nonzero_ratfn(const FiniteField& f, int max_degree, std::mt19937_64& rng,
                                               char var = 't') {
    return RatFn<FinFieldElt>(random_nonzero_poly(f, max_degree, rng, var), random_nonzero_poly(f, max_degree, rng, var));
}

}  // namespace valfield::testing

#endif

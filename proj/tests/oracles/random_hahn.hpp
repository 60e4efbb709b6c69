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

// Seeded generators for group elements and finite-support Hahn series.
#ifndef VALFIELD_TESTS_RANDOM_HAHN_HPP
#define VALFIELD_TESTS_RANDOM_HAHN_HPP

#include <random>

#include "oracles/random_elements.hpp"
#include "valfield/fields/hahn.hpp"

namespace valfield::testing {

/// Element of Gamma with support in [lo, hi] and coordinates a/p^k, |a| <= 6, k <= 2.
inline oag::OagElement random_gamma(std::mt19937_64& rng, std::int64_t p, int lo = 0, int hi = 5) {
    std::uniform_int_distribution<int> idx(lo, hi), num(-6, 6), pw(0, 2), terms(0, 3);
    oag::OagElement out(p);
    const int n = terms(rng);
    for (int i = 0; i < n; ++i) {
        Integer den = 1;
        for (int k = pw(rng); k > 0; --k) den *= p;
        out += oag::OagElement::scalar(p, Rational(Integer(num(rng)), den), idx(rng));
    }
    return out;
}

/// Exact Hahn series with up to `max_terms` terms.
inline HahnElt random_hahn(const FiniteField& f, std::mt19937_64& rng, int max_terms = 4) {
    std::uniform_int_distribution<int> count(0, max_terms);
    HahnElt x(f);
    const int n = count(rng);
    for (int i = 0; i < n; ++i)
        x = x + HahnElt::monomial(random_elt(f, rng), random_gamma(rng, f.characteristic(), 0, 3));
    return x;
}

inline HahnElt random_nonzero_hahn(const FiniteField& f, std::mt19937_64& rng, int max_terms = 4) {
    for (;;) {
        auto x = random_hahn(f, rng, max_terms);
        if (!x.is_zero()) return x;
    }
}

}  // namespace valfield::testing

#endif

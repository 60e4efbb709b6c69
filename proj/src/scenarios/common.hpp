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

// Helpers shared by the scenario implementations.

#ifndef VALFIELD_SRC_SCENARIOS_COMMON_HPP
#define VALFIELD_SRC_SCENARIOS_COMMON_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "valfield/fields/hahn.hpp"
#include "valfield/fields/perf_ratfn.hpp"
#include "valfield/scenarios/report.hpp"

namespace valfield::scenarios::detail {

inline VerificationReport make_report(std::string name, const ScenarioParams& params) {
    VerificationReport r;
    r.scenario = std::move(name);
    r.params = params;
    return r;
}

inline Json lines(const std::vector<std::string>& v) { return Json(v); }

/// Deterministic draw in [0, n); avoids the implementation-defined distributions.
inline std::int64_t draw(std::mt19937_64& rng, std::int64_t n) {
    return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n));
}

/// Random element of Gamma supported on indices lo..hi with numerators in
/// [-3, 3] and denominators p^0..p^2.
inline OagElement random_gamma(std::mt19937_64& rng, std::int64_t p, std::int64_t lo, std::int64_t hi) {
    OagElement g(p);
    for (std::int64_t i = lo; i <= hi; ++i) {
        if (draw(rng, 2) == 0) continue;
        const long num = static_cast<long>(draw(rng, 7)) - 3;
        long den = 1;
        for (std::int64_t j = draw(rng, 3); j > 0; --j) den *= static_cast<long>(p);
        g += OagElement::scalar(p, Rational(Integer(num), Integer(den)), i);
    }
    return g;
}

/// Random nonzero finite-support Hahn series with up to three terms.
inline HahnElt random_hahn(std::mt19937_64& rng, const FiniteField& f, std::int64_t lo, std::int64_t hi) {
    HahnElt x(f);
    const std::int64_t terms = 1 + draw(rng, 3);
    for (std::int64_t k = 0; k < terms; ++k) {
        const FinFieldElt c = f.element(1 + draw(rng, f.order() - 1));
        x = x + HahnElt::monomial(c, random_gamma(rng, f.characteristic(), lo, hi));
    }
    if (x.is_zero()) return HahnElt::constant(f.one());
    return x;
}

/// Random nonzero element of F_p(t, s)^perf built from a few monomials and a p-th root.
inline PerfFq2 random_two_variable(std::mt19937_64& rng, const FiniteField& f) {
    const PerfFq2 t = two_var_t(f), s = two_var_s(f);
    const std::int64_t p = f.characteristic();
    auto c = [&](std::int64_t lo) { return t.from_integer(lo + draw(rng, p - lo)); };
    PerfFq2 num = c(1) * t.one_like();
    for (int k = 0; k < 3; ++k) {
        PerfFq2 mono = c(0);
        for (std::int64_t e = draw(rng, 3); e > 0; --e) mono = mono * t;
        for (std::int64_t e = draw(rng, 3); e > 0; --e) mono = mono * s;
        if (draw(rng, 3) == 0) mono = mono.frobenius_inverse();
        num = num + mono;
    }
    if (num.is_zero()) num = t.one_like();
    PerfFq2 den = t + c(1);
    if (draw(rng, 2) == 0) den = den * s;
    return num / den;
}

}  // namespace valfield::scenarios::detail

#endif

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

#ifndef VALFIELD_VALUATION_FINE_VALUATIONS_HPP
#define VALFIELD_VALUATION_FINE_VALUATIONS_HPP

#include <string>

#include "valfield/fields/hahn.hpp"
#include "valfield/fields/perf_ratfn.hpp"
#include "valfield/valuation/tower.hpp"

namespace valfield::valuation {

/// Coarsening of the Hahn valuation by Delta_i, valued in Gamma / Delta_i.
inline FineValuation<HahnElt> hahn_coarsening(std::int64_t p, std::int64_t i, std::string name) {
    return {std::move(name), ValueGroup(oag::Layer::gamma_quotient(p, i)),
            [i](const HahnElt& x) { return coarsen_hahn_valuation(x, oag::ConvexSubgroup{i}); }};
}

/// t-adic valuation on F_p(t, s)^perf, valued in Z[1/p].
inline FineValuation<PerfFq2> t_adic(std::int64_t p) {
    return {"v_t", ValueGroup(oag::Layer::rank_one(p, 1, std::nullopt)),
            [p](const PerfFq2& x) { return OagElement::scalar(p, variable_adic_valuation(x)); }};
}

/// s-adic valuation on F_p(t, s)^perf, valued in Z[1/p].
inline FineValuation<PerfFq2> s_adic(std::int64_t p) {
    return {"v_s", ValueGroup(oag::Layer::rank_one(p, 1, std::nullopt)),
            [p](const PerfFq2& x) { return OagElement::scalar(p, coefficient_adic_valuation(x)); }};
}

}  // namespace valfield::valuation

#endif

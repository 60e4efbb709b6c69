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

// Claims about the presented field W(k)[1/p](pi)(varpi), generic in k.

#ifndef VALFIELD_SRC_SCENARIOS_RAMIFIED_CLAIMS_HPP
#define VALFIELD_SRC_SCENARIOS_RAMIFIED_CLAIMS_HPP

#include <memory>
#include <string>
#include <vector>

#include "valfield/scenarios/report.hpp"
#include "valfield/witt/ramified.hpp"

namespace valfield::scenarios::detail {

template <PerfectFieldElement K>
std::string vanishing_certificate(const witt::RamExtElt<K>& diff) {
    if (diff.is_exact_zero()) return "exactly 0";
    if (diff.vanishes_at_precision()) return "0 modulo terms of value >= " + diff.precision()->to_string();
    return diff.to_string();
}

template <PerfectFieldElement K>
void claim_pa1_square(ClaimList& claims, const std::shared_ptr<const witt::RamifiedField<K>>& field,
                      const std::string& location) {
    using E = witt::RamExtElt<K>;
    claims.check("p-a1-square", "p*a1 is a square in K, with root pi", location, [&](Json& cert) {
        const E a1 = E::from_base(field, field->unit());
        const E pi = E::pi(field);
        const E p = E::from_integer(field, field->prime());
        const E diff = pi * pi - p * a1;
        cert["a1"] = field->unit().to_string();
        cert["pi^2 - p*a1"] = vanishing_certificate(diff);
        cert["witt_length"] = field->witt_length();
        return diff.vanishes_at_precision();
    });
}

/// The basis values k/(2q) hit every class of (1/(2q))Z / Z once, so
/// e = 2q = [K : W(k)[1/p]] and the residue degree is 1: Kv = k.
template <PerfectFieldElement K>
void claim_purely_ramified(ClaimList& claims, const std::shared_ptr<const witt::RamifiedField<K>>& field,
                           const std::string& location) {
    using E = witt::RamExtElt<K>;
    claims.check("purely-ramified", "K is purely ramified over W(k)[1/p], so Kv = k", location, [&](Json& cert) {
        const std::int64_t q = field->q();
        std::vector<bool> hit(static_cast<std::size_t>(2 * q), false);
        bool ok = true;
        for (int a = 0; a < 2; ++a) {
            for (std::int64_t b = 0; b < q; ++b) {
                const Rational k = field->basis_value(a, b) * Rational(static_cast<long>(2 * q));
                if (!k.is_integer()) {
                    ok = false;
                    continue;
                }
                const auto idx = static_cast<std::size_t>(k.num().get_si() % (2 * q));
                if (hit[idx]) ok = false;
                hit[idx] = true;
            }
        }
        const Rational vu = E::uniformizer(field).valuation();
        ok = ok && vu == Rational(Integer(1), Integer(static_cast<long>(2 * q)));
        const K res = E::from_base(field, field->unit()).residue();
        ok = ok && res == field->alpha();
        cert["degree"] = field->dimension();
        cert["ramification_index"] = 2 * q;
        cert["residue_degree"] = 1;
        cert["uniformizer_value"] = vu.to_string();
        cert["res(a1)"] = res.to_string();
        return ok;
    });
}

}  // namespace valfield::scenarios::detail

#endif

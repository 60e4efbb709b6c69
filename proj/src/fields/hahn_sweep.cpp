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

#include "valfield/fields/hahn_sweep.hpp"

#include <optional>
#include <set>

#include "valfield/fields/hahn.hpp"

namespace valfield {

namespace {

std::set<Rational> coordinate_values(const HahnSweepRange& range) {
    std::set<Rational> out;
    Integer den = 1;
    for (int e = 0; e <= range.max_den_exp; ++e) {
        for (int n = -range.max_numerator; n <= range.max_numerator; ++n) out.insert(Rational(Integer(n), den));
        den *= static_cast<unsigned long>(range.p);
    }
    return out;
}

// Mismatch descriptions for one exponent, in coefficient order.
std::vector<std::string> check_exponent(const oag::OagElement& g, const FiniteField& f, std::int64_t& squares) {
    std::vector<std::string> bad;
    const bool g_even = oag::divisible_by(g, 2);
    for (std::int64_t i = 1; i < f.order(); ++i) {
        const FinFieldElt c = f.element(i);
        const bool expected = g_even && finite_field_square(c);
        const bool got = hahn_is_square(HahnElt::monomial(c, g)).is_square;
        if (got) ++squares;
        if (got != expected) bad.push_back(c.to_string() + "*t^[" + g.to_string() + "]");
    }
    return bad;
}

}  // namespace

std::vector<oag::OagElement> sweep_exponents(const HahnSweepRange& range) {
    const auto values = coordinate_values(range);
    std::vector<oag::OagElement> out{oag::OagElement(range.p)};
    for (const auto index : range.indices) {
        std::vector<oag::OagElement> next;
        for (const auto& g : out) {
            for (const auto& v : values) next.push_back(g + oag::OagElement::scalar(range.p, v, index));
        }
        out = std::move(next);
    }
    return out;
}

HahnSquareSweep sweep_hahn_squares_serial(const HahnSweepRange& range) {
    const auto& f = FiniteField::get(range.p);
    HahnSquareSweep out;
    for (const auto& g : sweep_exponents(range)) {
        for (auto& m : check_exponent(g, f, out.squares)) out.mismatches.push_back(std::move(m));
        out.cases += f.order() - 1;
    }
    return out;
}

HahnSquareSweep sweep_hahn_squares_parallel(const HahnSweepRange& range) {
    const auto& f = FiniteField::get(range.p);
    const auto exps = sweep_exponents(range);
    const auto count = static_cast<std::int64_t>(exps.size());
    std::vector<std::vector<std::string>> bad(exps.size());
    std::int64_t squares = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : squares)
    for (std::int64_t k = 0; k < count; ++k) {
        std::int64_t local = 0;
        bad[static_cast<std::size_t>(k)] = check_exponent(exps[static_cast<std::size_t>(k)], f, local);
        squares += local;
    }
    HahnSquareSweep out;
    out.cases = count * (f.order() - 1);
    out.squares = squares;
    for (auto& b : bad) {
        for (auto& m : b) out.mismatches.push_back(std::move(m));
    }
    return out;
}

}  // namespace valfield

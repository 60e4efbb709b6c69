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

#include <algorithm>
#include <utility>

#include "valfield/core/errors.hpp"
#include "valfield/scenarios/scenarios.hpp"

namespace valfield::scenarios {

namespace {

struct Entry {
    std::string name;
    std::string summary;
    VerificationReport (*run)(const ScenarioParams&);
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = {
        {"hiding-example", "W(k)(sqrt(p a1)) over k = F_p(t,s)^perf; the swap of t and s does not lift",
         run_hiding_example},
        {"tame-hiding", "tame variant with p^(1/p^m) adjoined; the same obstruction to lifting", run_tame_hiding},
        {"first-CAKE-counterex", "v_t o v and v_s o v on W(k)(sqrt(p tau)) are not elementarily equivalent",
         run_first_cake_counterexample},
        {"tame-Hahn-corollary", "k = F_p((Gamma)) with alpha_i = t^e_i meets the four hiding conditions",
         run_tame_hahn_corollary},
        {"fully-tame-CAKE", "nu_1 o v and nu_2 o v on the tame field K differ by the pointed value group",
         run_fully_tame_cake},
        {"no-mix-ake", "isomorphic residue fields and value groups, yet (K, v_1) and (K, v_2) differ",
         run_no_mix_ake},
        {"appendix-non-ake", "K_1(sqrt(p s)) and K_1(sqrt(p(s^3+1))) separated by the curve Y^2 = X^3 + 1",
         run_appendix_non_ake},
        {"omega-two-remark", "the Omega_2 square classes of the two appendix extensions", run_omega_two_remark},
    };
    return entries;
}

const Entry& find(const std::string& name) {
    const auto& r = registry();
    const auto it = std::find_if(r.begin(), r.end(), [&](const Entry& e) { return e.name == name; });
    if (it == r.end()) throw DomainError("unknown scenario '" + name + "'");
    return *it;
}

}  // namespace

const std::vector<std::string>& scenario_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& e : registry()) out.push_back(e.name);
        return out;
    }();
    return names;
}

std::string scenario_summary(const std::string& name) { return find(name).summary; }

VerificationReport run_scenario(const std::string& name, const ScenarioParams& params) {
    const Entry& e = find(name);
    params.validate();
    return e.run(params);
}

}  // namespace valfield::scenarios

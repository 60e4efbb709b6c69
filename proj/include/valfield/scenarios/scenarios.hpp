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

#ifndef VALFIELD_SCENARIOS_SCENARIOS_HPP
#define VALFIELD_SCENARIOS_SCENARIOS_HPP

#include <string>
#include <vector>

#include "valfield/scenarios/report.hpp"

namespace valfield::scenarios {

/// hiding-example, tame-hiding, first-CAKE-counterex, tame-Hahn-corollary,
/// fully-tame-CAKE, no-mix-ake, appendix-non-ake, omega-two-remark.
const std::vector<std::string>& scenario_names();
/// One-line description for listings.
std::string scenario_summary(const std::string& name);

/// Validates the parameters and runs the claim list. Throws DomainError for an
/// unknown name or parameters outside the supported range; failures of
/// individual checks (including precision exhaustion) become failed claims.
VerificationReport run_scenario(const std::string& name, const ScenarioParams& params);

// Individual scenarios, exposed for tests.
VerificationReport run_hiding_example(const ScenarioParams& params);
VerificationReport run_tame_hiding(const ScenarioParams& params);
VerificationReport run_first_cake_counterexample(const ScenarioParams& params);
VerificationReport run_tame_hahn_corollary(const ScenarioParams& params);
VerificationReport run_fully_tame_cake(const ScenarioParams& params);
VerificationReport run_no_mix_ake(const ScenarioParams& params);
VerificationReport run_appendix_non_ake(const ScenarioParams& params);
VerificationReport run_omega_two_remark(const ScenarioParams& params);

}  // namespace valfield::scenarios

#endif

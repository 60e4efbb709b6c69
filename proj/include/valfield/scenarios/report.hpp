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

#ifndef VALFIELD_SCENARIOS_REPORT_HPP
#define VALFIELD_SCENARIOS_REPORT_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace valfield::scenarios {

using Json = nlohmann::ordered_json;

/// verified: exact finite certificate. bounded: exhaustive or sampled check
/// within a stated bound. assumed: a hypothesis that is not finitely checkable.
/// failed: a check that did not go through (including precision exhaustion).
enum class ClaimStatus { verified, bounded, assumed, failed };

std::string to_string(ClaimStatus s);

struct Claim {
    std::string id;
    std::string description;
    std::string paper_location;
    ClaimStatus status = ClaimStatus::failed;
    Json certificate = Json::object();
};

struct ScenarioParams {
    std::int64_t p = 5;
    int witt_length = 3;
    int ram_depth = 2;
    /// Terms used for Hahn series square roots and sample sizes.
    int hahn_precision = 4;
    int search_bound = 2;
    std::uint64_t seed = 1;

    /// Throws DomainError outside p in {3, 5, 7}, 1 <= n <= 4, 0 <= m <= 3,
    /// 1 <= prec <= 16, 0 <= D <= 3.
    void validate() const;
    Json to_json() const;
};

struct VerificationReport {
    std::string scenario;
    ScenarioParams params;
    std::vector<Claim> claims;

    /// Every claim that is not assumed is verified or bounded.
    bool passed() const;
    Json to_json() const;
    /// Stable text form of to_json (two-space indent, trailing newline).
    std::string json_text() const;
    /// One line per claim plus a verdict line.
    std::string summary() const;
};

/// Collects claims; check() turns exceptions from the body into failed claims.
class ClaimList {
   public:
    explicit ClaimList(std::vector<Claim>& out) : out_(&out) {}

    void add(std::string id, std::string description, std::string location, ClaimStatus status, Json certificate);
    /// Runs body, which fills the certificate and returns whether the claim
    /// holds. `success` is the status used when it does (verified or bounded).
    void check(std::string id, std::string description, std::string location,
               const std::function<bool(Json&)>& body, ClaimStatus success = ClaimStatus::verified);
    void assume(std::string id, std::string description, std::string location, std::string justification);

   private:
    std::vector<Claim>* out_;
};

}  // namespace valfield::scenarios

#endif

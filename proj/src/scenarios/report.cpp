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

#include "valfield/scenarios/report.hpp"

#include <algorithm>
#include <sstream>

#include "valfield/core/errors.hpp"

namespace valfield::scenarios {

std::string to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::verified:
            return "verified";
        case ClaimStatus::bounded:
            return "bounded";
        case ClaimStatus::assumed:
            return "assumed";
        case ClaimStatus::failed:
            return "failed";
    }
    return "failed";
}

void ScenarioParams::validate() const {
    if (p != 3 && p != 5 && p != 7) throw DomainError("p must be 3, 5 or 7");
    if (witt_length < 1 || witt_length > 4) throw DomainError("Witt length must be in 1..4");
    if (ram_depth < 0 || ram_depth > 3) throw DomainError("ramification depth must be in 0..3");
    if (hahn_precision < 1 || hahn_precision > 16) throw DomainError("Hahn precision must be in 1..16");
    if (search_bound < 0 || search_bound > 3) throw DomainError("search bound must be in 0..3");
}

Json ScenarioParams::to_json() const {
    return Json{{"p", p},
                {"witt_length", witt_length},
                {"ram_depth", ram_depth},
                {"hahn_precision", hahn_precision},
                {"search_bound", search_bound},
                {"seed", seed}};
}

bool VerificationReport::passed() const {
    return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.status != ClaimStatus::failed; });
}

Json VerificationReport::to_json() const {
    Json claims_json = Json::array();
    for (const auto& c : claims) {
        claims_json.push_back(Json{{"id", c.id},
                                   {"description", c.description},
                                   {"paper_location", c.paper_location},
                                   {"status", scenarios::to_string(c.status)},
                                   {"certificate", c.certificate}});
    }
    return Json{{"version", 1}, {"scenario", scenario}, {"parameters", params.to_json()}, {"claims", claims_json}};
}

std::string VerificationReport::json_text() const { return to_json().dump(2) + "\n"; }

std::string VerificationReport::summary() const {
    std::ostringstream os;
    os << scenario << " (p=" << params.p << ", n=" << params.witt_length << ", m=" << params.ram_depth
       << ", prec=" << params.hahn_precision << ", D=" << params.search_bound << ")\n";
    std::size_t width = 0;
    for (const auto& c : claims) width = std::max(width, c.id.size());
    for (const auto& c : claims) {
        os << "  [" << scenarios::to_string(c.status) << "]" << std::string(9 - scenarios::to_string(c.status).size(), ' ')
           << c.id << std::string(width - c.id.size() + 2, ' ') << c.description << "\n";
    }
    os << (passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

void ClaimList::add(std::string id, std::string description, std::string location, ClaimStatus status,
                    Json certificate) {
    out_->push_back({std::move(id), std::move(description), std::move(location), status, std::move(certificate)});
}

void ClaimList::check(std::string id, std::string description, std::string location,
                      const std::function<bool(Json&)>& body, ClaimStatus success) {
    Json cert = Json::object();
    ClaimStatus status = ClaimStatus::failed;
    try {
        status = body(cert) ? success : ClaimStatus::failed;
    } catch (const InsufficientPrecision& e) {
        cert["error"] = e.what();
    } catch (const DomainError& e) {
        cert["error"] = std::string("domain error: ") + e.what();
    }
    add(std::move(id), std::move(description), std::move(location), status, std::move(cert));
}

void ClaimList::assume(std::string id, std::string description, std::string location, std::string justification) {
    add(std::move(id), std::move(description), std::move(location), ClaimStatus::assumed,
        Json{{"justification", std::move(justification)}});
}

}  // namespace valfield::scenarios

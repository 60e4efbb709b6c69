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

// Scenarios over k = F_p(t, s)^perf with alpha_1 = t, alpha_2 = s.

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "common.hpp"
#include "ramified_claims.hpp"
#include "valfield/scenarios/scenarios.hpp"
#include "valfield/valuation/fine_valuations.hpp"
#include "valfield/valuation/tower.hpp"

namespace valfield::scenarios {

namespace {

using Field2 = witt::RamifiedField<PerfFq2>;
using Elt2 = witt::RamExtElt<PerfFq2>;
using detail::draw;
using oag::ValueGroup;
using detail::lines;
using detail::claim_pa1_square;
using detail::claim_purely_ramified;
using detail::vanishing_certificate;

constexpr int kAutomorphismSamples = 20;

std::shared_ptr<const Field2> make_field(const ScenarioParams& params, int depth) {
    const auto& f = FiniteField::get(params.p);
    return std::make_shared<const Field2>(two_var_t(f), params.witt_length, depth);
}

/// phi = swap of t and s: sends alpha_1 to alpha_2 and respects + and * on samples.
void claim_swap_automorphism(ClaimList& claims, const ScenarioParams& params, const std::string& location) {
    claims.check("automorphism", "the swap t <-> s is an automorphism of k sending alpha_1 = t to alpha_2 = s",
                 location, [&](Json& cert) {
                     const auto& f = FiniteField::get(params.p);
                     const PerfFq2 t = two_var_t(f), s = two_var_s(f);
                     const bool maps = swap_variables(t) == s && swap_variables(s) == t;
                     std::mt19937_64 rng(params.seed);
                     int ok = 0;
                     for (int i = 0; i < kAutomorphismSamples; ++i) {
                         const PerfFq2 x = detail::random_two_variable(rng, f);
                         const PerfFq2 y = detail::random_two_variable(rng, f);
                         const bool hom = swap_variables(x + y) == swap_variables(x) + swap_variables(y) &&
                                          swap_variables(x * y) == swap_variables(x) * swap_variables(y) &&
                                          swap_variables(swap_variables(x)) == x &&
                                          swap_variables(x.frobenius_inverse()) == swap_variables(x).frobenius_inverse();
                         if (hom) ++ok;
                     }
                     cert["phi(t)"] = swap_variables(t).to_string();
                     cert["phi(s)"] = swap_variables(s).to_string();
                     cert["homomorphism_samples"] = kAutomorphismSamples;
                     cert["homomorphism_samples_passed"] = ok;
                     return maps && ok == kAutomorphismSamples;
                 });
}

void claim_square_classes(ClaimList& claims, const ScenarioParams& params, const std::string& location) {
    claims.check("square-classes", "alpha_1 = t and alpha_2 = s lie in different cosets of k^x2", location,
                 [&](Json& cert) {
                     const auto& f = FiniteField::get(params.p);
                     const PerfFq2 t = two_var_t(f), s = two_var_s(f);
                     const bool ratio_square = is_square_perf(t / s);
                     cert["t/s"] = (t / s).to_string();
                     cert["t/s is a square"] = ratio_square;
                     cert["method"] = "squarefree part of numerator times denominator over F_p(s)^perf[t]";
                     return !ratio_square;
                 });
}

void claim_a1_not_square(ClaimList& claims, const std::shared_ptr<const Field2>& field, const std::string& location) {
    claims.check("a1-not-square", "a1 is not a square in W(k): its residue t is not a square in k", location,
                 [&](Json& cert) {
                     const bool sq = is_square_perf(field->alpha());
                     cert["res(a1)"] = field->alpha().to_string();
                     cert["residue is a square"] = sq;
                     cert["reason"] = "a square unit has a square residue";
                     return !sq;
                 });
}

/// A lift sigma of phi gives sigma(pi)^2 = p sigma(a1), so (pi / sigma(pi))^2 is a unit of K
/// with residue t/s, which would be a square in Kv = k.
void claim_no_lift(ClaimList& claims, const ScenarioParams& params, const std::string& location) {
    claims.check("no-lift", "phi does not lift to an automorphism of (K, v)", location, [&](Json& cert) {
        const auto& f = FiniteField::get(params.p);
        const PerfFq2 t = two_var_t(f), s = two_var_s(f);
        const bool ratio_square = is_square_perf(t / s);
        cert["steps"] = lines({
            "suppose sigma lifts phi; then sigma(pi)^2 = p*sigma(a1) and res(sigma(a1)) = phi(t) = s",
            "u = pi/sigma(pi) is a unit of K and u^2 = a1/sigma(a1) has residue t/s",
            "Kv = k, so t/s would be a square in k",
            std::string("t/s is a square in k: ") + (ratio_square ? "true" : "false"),
        });
        return !ratio_square;
    });
}

}  // namespace

VerificationReport run_hiding_example(const ScenarioParams& params) {
    auto report = detail::make_report("hiding-example", params);
    ClaimList claims(report.claims);
    const std::string loc = "hiding-example";
    const auto field = make_field(params, 0);
    claim_swap_automorphism(claims, params, loc + ": choice of k");
    claim_square_classes(claims, params, loc + ": choice of k");
    claim_pa1_square(claims, field, loc + ": K = W(k)(sqrt(p a1))");
    claim_purely_ramified(claims, field, loc + ": Kv = k");
    claim_a1_not_square(claims, field, loc + ": K = W(k)(sqrt(p a1))");
    claim_no_lift(claims, params, loc + ": conclusion");
    return report;
}

VerificationReport run_tame_hiding(const ScenarioParams& params) {
    auto report = detail::make_report("tame-hiding", params);
    ClaimList claims(report.claims);
    const std::string loc = "tame-hiding";
    const auto field = make_field(params, params.ram_depth);
    claim_swap_automorphism(claims, params, loc + ": choice of k");
    claim_square_classes(claims, params, loc + ": choice of k");
    claims.check("presented-subfield",
                 "W(k)(sqrt(p a1))(p^(1/p^m)) is presented with varpi^(p^m) = p and value group (1/(2p^m))Z",
                 loc + ": presented subfield at depth m", [&](Json& cert) {
                     const std::int64_t q = field->q();
                     const Elt2 w = Elt2::varpi(field);
                     const Elt2 p = Elt2::from_integer(field, field->prime());
                     const Elt2 diff = w.pow(static_cast<std::uint64_t>(q)) - p;
                     const ValueGroup g(oag::Layer::rank_one(field->prime(), 2, field->depth()));
                     cert["depth"] = field->depth();
                     cert["varpi^q - p"] = vanishing_certificate(diff);
                     cert["v(varpi)"] = w.valuation().to_string();
                     cert["value_group"] = g.name();
                     return diff.vanishes_at_precision() &&
                            w.valuation() == Rational(Integer(1), Integer(static_cast<long>(q)));
                 });
    claim_pa1_square(claims, field, loc + ": presented subfield at depth m");
    claim_purely_ramified(claims, field, loc + ": Kv = k");
    claims.check("limit-value-group",
                 "in the limit m -> inf the value group is (1/(2p^inf))Z, which is p-divisible",
                 loc + ": tameness", [&](Json& cert) {
                     const ValueGroup g(oag::Layer::rank_one(field->prime(), 2, std::nullopt));
                     const auto gen = g.element(OagElement::scalar(field->prime(), Rational(Integer(1), Integer(2))));
                     const bool div = g.divisible_by(gen, field->prime());
                     cert["value_group"] = g.name();
                     cert["1/2 divisible by p"] = div;
                     cert["note"] = "the group is computed symbolically; only depth m is constructed";
                     return div;
                 });
    claims.assume("immediate-extension", "an algebraically maximal immediate extension (K, v) exists and has Kv = k",
                  loc + ": definition of K",
                  "immediate maximal extensions are not computable; all checks run in the presented subfield");
    claims.assume("tame", "(K, v) is tame: algebraically maximal, Kv = k perfect, vK p-divisible",
                  loc + ": tameness", "algebraic maximality is not finitely checkable");
    claim_no_lift(claims, params, loc + ": conclusion");
    return report;
}

VerificationReport run_first_cake_counterexample(const ScenarioParams& params) {
    auto report = detail::make_report("first-CAKE-counterex", params);
    ClaimList claims(report.claims);
    const std::string loc = "first-CAKE-counterex";
    // The example is stated for W(k)(sqrt(p tau)); the depth parameter is not used.
    const auto field = make_field(params, 0);
    const std::int64_t p = params.p;
    const valuation::ValuationTower<PerfFq2> vt(field, valuation::t_adic(p));
    const valuation::ValuationTower<PerfFq2> vs(field, valuation::s_adic(p));
    const auto& f = FiniteField::get(p);
    const PerfFq2 t = two_var_t(f), s = two_var_s(f);

    claim_square_classes(claims, params, loc + ": choice of k");
    claims.check("fine-valuation-conditions", "v_t(t) = 1 is not 2-divisible in Z[1/p] and v_t(s) = 0",
                 loc + ": hypotheses on nu_1", [&](Json& cert) {
                     const auto vt_t = valuation::t_adic(p).value(t);
                     const auto vt_s = valuation::t_adic(p).value(s);
                     cert["v_t(t)"] = vt_t.to_string();
                     cert["v_t(s)"] = vt_s.to_string();
                     return !oag::divisible_by(vt_t, 2) && vt_s.is_zero();
                 });
    claims.check("isomorphic-residue-valuations", "(k, v_s) is isomorphic to (k, v_t) via the swap: v_s = v_t o swap",
                 loc + ": (k, v_s) = (k, v_t)",
                 [&](Json& cert) {
                     std::mt19937_64 rng(params.seed);
                     int ok = 0;
                     for (int i = 0; i < kAutomorphismSamples; ++i) {
                         const PerfFq2 x = detail::random_two_variable(rng, f);
                         if (valuation::s_adic(p).value(x) == valuation::t_adic(p).value(swap_variables(x))) ++ok;
                     }
                     const bool gens = valuation::s_adic(p).value(s) == valuation::t_adic(p).value(t) &&
                                       valuation::s_adic(p).value(t) == valuation::t_adic(p).value(s);
                     cert["samples"] = kAutomorphismSamples;
                     cert["samples_passed"] = ok;
                     cert["generators"] = gens;
                     return gens && ok == kAutomorphismSamples;
                 },
                 ClaimStatus::bounded);
    claims.check("pointed-value-groups", "v_s(p) is 2-divisible in the value group of v_s o v, v_t(p) is not",
                 loc + ": pointed value groups", [&](Json& cert) {
                     const auto gt = valuation::pointed_value_group(vt);
                     const auto gs = valuation::pointed_value_group(vs);
                     const bool dt = valuation::pointed_divisibility_invariant(gt, 2);
                     const bool ds = valuation::pointed_divisibility_invariant(gs, 2);
                     cert["v_t o v"] = Json{{"group", gt.group.name()}, {"v(p)", gt.group.format(gt.point)}, {"2-divisible", dt}};
                     cert["v_s o v"] = Json{{"group", gs.group.name()}, {"v(p)", gs.group.format(gs.point)}, {"2-divisible", ds}};
                     cert["section"] = vt.section_description();
                     return !dt && ds;
                 });
    claims.check("distinguishing-sentence", "exists X, Y: Y^2 = pX and v(X) = 0 holds under v_s o v and fails under v_t o v",
                 loc + ": distinguishing sentence", [&](Json& cert) {
                     const Elt2 tau = Elt2::from_base(field, field->unit());
                     const auto w = valuation::check_distinguishing_witness(tau, Elt2::pi(field), vs);
                     const auto r = valuation::refute_distinguishing_sentence(vt);
                     cert["witness"] = Json{{"X", "tau"}, {"Y", "pi"}, {"accepted", w.accepted}, {"certificate", lines(w.certificate)}};
                     cert["refutation"] = Json{{"refuted", r.refuted}, {"steps", lines(r.steps)}};
                     return w.accepted && r.refuted;
                 });
    claims.check("soundness", "no tower has both an accepted witness and a refutation", loc + ": distinguishing sentence",
                 [&](Json& cert) {
                     const Elt2 tau = Elt2::from_base(field, field->unit());
                     bool ok = true;
                     for (const auto* tower : {&vt, &vs}) {
                         const bool w = valuation::check_distinguishing_witness(tau, Elt2::pi(field), *tower).accepted;
                         const bool r = valuation::refute_distinguishing_sentence(*tower).refuted;
                         cert[tower->fine().name] = Json{{"witness", w}, {"refuted", r}};
                         ok = ok && !(w && r);
                     }
                     return ok;
                 });
    return report;
}

}  // namespace valfield::scenarios

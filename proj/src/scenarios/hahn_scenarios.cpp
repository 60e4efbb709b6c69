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

// Scenarios over k = F_p((Gamma)) with alpha_i = t^{e_i}, nu_1 = coarsening by
// Delta_1 and nu_2 = nu_1 o phi = coarsening by Delta_0.

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

using FieldH = witt::RamifiedField<HahnElt>;
using EltH = witt::RamExtElt<HahnElt>;
using TowerH = valuation::ValuationTower<HahnElt>;
using detail::draw;
using oag::ValueGroup;
using detail::lines;

constexpr int kHahnSamples = 40;
constexpr int kGroupSamples = 100;

OagElement e(std::int64_t p, std::int64_t i) { return OagElement::unit(p, i); }

HahnElt alpha(const ScenarioParams& params, std::int64_t i) {
    return HahnElt::basis_monomial(FiniteField::get(params.p), i);
}

/// nu_2 carried to the value group of nu_1 by the shift: Gamma/Delta_0 -> Gamma/Delta_1.
OagElement shift_fine(const OagElement& f) { return f.shifted(1); }

void add_corollary_claims(ClaimList& claims, const ScenarioParams& params, const std::string& loc) {
    const std::int64_t p = params.p;
    const auto& f = FiniteField::get(p);
    const HahnElt a1 = alpha(params, 1), a2 = alpha(params, 2);

    claims.check("condition-1-automorphism", "t^e_i -> t^e_(i+1) is an automorphism phi of k with phi(alpha_1) = alpha_2",
                 loc + ": condition (1)", [&](Json& cert) {
                     const bool maps = perf_field_automorphism_shift(a1) == a2;
                     std::mt19937_64 rng(params.seed);
                     int ok = 0;
                     for (int i = 0; i < kHahnSamples; ++i) {
                         const HahnElt x = detail::random_hahn(rng, f, -1, 3);
                         const HahnElt y = detail::random_hahn(rng, f, -1, 3);
                         auto phi = [](const HahnElt& z) { return perf_field_automorphism_shift(z); };
                         const bool hom = phi(x + y) == phi(x) + phi(y) && phi(x * y) == phi(x) * phi(y) &&
                                          perf_field_automorphism_shift(phi(x), -1) == x &&
                                          phi(x.frobenius_inverse()) == phi(x).frobenius_inverse() &&
                                          hahn_valuation(phi(x)) == hahn_valuation(x).shifted(1);
                         if (hom) ++ok;
                     }
                     cert["phi(alpha_1)"] = perf_field_automorphism_shift(a1).to_string();
                     cert["alpha_2"] = a2.to_string();
                     cert["domain"] = "finite-support series";
                     cert["homomorphism_samples"] = kHahnSamples;
                     cert["homomorphism_samples_passed"] = ok;
                     return maps && ok == kHahnSamples;
                 });

    claims.check("condition-2-square-classes", "alpha_1 and alpha_2 lie in different cosets of k^x2",
                 loc + ": condition (2)", [&](Json& cert) {
                     const OagElement d = e(p, 1) - e(p, 2);
                     const auto test = hahn_is_square(a1 / a2, params.hahn_precision);
                     cert["nu(alpha_1/alpha_2)"] = d.to_string();
                     cert["divisible by 2 in Gamma"] = oag::divisible_by(d, 2);
                     cert["alpha_1/alpha_2 is a square"] = test.is_square;
                     cert["reason"] = test.reason;
                     return !oag::divisible_by(d, 2) && !test.is_square;
                 });

    claims.check("condition-3-archimedean", "nu(alpha_1) > nu(alpha_2) and they lie in different archimedean classes",
                 loc + ": condition (3)", [&](Json& cert) {
                     const OagElement v1 = hahn_valuation(a1), v2 = hahn_valuation(a2);
                     const bool greater = oag::lex_compare(v1, v2) == oag::Order::greater;
                     const bool equiv = oag::archimedean_equiv(v1, v2);
                     cert["nu(alpha_1)"] = v1.to_string();
                     cert["nu(alpha_2)"] = v2.to_string();
                     cert["lex_compare"] = greater ? "greater" : "not greater";
                     cert["archimedean_equiv"] = equiv;
                     return greater && !equiv && v1 == e(p, 1) && v2 == e(p, 2);
                 });

    claims.check("condition-4-coarsening",
                 "the coarsening nu_1 by Delta_1 has nu_1(alpha_1) not 2-divisible and nu_1(alpha_2) = 0",
                 loc + ": condition (4)", [&](Json& cert) {
                     const oag::ConvexSubgroup delta1{1};
                     const OagElement n1 = oag::quotient_map(e(p, 1), delta1);
                     const OagElement n2 = oag::quotient_map(e(p, 2), delta1);
                     const ValueGroup q1(oag::Layer::gamma_quotient(p, 1));
                     const bool div = q1.divisible_by(q1.element(n1), 2);
                     // Coarsest with nu_1(alpha_1) > 0: Delta_1 misses e_1 and contains e_2.
                     const bool coarsest = !delta1.contains(e(p, 1)) && delta1.contains(e(p, 2));
                     cert["value_group"] = q1.name();
                     cert["nu_1(alpha_1)"] = n1.to_string();
                     cert["nu_1(alpha_2)"] = n2.to_string();
                     cert["nu_1(alpha_1) divisible by 2"] = div;
                     cert["Delta_1 contains e1, e2"] = Json::array({delta1.contains(e(p, 1)), delta1.contains(e(p, 2))});
                     return n1 == e(p, 1) && n2.is_zero() && !div && coarsest;
                 });
}

void add_hahn_tameness_claims(ClaimList& claims, const ScenarioParams& params, const std::string& loc) {
    const std::int64_t p = params.p;
    claims.check("residue-field-perfect", "the residue field F_p of nu is perfect", loc + ": tameness of nu",
                 [&](Json& cert) {
                     const auto& f = FiniteField::get(p);
                     bool ok = true;
                     for (std::int64_t i = 0; i < f.order(); ++i)
                         ok = ok && f.element(i).frobenius().frobenius_inverse() == f.element(i);
                     cert["field"] = "F_" + std::to_string(p);
                     cert["frobenius bijective"] = ok;
                     return ok;
                 });
    claims.check("value-group-p-divisible", "Gamma is p-divisible (checked on e_i / p^j, i in -2..3, j in 0..2)",
                 loc + ": tameness of nu", [&](Json& cert) {
                     int checked = 0;
                     bool ok = true;
                     Integer pj = 1;
                     for (int j = 0; j <= 2; ++j, pj *= static_cast<long>(p)) {
                         for (std::int64_t i = -2; i <= 3; ++i) {
                             const OagElement g = OagElement::scalar(p, Rational(Integer(1), pj), i);
                             const auto d = oag::divide_in_gamma(g, p);
                             ok = ok && d && static_cast<std::int64_t>(p) * *d == g;
                             ++checked;
                         }
                     }
                     cert["generators_checked"] = checked;
                     return ok;
                 });
    claims.check("square-root-certificate", "a square is recognized and its root reproduces it to working precision",
                 loc + ": squares in k", [&](Json& cert) {
                     const auto& f = FiniteField::get(p);
                     const HahnElt x = HahnElt::monomial(f.one(), 2 * e(p, 1)) +
                                       HahnElt::monomial(f.from_integer(4), 2 * e(p, 1) + e(p, 2));
                     const auto test = hahn_is_square(x, params.hahn_precision);
                     if (!test.is_square || !test.root) return false;
                     const HahnElt diff = *test.root * *test.root - x;
                     cert["x"] = x.to_string();
                     cert["root"] = test.root->to_string();
                     cert["root^2 - x"] = diff.to_string();
                     cert["terms"] = params.hahn_precision;
                     return diff.terms().empty();
                 });
    claims.assume("maximal", "the Hahn series valuation nu is maximal, hence algebraically maximal",
                  loc + ": tameness of nu", "maximality is not finitely checkable");
}

struct HahnTowers {
    std::shared_ptr<const FieldH> field;
    TowerH v1;
    TowerH v2;
};

HahnTowers make_towers(const ScenarioParams& params) {
    auto field = std::make_shared<const FieldH>(alpha(params, 1), params.witt_length, params.ram_depth);
    return {field, TowerH(field, valuation::hahn_coarsening(params.p, 1, "nu_1")),
            TowerH(field, valuation::hahn_coarsening(params.p, 0, "nu_2"))};
}

void add_fully_tame_claims(ClaimList& claims, const ScenarioParams& params, const HahnTowers& towers,
                           const std::string& loc) {
    const std::int64_t p = params.p;
    const auto& f = FiniteField::get(p);
    add_corollary_claims(claims, params, loc + ": choice of k");
    claims.check("nu2-is-nu1-after-phi", "nu_2 = nu_1 o phi, so (k, nu_1) and (k, nu_2) are isomorphic via phi",
                 loc + ": (k, nu_1) = (k, nu_2)",
                 [&](Json& cert) {
                     const auto& n1 = towers.v1.fine();
                     const auto& n2 = towers.v2.fine();
                     bool gens = true;
                     for (std::int64_t i = -2; i <= 3; ++i) {
                         const HahnElt x = alpha(params, i);
                         gens = gens && shift_fine(n2.value(x)) == n1.value(perf_field_automorphism_shift(x));
                     }
                     std::mt19937_64 rng(params.seed + 1);
                     int ok = 0;
                     for (int i = 0; i < kHahnSamples; ++i) {
                         const HahnElt x = detail::random_hahn(rng, f, -2, 3);
                         if (shift_fine(n2.value(x)) == n1.value(perf_field_automorphism_shift(x))) ++ok;
                     }
                     cert["nu_2(alpha_1)"] = n2.value(alpha(params, 1)).to_string();
                     cert["nu_2(alpha_2)"] = n2.value(alpha(params, 2)).to_string();
                     cert["identification"] = "Gamma/Delta_0 -> Gamma/Delta_1, e_i -> e_(i+1)";
                     cert["generators"] = gens;
                     cert["samples"] = kHahnSamples;
                     cert["samples_passed"] = ok;
                     return gens && ok == kHahnSamples;
                 },
                 ClaimStatus::bounded);
    detail::claim_pa1_square(claims, towers.field, loc + ": presented subfield at depth m");
    detail::claim_purely_ramified(claims, towers.field, loc + ": Kv = k");
    claims.check("composed-values", "v_2(a1) = 0 while v_1(a1) = (0, e1) is not 2-divisible",
                 loc + ": values of a1", [&](Json& cert) {
                     const EltH a1 = EltH::from_base(towers.field, towers.field->unit());
                     const auto c1 = valuation::compose_value(a1, towers.v1);
                     const auto c2 = valuation::compose_value(a1, towers.v2);
                     const auto g1 = towers.v1.composed_group();
                     const bool div1 = g1.divisible_by(towers.v1.as_group_element(c1), 2);
                     cert["v_1(a1)"] = g1.format(towers.v1.as_group_element(c1));
                     cert["v_2(a1)"] = towers.v2.composed_group().format(towers.v2.as_group_element(c2));
                     return c2.is_zero() && c1.coarse.is_zero() && c1.fine == e(p, 1) && !div1;
                 });
    claims.check("pointed-value-groups",
                 "(v_1 K, v_1(p)) and (v_2 K, v_2(p)) differ: v_2(p) is 2-divisible, v_1(p) is not",
                 loc + ": pointed value groups", [&](Json& cert) {
                     const auto g1 = valuation::pointed_value_group(towers.v1);
                     const auto g2 = valuation::pointed_value_group(towers.v2);
                     const bool d1 = valuation::pointed_divisibility_invariant(g1, 2);
                     const bool d2 = valuation::pointed_divisibility_invariant(g2, 2);
                     cert["v_1"] = Json{{"group", g1.group.name()}, {"v(p)", g1.group.format(g1.point)}, {"2-divisible", d1}};
                     cert["v_2"] = Json{{"group", g2.group.name()}, {"v(p)", g2.group.format(g2.point)}, {"2-divisible", d2}};
                     cert["section"] = towers.v1.section_description();
                     return !d1 && d2;
                 });
    claims.check("distinguishing-sentence",
                 "exists X, Y: Y^2 = pX and v(X) = 0 holds in (K, v_2) with X = a1, Y = pi and is refuted in (K, v_1)",
                 loc + ": distinguishing sentence", [&](Json& cert) {
                     const EltH a1 = EltH::from_base(towers.field, towers.field->unit());
                     const auto w = valuation::check_distinguishing_witness(a1, EltH::pi(towers.field), towers.v2);
                     const auto r = valuation::refute_distinguishing_sentence(towers.v1);
                     cert["witness"] = Json{{"X", "a1"}, {"Y", "pi"}, {"accepted", w.accepted}, {"certificate", lines(w.certificate)}};
                     cert["refutation"] = Json{{"refuted", r.refuted}, {"value_of_p", towers.v1.composed_group().format(r.value_of_p)},
                                               {"group", r.group}, {"steps", lines(r.steps)}};
                     return w.accepted && r.refuted;
                 });
    claims.check("soundness", "no tower has both an accepted witness and a refutation", loc + ": distinguishing sentence",
                 [&](Json& cert) {
                     const EltH a1 = EltH::from_base(towers.field, towers.field->unit());
                     bool ok = true;
                     for (const auto* tower : {&towers.v1, &towers.v2}) {
                         const bool w = valuation::check_distinguishing_witness(a1, EltH::pi(towers.field), *tower).accepted;
                         const bool r = valuation::refute_distinguishing_sentence(*tower).refuted;
                         cert[tower->fine().name] = Json{{"witness", w}, {"refuted", r}};
                         ok = ok && !(w && r);
                     }
                     return ok;
                 });
    claims.assume("immediate-extension", "an algebraically maximal immediate extension (K, v) exists with Kv = k",
                  loc + ": definition of K",
                  "immediate maximal extensions are not computable; checks run in the presented subfield at depth m");
    claims.assume("tame-valuations", "nu_1, nu_2, v and the compositions v_1, v_2 are tame", loc + ": tameness",
                  "coarsenings and compositions of tame valuations in positive residue characteristic are tame; "
                  "this rests on maximality, which is not finitely checkable");
}

}  // namespace

VerificationReport run_tame_hahn_corollary(const ScenarioParams& params) {
    auto report = detail::make_report("tame-Hahn-corollary", params);
    ClaimList claims(report.claims);
    add_corollary_claims(claims, params, "tame-Hahn-corollary");
    add_hahn_tameness_claims(claims, params, "tame-Hahn-corollary");
    return report;
}

VerificationReport run_fully_tame_cake(const ScenarioParams& params) {
    auto report = detail::make_report("fully-tame-CAKE", params);
    ClaimList claims(report.claims);
    const auto towers = make_towers(params);
    add_fully_tame_claims(claims, params, towers, "fully-tame-CAKE");
    return report;
}

VerificationReport run_no_mix_ake(const ScenarioParams& params) {
    auto report = detail::make_report("no-mix-ake", params);
    ClaimList claims(report.claims);
    const std::string loc = "no-mix-ake";
    const auto towers = make_towers(params);
    const std::int64_t p = params.p;
    const auto& f = FiniteField::get(p);
    add_fully_tame_claims(claims, params, towers, loc);

    claims.check("residue-fields-isomorphic",
                 "K v_1 = k nu_1 and K v_2 = k nu_2 are isomorphic: phi maps O_nu_2 onto O_nu_1 and the maximal ideals onto each other",
                 loc + ": K v_1 = K v_2",
                 [&](Json& cert) {
                     const auto& n1 = towers.v1.fine();
                     const auto& n2 = towers.v2.fine();
                     std::mt19937_64 rng(params.seed + 2);
                     int ok = 0;
                     for (int i = 0; i < kHahnSamples; ++i) {
                         const HahnElt x = detail::random_hahn(rng, f, -2, 3);
                         const OagElement a = n2.value(x);
                         const OagElement b = n1.value(perf_field_automorphism_shift(x));
                         if ((a.sign() >= 0) == (b.sign() >= 0) && (a.sign() > 0) == (b.sign() > 0)) ++ok;
                     }
                     cert["residue field"] = "k nu_i = F_p((Gamma restricted to Delta_i))";
                     cert["samples"] = kHahnSamples;
                     cert["samples_passed"] = ok;
                     return ok == kHahnSamples;
                 },
                 ClaimStatus::bounded);

    claims.check("value-groups-isomorphic",
                 "v_2 K and v_1 K are isomorphic (hence elementarily equivalent) via (c, f) -> (c, shift(f))",
                 loc + ": v_1 K = v_2 K", [&](Json& cert) {
                     const ValueGroup g1 = towers.v1.composed_group();
                     const ValueGroup g2 = towers.v2.composed_group();
                     const std::int64_t q = towers.field->q();
                     auto map = [&](const oag::GroupElement& x) {
                         return g1.element({x.parts[0], shift_fine(x.parts[1])});
                     };
                     auto inverse = [&](const oag::GroupElement& x) {
                         return g2.element({x.parts[0], x.parts[1].shifted(-1)});
                     };
                     std::vector<oag::GroupElement> gens;
                     gens.push_back(g2.element({OagElement::scalar(p, Rational(Integer(1), Integer(static_cast<long>(2 * q)))), OagElement(p)}));
                     Integer pj = 1;
                     for (int j = 0; j <= 2; ++j, pj *= static_cast<long>(p))
                         for (std::int64_t i = -2; i <= 0; ++i)
                             gens.push_back(g2.element({OagElement(p), OagElement::scalar(p, Rational(Integer(1), pj), i)}));
                     bool ok = true;
                     for (const auto& x : gens) {
                         const auto y = map(x);
                         ok = ok && g1.contains(y) && inverse(y) == x && g1.compare(y, g1.zero()) == g2.compare(x, g2.zero());
                     }
                     // Generators of v_1 K pull back into v_2 K, so the map is onto.
                     for (std::int64_t i = -1; i <= 1; ++i) {
                         const auto y = g1.element({OagElement(p), e(p, i)});
                         ok = ok && g2.contains(inverse(y)) && map(inverse(y)) == y;
                     }
                     std::mt19937_64 rng(params.seed + 3);
                     auto random_element = [&] {
                         const long k = static_cast<long>(draw(rng, 21)) - 10;
                         return g2.element({OagElement::scalar(p, Rational(Integer(k), Integer(static_cast<long>(2 * q)))),
                                            detail::random_gamma(rng, p, -3, 0)});
                     };
                     int passed = 0;
                     for (int i = 0; i < kGroupSamples; ++i) {
                         const auto x = random_element();
                         const auto y = random_element();
                         const bool good = g1.contains(map(x)) && map(x + y) == map(x) + map(y) &&
                                           g1.compare(map(x), map(y)) == g2.compare(x, y) && inverse(map(x)) == x;
                         if (good) ++passed;
                     }
                     const auto p1 = valuation::pointed_value_group(towers.v1);
                     const auto p2 = valuation::pointed_value_group(towers.v2);
                     cert["v_2 K"] = g2.name();
                     cert["v_1 K"] = g1.name();
                     cert["map"] = "(c, f) -> (c, f with e_i -> e_(i+1))";
                     cert["generators_checked"] = gens.size();
                     cert["random_pairs"] = kGroupSamples;
                     cert["random_pairs_passed"] = passed;
                     cert["image of v_2(p)"] = g1.format(map(p2.point));
                     cert["v_1(p)"] = g1.format(p1.point);
                     cert["note"] = "isomorphic (hence elementarily equivalent); the isomorphism does not carry v_2(p) to v_1(p)";
                     return ok && passed == kGroupSamples && !(map(p2.point) == p1.point);
                 });
    claims.assume("tame-compositions", "v_1 = nu_1 o v and v_2 = nu_2 o v are tame", loc + ": tameness",
                  "compositions of tame valuations with residue characteristic p > 0 are tame; rests on maximality");
    return report;
}

}  // namespace valfield::scenarios

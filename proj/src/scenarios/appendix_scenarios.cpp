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

// The two quadratic extensions K = K_1(sqrt(p s)) and L = K_1(sqrt(p (s^3 + 1)))
// of a tame field K_1 with value group Z[1/p] and residue field F = F_p(t)^perf.

#include <random>
#include <string>

#include "common.hpp"
#include "valfield/scenarios/scenarios.hpp"
#include "valfield/valuation/appendix.hpp"

namespace valfield::scenarios {

namespace {

using detail::draw;
using valuation::QuadraticExtension;
using valuation::RamifiedQuadratic;

constexpr int kSquareClassSamples = 30;

struct Extensions {
    PerfFq t;
    RamifiedQuadratic k;
    RamifiedQuadratic l;
};

Extensions make_extensions(std::int64_t p) {
    const auto& f = FiniteField::get(p);
    const PerfFq t = PerfFq::variable(f.one());
    const PerfFq one = t.one_like();
    return {t, {"K = K_1(sqrt(p*s))", {Rational(0), t}}, {"L = K_1(sqrt(p*(s^3+1)))", {Rational(0), t * t * t + one}}};
}

Json pointed_json(const oag::PointedGroup& g) {
    return Json{{"group", g.group.name()}, {"v(p)", g.group.format(g.point)}};
}

PerfFq random_unit_residue(std::mt19937_64& rng, const PerfFq& t) {
    const std::int64_t p = t.characteristic();
    auto c = [&](std::int64_t lo) { return t.from_integer(lo + draw(rng, p - lo)); };
    PerfFq num = c(1);
    PerfFq power = t.one_like();
    for (int k = 1; k <= 3; ++k) {
        power = power * t;
        num = num + c(0) * power;
    }
    PerfFq u = num / (t + c(1));
    if (draw(rng, 3) == 0) u = u.frobenius_inverse();
    return u;
}

void claim_omega_two_distinct(ClaimList& claims, const Extensions& ext, const std::string& loc) {
    claims.check("omega-two-distinct", "Omega_2(K) = t*(F^x)^2 and Omega_2(L) = (t^3+1)*(F^x)^2 are different classes",
                 loc, [&](Json& cert) {
                     const auto ck = valuation::omega_two(ext.k);
                     const auto cl = valuation::omega_two(ext.l);
                     const bool same = valuation::same_square_class(ck, cl);
                     cert["Omega_2(K)"] = ck.representative.to_string();
                     cert["Omega_2(L)"] = cl.representative.to_string();
                     cert["K"] = Json(ck.certificate);
                     cert["L"] = Json(cl.certificate);
                     cert["ratio is a square"] = same;
                     return !same && ck.representative == ext.t;
                 });
}

}  // namespace

VerificationReport run_appendix_non_ake(const ScenarioParams& params) {
    auto report = detail::make_report("appendix-non-ake", params);
    ClaimList claims(report.claims);
    const std::string loc = "appendix-non-ake";
    const auto ext = make_extensions(params.p);

    claims.assume("base-field", "K_1 is tame with value group Z[1/p] and residue field F_p(t)^perf; s in K_1 has residue t",
                  loc + ": construction of K_1",
                  "K_1 is not constructed; elements of K_1 are represented by their value and residue");
    claims.check("pointed-groups-equal",
                 "(vK, v(p)) = (wL, w(p)) = ((1/(2p^m))Z, 1) at depth m, and ((1/(2p^inf))Z, 1) in the limit",
                 loc + ": value groups", [&](Json& cert) {
                     const auto gk = valuation::ramified_quadratic_pointed_group(ext.k, params.ram_depth);
                     const auto gl = valuation::ramified_quadratic_pointed_group(ext.l, params.ram_depth);
                     const auto ik = valuation::ramified_quadratic_pointed_group(ext.k, std::nullopt);
                     const auto il = valuation::ramified_quadratic_pointed_group(ext.l, std::nullopt);
                     cert["depth"] = params.ram_depth;
                     cert["K at depth m"] = pointed_json(gk);
                     cert["L at depth m"] = pointed_json(gl);
                     cert["K limit"] = pointed_json(ik);
                     cert["L limit"] = pointed_json(il);
                     const auto one = gk.group.element(OagElement::scalar(params.p, Rational(1)));
                     return gk.group == gl.group && gk.point == gl.point && gk.point == one && ik.group == il.group &&
                            ik.point == il.point;
                 });
    claims.check("residue-fields-equal", "both extensions are ramified of degree 2, so Kv = Lw = F_p(t)^perf",
                 loc + ": residue fields", [&](Json& cert) {
                     const auto gk = valuation::ramified_quadratic_pointed_group(ext.k, std::nullopt);
                     const auto gl = valuation::ramified_quadratic_pointed_group(ext.l, std::nullopt);
                     const auto ek = gk.group.layers().front().base_denominator;
                     const auto el = gl.group.layers().front().base_denominator;
                     cert["ramification index K"] = ek;
                     cert["ramification index L"] = el;
                     cert["residue field"] = "F_" + std::to_string(params.p) + "(t)^perf";
                     return ek == 2 && el == 2;
                 });
    claims.check("fundamental-equality", "K' = K(sqrt p) and L' = L(sqrt p) have e = 2 and f = 2 over K_1 with e*f = 4",
                 loc + ": degree four extensions", [&](Json& cert) {
                     bool ok = true;
                     for (const auto* q : {&ext.k, &ext.l}) {
                         const auto fe = valuation::degree_four_bookkeeping(*q);
                         cert[q->name] = Json{{"degree", fe.degree}, {"e", fe.ramification_index}, {"f", fe.residue_degree}};
                         ok = ok && fe.holds() && fe.ramification_index == 2 && fe.residue_degree == 2;
                     }
                     cert["K'v'"] = QuadraticExtension(ext.k.c.residue).describe();
                     cert["L'w'"] = QuadraticExtension(ext.l.c.residue).describe();
                     return ok;
                 });
    const QuadraticExtension kres(ext.k.c.residue);
    const QuadraticExtension lres(ext.l.c.residue);
    claims.check("t-point-in-L", "(t, sqrt(t^3+1)) solves Y^2 = X^3 + 1 in L'w' = F(sqrt(t^3+1))",
                 loc + ": the curve Y^2 = X^3 + 1", [&](Json& cert) {
                     const auto r = valuation::quadratic_residue_extension_check(lres, params.search_bound);
                     cert["field"] = r.field;
                     cert["point"] = r.t_point_certificate;
                     return r.t_point;
                 });
    const auto kcheck = valuation::quadratic_residue_extension_check(kres, params.search_bound);
    claims.check("u6-plus-1-nonsquare", "in K'v' = F(sqrt t) = F_p(u)^perf, t^3 + 1 = u^6 + 1 is not a square",
                 loc + ": the curve Y^2 = X^3 + 1", [&](Json& cert) {
                     cert["field"] = kcheck.field;
                     cert["X = t"] = kcheck.t_point_certificate;
                     cert["u^6+1 is a square"] = kcheck.u6_plus_1_square.value_or(true);
                     return kcheck.u6_plus_1_square.has_value() && !*kcheck.u6_plus_1_square && !kcheck.t_point;
                 });
    claims.check("bounded-curve-search",
                 "no nonconstant X = a/b in F_p(u) with deg a, deg b <= D makes X^3 + 1 a square",
                 loc + ": the curve Y^2 = X^3 + 1",
                 [&](Json& cert) {
                     if (!kcheck.search) return false;
                     cert["bound"] = kcheck.search_bound;
                     cert["candidates"] = kcheck.search->candidates;
                     cert["solutions"] = Json(kcheck.search->solutions);
                     cert["scope"] = "F_p(u); Frobenius is bijective on points, so F_p(u)^perf adds none";
                     return kcheck.search->solutions.empty();
                 },
                 ClaimStatus::bounded);
    claims.check("curve-smooth", "Y^2 = X^3 + 1 is smooth over F_p: X^3 + 1 is coprime to its derivative",
                 loc + ": the curve Y^2 = X^3 + 1", [&](Json& cert) {
                     const auto& f = FiniteField::get(params.p);
                     const auto cubic = Polynomial<FinFieldElt>::monomial(f.one(), 3, 'X') +
                                        Polynomial<FinFieldElt>::constant(f.one(), 'X');
                     const auto g = gcd(cubic, cubic.derivative());
                     cert["X^3 + 1"] = cubic.to_string();
                     cert["derivative"] = cubic.derivative().to_string();
                     cert["gcd"] = g.to_string();
                     if (g.degree() > 0) cert["note"] = "singular cubic of genus 0; the curve argument needs p > 3";
                     return g.degree() == 0;
                 });
    claims.assume("genus-one", "every point of Y^2 = X^3 + 1 over K'v' has coordinates in F_p", loc + ": the curve Y^2 = X^3 + 1",
                  "the curve has genus 1 and K'v' is a direct limit of rational function fields over F_p");
    claims.check("affine-point-count", "Y^2 = X^3 + 1 has the same number of affine F_p-points by enumeration and by character sum",
                 loc + ": the curve Y^2 = X^3 + 1", [&](Json& cert) {
                     const auto a = valuation::affine_points_by_enumeration(params.p);
                     const auto b = valuation::affine_points_by_character_sum(params.p);
                     cert["enumeration"] = a;
                     cert["character_sum"] = b;
                     return a == b;
                 });
    claim_omega_two_distinct(claims, ext, loc + ": Omega_2");
    claims.assume("interpretable", "(K', v') is interpretable in (K, v), and (L', w') in (L, w), by the same formulas",
                  loc + ": conclusion", "interpretations are not executed; the residue-level invariants are checked instead");
    claims.assume("algebraic-part", "K and L have the same algebraic part K_0", loc + ": algebraic parts",
                  "rests on defectlessness of the tame field K_0");
    return report;
}

VerificationReport run_omega_two_remark(const ScenarioParams& params) {
    auto report = detail::make_report("omega-two-remark", params);
    ClaimList claims(report.claims);
    const std::string loc = "omega-two-remark";
    const auto ext = make_extensions(params.p);
    claim_omega_two_distinct(claims, ext, loc + ": Omega_2 classes");
    claims.check("omega-two-invariance", "Omega_2 is unchanged when c is replaced by c*u^2 for a unit u",
                 loc + ": Omega_2 classes",
                 [&](Json& cert) {
                     std::mt19937_64 rng(params.seed);
                     const auto ck = valuation::omega_two(ext.k);
                     const auto cl = valuation::omega_two(ext.l);
                     int ok = 0;
                     for (int i = 0; i < kSquareClassSamples; ++i) {
                         const PerfFq u = random_unit_residue(rng, ext.t);
                         const auto k2 = valuation::omega_two({"K", {Rational(0), ext.k.c.residue * u * u}});
                         const auto l2 = valuation::omega_two({"L", {Rational(0), ext.l.c.residue * u * u}});
                         if (valuation::same_square_class(ck, k2) && valuation::same_square_class(cl, l2) &&
                             !valuation::same_square_class(k2, l2))
                             ++ok;
                     }
                     cert["samples"] = kSquareClassSamples;
                     cert["samples_passed"] = ok;
                     return ok == kSquareClassSamples;
                 },
                 ClaimStatus::bounded);
    claims.check("omega-two-needs-unit", "Omega_2 is only defined through a unit c; a nonunit is rejected",
                 loc + ": Omega_2 classes", [&](Json& cert) {
                     try {
                         valuation::omega_two({"bad", {Rational(1), ext.t}});
                     } catch (const DomainError& e) {
                         cert["rejected"] = e.what();
                         return true;
                     }
                     return false;
                 });
    claims.assume("enriched-residue-fields",
                  "(F, Omega_2(K)) and (F, Omega_2(L)) are not elementarily equivalent, and are interpretable in (K, v) and (L, w)",
                  loc + ": conclusion",
                  "K'v' and L'w' are interpretable in the enriched residue fields; the curve claims of appendix-non-ake separate them");
    return report;
}

}  // namespace valfield::scenarios

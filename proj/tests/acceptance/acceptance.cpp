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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles/brute_force_squares.hpp"
#include "oracles/galois_ring.hpp"
#include "oracles/random_elements.hpp"
#include "valfield/fields/hahn.hpp"
#include "valfield/fields/hahn_sweep.hpp"
#include "valfield/scenarios/scenarios.hpp"
#include "valfield/valuation/appendix.hpp"
#include "valfield/valuation/fine_valuations.hpp"
#include "valfield/valuation/tower.hpp"

#ifndef VALFIELD_CLI_PATH
#error "VALFIELD_CLI_PATH must name the valfield executable"
#endif

using namespace valfield;
using oag::OagElement;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int number;
    std::string title;
    double limit_seconds;  // 0: no limit
    std::function<Outcome()> run;
};

using W = witt::WittVec<FinFieldElt>;
using RH = witt::RamExtElt<HahnElt>;

struct HahnTowers {
    std::shared_ptr<const witt::RamifiedField<HahnElt>> field;
    valuation::ValuationTower<HahnElt> v1;
    valuation::ValuationTower<HahnElt> v2;
};

HahnTowers hahn_towers(std::int64_t p, int n, int m) {
    const auto& f = FiniteField::get(p);
    auto field = std::make_shared<const witt::RamifiedField<HahnElt>>(HahnElt::basis_monomial(f, 1), n, m);
    return {field, valuation::ValuationTower<HahnElt>(field, valuation::hahn_coarsening(p, 1, "nu_1")),
            valuation::ValuationTower<HahnElt>(field, valuation::hahn_coarsening(p, 0, "nu_2"))};
}

scenarios::ClaimStatus claim_status(const scenarios::VerificationReport& r, const std::string& id) {
    for (const auto& c : r.claims)
        if (c.id == id) return c.status;
    return scenarios::ClaimStatus::failed;
}

Outcome pointed_groups() {
    scenarios::ScenarioParams params;
    params.p = 5;
    params.witt_length = 3;
    const auto report = scenarios::run_fully_tame_cake(params);
    const auto t = hahn_towers(5, 3, params.ram_depth);
    const bool d1 = valuation::pointed_divisibility_invariant(valuation::pointed_value_group(t.v1), 2);
    const bool d2 = valuation::pointed_divisibility_invariant(valuation::pointed_value_group(t.v2), 2);
    const bool claim = claim_status(report, "pointed-value-groups") == scenarios::ClaimStatus::verified;
    return {!d1 && d2 && claim && report.passed(),
            "v_1(p) 2-divisible: " + std::string(d1 ? "true" : "false") + ", v_2(p) 2-divisible: " +
                (d2 ? "true" : "false")};
}

Outcome witness_and_refutation() {
    const auto t = hahn_towers(5, 3, 2);
    const RH a1 = RH::from_base(t.field, t.field->unit());
    const auto w = valuation::check_distinguishing_witness(a1, RH::pi(t.field), t.v2);
    const auto r = valuation::refute_distinguishing_sentence(t.v1);
    const auto w1 = valuation::check_distinguishing_witness(a1, RH::pi(t.field), t.v1);
    const auto r2 = valuation::refute_distinguishing_sentence(t.v2);
    return {w.accepted && r.refuted && !w1.accepted && !r2.refuted,
            "witness under v_2: " + std::string(w.accepted ? "accepted" : "rejected") +
                ", refutation under v_1: " + (r.refuted ? r.steps.back() : "none")};
}

W witt_from_indices(const FiniteField& f, const std::vector<std::int64_t>& idx) {
    std::vector<FinFieldElt> c;
    for (auto i : idx) c.push_back(f.element(i));
    return W(c);
}

Outcome witt_oracles() {
    std::size_t mismatches = 0;
    std::size_t pairs = 0;
    // W_n(F_3) -> Z/3^n, x -> sum 3^i [x_i^(3^(n-1-i))] with Teichmuller lifts;
    // n = 2 gives the 9 x 9 table over Z/9, n = 4 the 81 x 81 table over Z/81.
    for (int n : {2, 4}) {
        const auto& f = FiniteField::get(3);
        const testing::GaloisRing ring(f, n);
        std::int64_t count = 1;
        for (int i = 0; i < n; ++i) count *= 3;
        std::vector<W> all;
        std::vector<std::int64_t> image;
        for (std::int64_t k = 0; k < count; ++k) {
            std::vector<std::int64_t> idx;
            for (std::int64_t r = k, i = 0; i < n; ++i, r /= 3) idx.push_back(r % 3);
            all.push_back(witt_from_indices(f, idx));
            image.push_back(ring.from_witt(all.back().components())[0]);
        }
        std::vector<std::int64_t> sorted = image;
        std::sort(sorted.begin(), sorted.end());
        for (std::int64_t k = 0; k < count; ++k)
            if (sorted[static_cast<std::size_t>(k)] != k) ++mismatches;
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = 0; j < all.size(); ++j) {
                ++pairs;
                if (ring.from_witt((all[i] + all[j]).components())[0] != (image[i] + image[j]) % count) ++mismatches;
                if (ring.from_witt((all[i] * all[j]).components())[0] != (image[i] * image[j]) % count) ++mismatches;
            }
    }
    std::size_t random_pairs = 0;
    {
        const auto& f = FiniteField::get(3, 2);
        const testing::GaloisRing ring(f, 3);
        std::mt19937_64 rng(2026);
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<FinFieldElt> cx, cy;
            for (int i = 0; i < 3; ++i) {
                cx.push_back(testing::random_elt(f, rng));
                cy.push_back(testing::random_elt(f, rng));
            }
            const W x(cx), y(cy);
            const auto gx = ring.from_witt(cx), gy = ring.from_witt(cy);
            ++random_pairs;
            if (ring.from_witt((x + y).components()) != ring.add(gx, gy)) ++mismatches;
            if (ring.from_witt((x * y).components()) != ring.mul(gx, gy)) ++mismatches;
        }
    }
    return {mismatches == 0, std::to_string(pairs) + " pairs over W_2(F_3) and W_4(F_3), " + std::to_string(random_pairs) +
                                 " random pairs over W_3(F_9), " + std::to_string(mismatches) + " mismatches"};
}

Outcome squareness() {
    const auto& f = FiniteField::get(5);
    const FinFieldElt n = f.from_integer(2);
    std::mt19937_64 rng(500);
    int checked = 0, bad = 0;
    const bool n_nonsquare = !testing::brute_force_constant_square(n);
    while (checked < 500) {
        const auto body = testing::random_nonzero_ratfn(f, 4, rng);
        const PerfFq x(body, static_cast<int>(rng() % 2));
        const PerfFq x2 = x * x;
        const PerfFq scaled = x2 * PerfFq::constant(n);
        if (!is_square_perf(x2)) ++bad;
        if (is_square_perf(scaled)) ++bad;
        ++checked;
    }
    return {bad == 0 && n_nonsquare,
            std::to_string(checked) + " rational functions, nonsquare constant 2, " + std::to_string(bad) + " wrong"};
}

Outcome hahn_sweep() {
    HahnSweepRange range;
    range.p = 5;
    const auto& f = FiniteField::get(5);
    std::int64_t cases = 0, wrong = 0;
    for (const auto& g : sweep_exponents(range)) {
        bool even = true;
        for (const auto& [i, c] : g.coords()) even = even && c.num() % 2 == 0;
        for (std::int64_t ci = 1; ci < 5; ++ci) {
            const FinFieldElt c = f.element(ci);
            const bool expected = even && testing::brute_force_constant_square(c);
            if (hahn_is_square(HahnElt::monomial(c, g)).is_square != expected) ++wrong;
            ++cases;
        }
    }
    const auto parallel = sweep_hahn_squares_parallel(range);
    return {wrong == 0 && parallel.mismatches.empty() && parallel.cases == cases,
            std::to_string(cases) + " monomials, " + std::to_string(wrong) + " disagreements with the oracle"};
}

Outcome corollary_conditions() {
    const std::int64_t p = 5;
    const OagElement e1 = oag::parse_oag("e1", p), e2 = oag::parse_oag("e2", p);
    const oag::ConvexSubgroup delta1{1};
    const auto& f = FiniteField::get(p);
    const HahnElt a1 = HahnElt::basis_monomial(f, 1), a2 = HahnElt::basis_monomial(f, 2);
    const bool c1 = perf_field_automorphism_shift(a1) == a2;
    const bool c2 = !hahn_is_square(a1 / a2).is_square && !oag::divisible_by(e1 - e2, 2);
    const bool c3 = oag::lex_compare(e1, e2) == oag::Order::greater && !oag::archimedean_equiv(e1, e2);
    const OagElement n1 = oag::quotient_map(e1, delta1), n2 = oag::quotient_map(e2, delta1);
    const oag::ValueGroup q1(oag::Layer::gamma_quotient(p, 1));
    const bool c4 = n1 == e1 && n2.is_zero() && !q1.divisible_by(q1.element(n1), 2);
    const auto report = scenarios::run_tame_hahn_corollary(scenarios::ScenarioParams{});
    bool claims = true;
    for (const char* id : {"condition-1-automorphism", "condition-2-square-classes", "condition-3-archimedean",
                           "condition-4-coarsening"})
        claims = claims && claim_status(report, id) == scenarios::ClaimStatus::verified;
    return {c1 && c2 && c3 && c4 && claims, "nu_1(alpha_1) = " + n1.to_string() + ", nu_1(alpha_2) = " + n2.to_string() +
                                                ", e1 vs e2: greater, archimedean_equiv false"};
}

Outcome appendix() {
    const auto& f = FiniteField::get(5);
    const PerfFq t = PerfFq::variable(f.one());
    const PerfFq cubic = t * t * t + t.one_like();
    const valuation::QuadraticExtension lres(cubic), kres(t);
    const auto l = valuation::quadratic_residue_extension_check(lres, 2);
    const auto k = valuation::quadratic_residue_extension_check(kres, 2);
    // Independent check of the t-point: Y = sqrt(r) itself.
    const bool point = lres.mul(lres.root(), lres.root()) == lres.embed(cubic) && l.t_point;
    // u^6 + 1 is not a square: enumeration over monic cubics.
    const auto u6 = Polynomial<FinFieldElt>::monomial(f.one(), 6, 'u') + Polynomial<FinFieldElt>::constant(f.one(), 'u');
    const bool u6_nonsquare = !testing::brute_force_polynomial_square(u6) && k.u6_plus_1_square == false;
    const bool search = k.search && k.search->solutions.empty() && k.search->candidates > 0;
    std::int64_t count = 0;
    for (std::int64_t x = 0; x < 5; ++x)
        for (std::int64_t y = 0; y < 5; ++y)
            if ((y * y - x * x * x - 1) % 5 == 0) ++count;
    const bool affine = valuation::affine_points_by_enumeration(5) == count &&
                        valuation::affine_points_by_character_sum(5) == count;
    const valuation::RamifiedQuadratic kq{"K", {Rational(0), t}}, lq{"L", {Rational(0), cubic}};
    const bool omega = !valuation::same_square_class(valuation::omega_two(kq), valuation::omega_two(lq)) &&
                       !testing::brute_force_polynomial_square(t.body().num() * cubic.body().num());
    return {point && u6_nonsquare && search && affine && omega,
            "search candidates " + std::to_string(k.search ? k.search->candidates : 0) + ", affine points " +
                std::to_string(count)};
}

Outcome value_group_isomorphism() {
    const std::int64_t p = 5;
    const auto t = hahn_towers(p, 3, 2);
    const auto g1 = t.v1.composed_group(), g2 = t.v2.composed_group();
    const std::int64_t q = t.field->q();
    auto map = [&](const oag::GroupElement& x) { return oag::GroupElement{{x.parts[0], x.parts[1].shifted(1)}}; };
    std::vector<oag::GroupElement> gens{g2.element({OagElement::scalar(p, Rational(Integer(1), Integer(static_cast<long>(2 * q)))), OagElement(p)})};
    for (std::int64_t i = -3; i <= 0; ++i)
        for (long d : {1L, 5L, 25L}) gens.push_back(g2.element({OagElement(p), OagElement::scalar(p, Rational(Integer(1), Integer(d)), i)}));
    bool ok = true;
    for (const auto& x : gens) ok = ok && g1.contains(map(x)) && g1.compare(map(x), g1.zero()) == g2.compare(x, g2.zero());
    std::mt19937_64 rng(8);
    auto random_element = [&] {
        OagElement fine(p);
        for (std::int64_t i = -3; i <= 0; ++i) {
            const long num = static_cast<long>(rng() % 9) - 4;
            const long den = (rng() % 3 == 0) ? 25 : 1;
            fine += OagElement::scalar(p, Rational(Integer(num), Integer(den)), i);
        }
        const long k = static_cast<long>(rng() % 41) - 20;
        return g2.element({OagElement::scalar(p, Rational(Integer(k), Integer(static_cast<long>(2 * q)))), fine});
    };
    int checked = 0;
    for (int i = 0; i < 100; ++i) {
        const auto x = random_element(), y = random_element();
        ok = ok && g1.contains(map(x)) && map(x + y) == map(x) + map(y) && g1.compare(map(x), map(y)) == g2.compare(x, y);
        ++checked;
    }
    const auto report = scenarios::run_no_mix_ake(scenarios::ScenarioParams{});
    ok = ok && claim_status(report, "value-groups-isomorphic") == scenarios::ClaimStatus::verified;
    return {ok, std::to_string(gens.size()) + " generators, " + std::to_string(checked) + " random pairs"};
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome determinism() {
    const auto dir = std::filesystem::temp_directory_path();
    const auto a = dir / "valfield_acceptance_run1.json";
    const auto b = dir / "valfield_acceptance_run2.json";
    std::filesystem::remove(a);
    std::filesystem::remove(b);
    const std::string cli = VALFIELD_CLI_PATH;
    const int ra = std::system((cli + " verify fully-tame-CAKE --quiet --json " + a.string() + " > /dev/null").c_str());
    const int rb = std::system((cli + " verify fully-tame-CAKE --quiet --json " + b.string() + " > /dev/null").c_str());
    const std::string ja = read_file(a), jb = read_file(b);
    std::filesystem::remove(a);
    std::filesystem::remove(b);
    return {ra == 0 && rb == 0 && !ja.empty() && ja == jb, std::to_string(ja.size()) + " bytes, identical: " + (ja == jb ? "yes" : "no")};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "pointed value groups separate v_1 and v_2 (p = 5, n = 3)", 5, pointed_groups},
        {2, "witness accepted under v_2, refutation under v_1", 5, witness_and_refutation},
        {3, "Witt arithmetic agrees with Z/9, Z/81 and GR(27, 2)", 60, witt_oracles},
        {4, "squareness of x^2 and 2x^2 over F_5(t)", 30, squareness},
        {5, "Hahn monomial square test, exhaustive", 0, hahn_sweep},
        {6, "the four conditions on alpha_1 = t^e1, alpha_2 = t^e2", 0, corollary_conditions},
        {7, "appendix residue-field certificates", 120, appendix},
        {8, "composed value groups isomorphic via the index shift", 0, value_group_isomorphism},
        {9, "verify fully-tame-CAKE --json is byte-identical across runs", 0, determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.limit_seconds == 0 || secs < c.limit_seconds;
        const bool pass = o.pass && in_time;
        if (!pass) ++failures;
        char timing[64];
        if (c.limit_seconds > 0)
            std::snprintf(timing, sizeof timing, "%.3f s, limit %.0f s", secs, c.limit_seconds);
        else
            std::snprintf(timing, sizeof timing, "%.3f s", secs);
        std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.title << " [" << timing
                  << "] " << o.detail << "\n";
    }
    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << "\n";
    return failures == 0 ? 0 : 1;
}

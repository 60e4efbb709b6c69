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

#include <random>

#include "doctest.h"
#include "oracles/brute_force_squares.hpp"
#include "oracles/random_hahn.hpp"
#include "valfield/core/errors.hpp"
#include "valfield/fields/hahn.hpp"
#include "valfield/fields/hahn_sweep.hpp"
#include "valfield/fields/perf_ratfn.hpp"

using namespace valfield;
using namespace valfield::testing;
using oag::ConvexSubgroup;

namespace {

OagElement E(const char* s, std::int64_t p = 5) { return oag::parse_oag(s, p); }

PerfFq random_perf(const FiniteField& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> depth(0, 2);
    return PerfFq(random_ratfn(f, 3, rng), depth(rng));
}

PerfFq random_nonzero_perf(const FiniteField& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> depth(0, 2);
    return PerfFq(random_nonzero_ratfn(f, 3, rng), depth(rng));
}

// Agreement of r^2 and x below the working precision.
bool squares_to(const HahnElt& r, const HahnElt& x) {
    const HahnElt d = r * r - x;
    return d.terms().empty();
}

}  // namespace

TEST_CASE("perfect closure keeps depth canonical") {
    const auto& f5 = FiniteField::get(5);
    const PerfFq t = PerfFq::variable(f5.one());
    const PerfFq r = PerfFq::variable_root(f5.one(), 2);  // t^(1/25)
    CHECK(r.depth() == 2);
    CHECK(r.frobenius().depth() == 1);
    CHECK(r.frobenius().frobenius() == t);
    CHECK(t.frobenius_inverse() == PerfFq::variable_root(f5.one(), 1));
    CHECK(r.to_string() == "t^(1/25)");
    CHECK((r * r * r * r * r).depth() == 1);
    CHECK(variable_adic_valuation(r) == Rational(Integer(1), Integer(25)));
    CHECK(variable_adic_valuation(t.inverse()) == Rational(-1));
    CHECK_THROWS_AS(PerfFq(RatFn<FinFieldElt>::variable(f5.one()), -1), DomainError);
}

TEST_CASE("perfect closure arithmetic across depths matches common-depth arithmetic") {
    std::mt19937_64 rng(31);
    for (std::int64_t p : {3, 5}) {
        const auto& f = FiniteField::get(p);
        for (int trial = 0; trial < 60; ++trial) {
            const auto a = random_perf(f, rng), b = random_nonzero_perf(f, rng), c = random_perf(f, rng);
            const int m = std::max(a.depth(), b.depth());
            CHECK((a + b) == PerfFq(a.body_at_depth(m) + b.body_at_depth(m), m));
            CHECK((a * b) == PerfFq(a.body_at_depth(m) * b.body_at_depth(m), m));
            CHECK((a / b) * b == a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a.frobenius().frobenius_inverse() == a);
            CHECK(a.frobenius() == a * a * a * (p == 5 ? a * a : a.one_like()));
        }
    }
}

TEST_CASE("square classes in the perfect closure") {
    const auto& f5 = FiniteField::get(5);
    const PerfFq t = PerfFq::variable(f5.one());
    const PerfFq one = t.one_like();
    CHECK_FALSE(is_square_perf(t));
    CHECK(is_square_perf(t * t));
    // t^(1/5) is not a square but t^(6/5) = (t^(3/5))^2 is.
    CHECK_FALSE(is_square_perf(PerfFq::variable_root(f5.one(), 1)));
    CHECK(is_square_perf(PerfFq::variable_root(f5.one(), 1) * t));
    CHECK_FALSE(is_square_perf(t * t * t + one));
    CHECK_FALSE(is_square_perf(t * (t * t * t + one)));
    CHECK(is_square_perf(PerfFq::constant(f5.from_integer(4))));
    CHECK_FALSE(is_square_perf(PerfFq::constant(f5.from_integer(2))));
    // u^6 + 1 over F_5(u)
    const PerfFq u = PerfFq::variable(f5.one(), 'u');
    CHECK_FALSE(is_square_perf(u * u * u * u * u * u + u.one_like()));
    CHECK_THROWS_AS(is_square_perf(t.zero_like()), DomainError);

    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 100; ++trial) {
        const auto x = random_nonzero_perf(f5, rng);
        CHECK(is_square_perf(x * x));
        CHECK_FALSE(is_square_perf(x * x * PerfFq::constant(f5.nonsquare())));
        // squareness is unchanged by Frobenius (p odd)
        CHECK(is_square_perf(x) == is_square_perf(x.frobenius()));
    }
}

TEST_CASE("two-variable perfect closure: valuations and the swap automorphism") {
    for (std::int64_t p : {3, 5}) {
        const auto& f = FiniteField::get(p);
        const PerfFq2 t = two_var_t(f), s = two_var_s(f);
        CHECK(variable_adic_valuation(t) == Rational(1));
        CHECK(variable_adic_valuation(s) == Rational(0));
        CHECK(coefficient_adic_valuation(t) == Rational(0));
        CHECK(coefficient_adic_valuation(s) == Rational(1));
        CHECK(coefficient_adic_valuation(s.frobenius_inverse() * t) == Rational(Integer(1), Integer(p)));
        CHECK(swap_variables(t) == s);
        CHECK(swap_variables(s) == t);
        CHECK_FALSE(is_square_perf(t));
        CHECK_FALSE(is_square_perf(s));
        CHECK_FALSE(is_square_perf(t * s));
        CHECK(is_square_perf(t * t * s * s));

        const PerfFq2 one = t.one_like();
        const std::vector<PerfFq2> sample = {
            t + s, t * s + one, (t - s) / (t * t + s), t.frobenius_inverse() + s, (s.frobenius_inverse() - one) * t,
            (t + one).frobenius_inverse().frobenius_inverse() / s};
        for (const auto& x : sample) {
            CHECK(swap_variables(swap_variables(x)) == x);
            CHECK(variable_adic_valuation(swap_variables(x)) == coefficient_adic_valuation(x));
            for (const auto& y : sample) {
                CHECK(swap_variables(x + y) == swap_variables(x) + swap_variables(y));
                CHECK(swap_variables(x * y) == swap_variables(x) * swap_variables(y));
            }
        }
    }
}

TEST_CASE("Hahn arithmetic examples") {
    const auto& f5 = FiniteField::get(5);
    const HahnElt a1 = HahnElt::basis_monomial(f5, 1), a2 = HahnElt::basis_monomial(f5, 2);
    const HahnElt one = a1.one_like();
    CHECK(a1 * a2 == HahnElt::monomial(f5.one(), E("e1 + e2")));
    CHECK((a1 + a2) + (-(a1 + a2)) == a1.zero_like());

    const HahnElt inv = hahn_inv(one - a2, 3);
    CHECK(inv.to_string() == "1 + 1*t^[e2] + 1*t^[2*e2] (prec 3*e2)");
    CHECK((inv * (one - a2)).truncated(E("3*e2")) == one.truncated(E("3*e2")));

    CHECK(hahn_valuation(a1) == E("e1"));
    CHECK(hahn_valuation(HahnElt::constant(f5.from_integer(3))) == E("0"));
    CHECK(hahn_valuation(a1 + a2) == E("e2"));
    CHECK_THROWS_AS(hahn_valuation(a1.zero_like()), DomainError);
    CHECK_THROWS_AS(hahn_valuation(HahnElt(f5).truncated(E("e3"))), InsufficientPrecision);
    CHECK_THROWS_AS(hahn_inv(HahnElt(f5).truncated(E("e3")), 3), InsufficientPrecision);
    CHECK_THROWS_AS(a1 / (one - a2), DomainError);
    CHECK(a1 / a2 == HahnElt::monomial(f5.one(), E("e1 - e2")));

    const auto lt = leading_term(HahnElt::monomial(f5.from_integer(3), E("e1")) + HahnElt::basis_monomial(f5, 0));
    CHECK(lt.exponent == E("e1"));
    CHECK(lt.coefficient == f5.from_integer(3));
    CHECK(leading_term(one) == LeadingTerm{E("0"), f5.one()});
}

TEST_CASE("Hahn precision degradation rules") {
    const auto& f5 = FiniteField::get(5);
    const HahnElt x = parse_hahn("2*t^[e2] + 1*t^[e1] (prec e0)", f5);
    const HahnElt y = parse_hahn("3*t^[e3] (prec 2*e3)", f5);
    CHECK((x + y).precision() == E("2*e3"));
    CHECK((x * y).precision() == E("e2 + 2*e3"));  // min(P_x + v(y), P_y + v(x)) = min(e0 + e3, 2e3 + e2)
    const HahnElt exact = HahnElt::basis_monomial(f5, 4);
    CHECK((x * exact).precision() == E("e0 + e4"));
    CHECK((exact + exact).is_exact());
}

TEST_CASE("Hahn square test") {
    const auto& f5 = FiniteField::get(5);
    const HahnElt a1 = HahnElt::basis_monomial(f5, 1), a2 = HahnElt::basis_monomial(f5, 2);
    CHECK_FALSE(hahn_is_square(a1 / a2).is_square);
    const auto g = E("3/p*e1 - e2");
    const auto sq = hahn_is_square(HahnElt::monomial(f5.one(), 2 * g));
    CHECK(sq.is_square);
    CHECK(*sq.half_valuation == g);
    CHECK(*sq.root == HahnElt::monomial(f5.one(), g));

    const HahnElt x = HahnElt::constant(f5.from_integer(4)) * (a1.one_like() + a2);
    const auto r = hahn_is_square(x, 4);
    REQUIRE(r.is_square);
    // 2 (1 + 3 t^{e2} + ...): binom(1/2, 1) = 1/2 = 3 in F_5
    CHECK(r.root->terms().at(E("0")) == f5.from_integer(2));
    CHECK(r.root->terms().at(E("e2")) == f5.from_integer(1));
    CHECK(*r.root->precision() == E("4*e2"));
    CHECK(squares_to(*r.root, x));
    CHECK_THROWS_AS(hahn_sqrt(a1, 3), DomainError);

    SUBCASE("square of random series") {
        std::mt19937_64 rng(33);
        for (std::int64_t p : {3, 5, 7}) {
            const auto& f = FiniteField::get(p);
            for (int trial = 0; trial < 80; ++trial) {
                const auto y = random_nonzero_hahn(f, rng, 3);
                const auto test = hahn_is_square(y * y, 5);
                REQUIRE(test.is_square);
                CHECK(squares_to(*test.root, y * y));
            }
        }
    }
}

TEST_CASE("Hahn square test on monomials matches divisibility and residue squares") {
    const auto& f5 = FiniteField::get(5);
    const std::int64_t p = 5;
    std::vector<Rational> values;
    for (int n = -2; n <= 2; ++n)
        for (int d : {1, 5, 25}) values.emplace_back(Integer(n), Integer(d));
    for (const auto& a : values)
        for (const auto& b : values)
            for (const auto& c : values) {
                OagElement g(p);
                g += OagElement::scalar(p, a, 0);
                g += OagElement::scalar(p, b, 1);
                g += OagElement::scalar(p, c, 2);
                // p odd: g/2 stays in Z[1/p] iff every numerator is even
                bool even = true;
                for (const auto& [i, q] : g.coords())
                    if (q.num() % 2 != 0) even = false;
                for (std::int64_t ci = 1; ci < 5; ++ci) {
                    const auto coef = f5.element(ci);
                    const bool expected = even && brute_force_constant_square(coef);
                    CHECK(hahn_is_square(HahnElt::monomial(coef, g)).is_square == expected);
                }
            }
}

TEST_CASE("Hahn valuation axioms and leading terms") {
    std::mt19937_64 rng(34);
    for (std::int64_t p : {3, 5}) {
        const auto& f = FiniteField::get(p);
        for (int trial = 0; trial < 200; ++trial) {
            const auto x = random_nonzero_hahn(f, rng), y = random_nonzero_hahn(f, rng);
            CHECK(hahn_valuation(x * y) == hahn_valuation(x) + hahn_valuation(y));
            const auto lx = leading_term(x), ly = leading_term(y);
            CHECK(leading_term(x * y) == LeadingTerm{lx.exponent + ly.exponent, lx.coefficient * ly.coefficient});
            const auto s = x + y;
            if (!s.is_zero()) {
                const auto m = std::min(hahn_valuation(x), hahn_valuation(y));
                CHECK(hahn_valuation(s) >= m);
                if (!(hahn_valuation(x) == hahn_valuation(y))) CHECK(hahn_valuation(s) == m);
            }
            const auto inv = hahn_inv(x, 4);
            const auto prod = x * inv - x.one_like();
            CHECK(prod.terms().empty());
            CHECK(x.frobenius().frobenius_inverse() == x);
        }
    }
}

TEST_CASE("coarsened valuations and the index shift") {
    const auto& f5 = FiniteField::get(5);
    const HahnElt a1 = HahnElt::basis_monomial(f5, 1), a2 = HahnElt::basis_monomial(f5, 2);
    const ConvexSubgroup d1{1};
    CHECK(coarsen_hahn_valuation(a2, d1).is_zero());
    CHECK(coarsen_hahn_valuation(a1, d1) == E("e1"));
    CHECK_FALSE(oag::divisible_by(coarsen_hahn_valuation(a1, d1), 2));
    CHECK(coarsen_hahn_valuation(HahnElt::constant(f5.from_integer(2)), d1).is_zero());

    CHECK(perf_field_automorphism_shift(a1) == a2);
    const HahnElt c = HahnElt::constant(f5.from_integer(3));
    CHECK(perf_field_automorphism_shift(c) == c);

    std::mt19937_64 rng(35);
    for (int trial = 0; trial < 200; ++trial) {
        const auto x = random_nonzero_hahn(f5, rng), y = random_nonzero_hahn(f5, rng);
        const auto phi = [](const HahnElt& h) { return perf_field_automorphism_shift(h); };
        CHECK(phi(x + y) == phi(x) + phi(y));
        CHECK(phi(x * y) == phi(x) * phi(y));
        CHECK(hahn_valuation(phi(x)) == hahn_valuation(x).shifted(1));
        // nu_1(phi(x)) read back through the index shift is the Delta_0 coarsening of x
        CHECK(coarsen_hahn_valuation(phi(x), ConvexSubgroup{1}) ==
              coarsen_hahn_valuation(x, ConvexSubgroup{0}).shifted(1));
    }
}

TEST_CASE("Hahn text round-trip") {
    const auto& f5 = FiniteField::get(5);
    const HahnElt x = parse_hahn("3*t^[e1] + 1*t^[2*e2] (prec e0)", f5);
    CHECK(x.terms().size() == 2);
    CHECK(*x.precision() == E("e0"));
    // e5 < 2*e2: terms at or beyond the cutoff are rejected, not dropped
    CHECK_THROWS_AS(parse_hahn("3*t^[e1] + 1*t^[2*e2] (prec e5)", f5), DomainError);
    CHECK(parse_hahn(x.to_string(), f5) == x);
    CHECK(parse_hahn("0", f5).is_zero());
    CHECK(parse_hahn("2", f5) == HahnElt::constant(f5.from_integer(2)));
    CHECK_THROWS_AS(parse_hahn("3*t^[e1", f5), DomainError);

    const auto& f9 = FiniteField::get(3, 2);
    const HahnElt z = HahnElt::monomial(f9.generator() + f9.one(), oag::parse_oag("e0 - e3", 3));
    CHECK(z.to_string() == "(x+1)*t^[e0 - e3]");
    CHECK(parse_hahn(z.to_string(), f9) == z);

    std::mt19937_64 rng(36);
    for (int trial = 0; trial < 200; ++trial) {
        auto h = random_hahn(f5, rng);
        if (trial % 2) h = h.truncated(testing::random_gamma(rng, 5, 0, 4));
        CHECK(parse_hahn(h.to_string(), f5) == h);
    }
}

TEST_CASE("exhaustive Hahn monomial square sweep against an independent oracle") {
    for (std::int64_t p : {3, 5}) {
        CAPTURE(p);
        HahnSweepRange range;
        range.p = p;
        const auto exps = sweep_exponents(range);
        // Distinct values n/p^k with |n| <= 2, k <= 2: 0, +-1, +-2 and +-1, +-2 over p, p^2.
        CHECK(exps.size() == 13u * 13u * 13u);
        const auto& f = FiniteField::get(p);
        std::int64_t expected_squares = 0;
        for (const auto& g : exps) {
            // 2-divisible in Z[1/p] (p odd) iff every reduced numerator is even.
            bool even = true;
            for (const auto& [i, c] : g.coords()) even = even && c.num() % 2 == 0;
            for (std::int64_t ci = 1; ci < p; ++ci) {
                bool square = false;
                for (std::int64_t y = 1; y < p; ++y) square = square || (y * y - ci) % p == 0;
                if (even && square) ++expected_squares;
                CHECK(hahn_is_square(HahnElt::monomial(f.element(ci), g)).is_square == (even && square));
            }
        }
        const auto serial = sweep_hahn_squares_serial(range);
        CHECK(serial.mismatches.empty());
        CHECK(serial.cases == static_cast<std::int64_t>(exps.size()) * (p - 1));
        CHECK(serial.squares == expected_squares);
        CHECK(serial == sweep_hahn_squares_parallel(range));
    }
}

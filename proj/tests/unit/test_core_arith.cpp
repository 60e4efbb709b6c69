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
#include "oracles/random_elements.hpp"
#include "valfield/core/rational.hpp"
#include "valfield/core/squarefree.hpp"

using namespace valfield;
using namespace valfield::testing;

namespace {

using Fq = FinFieldElt;
using Poly = Polynomial<Fq>;

Poly poly(const FiniteField& f, std::vector<std::int64_t> c, char var = 't') {
    std::vector<Fq> out;
    for (auto x : c) out.push_back(f.from_integer(x));
    return Poly(out, f.zero(), var);
}

}  // namespace

TEST_CASE("rational arithmetic stays canonical") {
    Rational a(Integer(6), Integer(-4));
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    CHECK(a + Rational(Integer(3), Integer(2)) == Rational(0));
    CHECK((a * a).to_string() == "9/4");
    CHECK(Rational(Integer(-7), Integer(2)).floor() == -4);
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), DomainError);
    CHECK(exact_power_exponent(Integer(125), 5) == 3);
    CHECK(exact_power_exponent(Integer(50), 5) == -1);
}

TEST_CASE("finite field construction") {
    CHECK_THROWS_AS(FiniteField::get(2), DomainError);
    CHECK_THROWS_AS(FiniteField::get(9), DomainError);
    const auto& f9 = FiniteField::get(3, 2);
    CHECK(f9.order() == 9);
    CHECK(&f9 == &FiniteField::get(3, 2));
    // x^2 + 1 is the first monic irreducible quadratic over F_3.
    CHECK(f9.modulus() == std::vector<std::int64_t>{1, 0, 1});
    const auto x = f9.generator();
    CHECK((x * x + f9.one()).is_zero());
}

TEST_CASE("finite_field_square examples") {
    const auto& f5 = FiniteField::get(5);
    CHECK(finite_field_square(f5.from_integer(4)));
    CHECK_FALSE(finite_field_square(f5.from_integer(2)));
    for (std::int64_t p : {3, 5, 7}) CHECK(finite_field_square(FiniteField::get(p).one()));
    CHECK_THROWS_AS(finite_field_square(f5.zero()), DomainError);
}

TEST_CASE("finite_field_square agrees with exhaustive squaring") {
    for (auto [p, k] : {std::pair{3, 1}, {5, 1}, {7, 1}, {3, 2}, {5, 2}, {3, 3}}) {
        const auto& f = FiniteField::get(p, k);
        for (std::int64_t i = 1; i < f.order(); ++i) {
            const auto a = f.element(i);
            CHECK(finite_field_square(a) == brute_force_constant_square(a));
            if (finite_field_square(a)) {
                const auto r = finite_field_sqrt(a);
                CHECK(r * r == a);
            }
        }
    }
}

TEST_CASE("field axioms and Frobenius bijectivity") {
    std::mt19937_64 rng(11);
    for (auto [p, k] : {std::pair{3, 2}, {5, 1}, {7, 2}}) {
        const auto& f = FiniteField::get(p, k);
        for (int trial = 0; trial < 200; ++trial) {
            const auto a = random_elt(f, rng), b = random_elt(f, rng), c = random_elt(f, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == f.zero());
            if (!a.is_zero()) CHECK(a * a.inverse() == f.one());
            CHECK(a.frobenius_inverse().frobenius() == a);
            CHECK(a.frobenius().frobenius_inverse() == a);
        }
        std::vector<bool> seen(static_cast<std::size_t>(f.order()), false);
        for (const auto& a : f.elements()) seen[static_cast<std::size_t>(a.frobenius().index())] = true;
        for (bool s : seen) CHECK(s);
    }
}

TEST_CASE("rational function field axioms") {
    std::mt19937_64 rng(12);
    const auto& f5 = FiniteField::get(5);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_ratfn(f5, 3, rng), b = random_ratfn(f5, 3, rng), c = random_ratfn(f5, 3, rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        if (!a.is_zero()) CHECK(a / a == a.one_like());
        CHECK(a.den().leading() == f5.one());
        CHECK(gcd(a.num(), a.den()).degree() == 0);
    }
}

TEST_CASE("squarefree_decompose examples") {
    const auto& f5 = FiniteField::get(5);
    SUBCASE("t^2 -> (t, 2)") {
        auto sf = squarefree_decompose(poly(f5, {0, 0, 1}));
        REQUIRE(sf.size() == 1);
        CHECK(sf[0].factor == poly(f5, {0, 1}));
        CHECK(sf[0].multiplicity == 2);
    }
    SUBCASE("u^6 + 1 is squarefree") {
        const auto f = poly(f5, {1, 0, 0, 0, 0, 0, 1}, 'u');
        CHECK(gcd(f, f.derivative()).degree() == 0);
        for (const auto& sf : squarefree_decompose(f)) CHECK(sf.multiplicity == 1);
    }
    SUBCASE("Frobenius path t^p -> (t, p)") {
        for (std::int64_t p : {3, 5, 7}) {
            const auto& f = FiniteField::get(p);
            auto sf = squarefree_decompose(Poly::monomial(f.one(), static_cast<std::size_t>(p)));
            REQUIRE(sf.size() == 1);
            CHECK(sf[0].factor == poly(f, {0, 1}));
            CHECK(sf[0].multiplicity == p);
        }
    }
    SUBCASE("zero rejected") { CHECK_THROWS_AS(squarefree_decompose(Poly(f5.zero())), DomainError); }
    SUBCASE("mixed multiplicities beyond p") {
        // (t+1)^7 (t+2)^5 (t+3) over F_5: multiplicity 7 straddles p.
        const auto a = poly(f5, {1, 1}), b = poly(f5, {2, 1}), c = poly(f5, {3, 1});
        Poly f = c;
        for (int i = 0; i < 7; ++i) f = f * a;
        for (int i = 0; i < 5; ++i) f = f * b;
        auto sf = squarefree_decompose(f.scaled(f5.from_integer(3)));
        Poly product = Poly::constant(f5.one());
        for (const auto& s : sf)
            for (int i = 0; i < s.multiplicity; ++i) product = product * s.factor;
        CHECK(product == f);
        REQUIRE(sf.size() == 3);
        CHECK(sf[0].multiplicity == 1);
        CHECK(sf[1].multiplicity == 5);
        CHECK(sf[2].multiplicity == 7);
    }
}

TEST_CASE("squarefree_decompose raises multiplicities of g by two in f*g^2") {
    std::mt19937_64 rng(13);
    const auto& f3 = FiniteField::get(3);
    int checked = 0;
    while (checked < 60) {
        const auto f = random_nonzero_poly(f3, 5, rng).monic();
        const auto g = random_nonzero_poly(f3, 3, rng).monic();
        if (f.degree() < 1 || g.degree() < 1 || gcd(f, g).degree() > 0) continue;
        // Squarefree g keeps the expected factor multiplicities readable.
        if (gcd(g, g.derivative()).degree() > 0) continue;
        ++checked;
        const auto base = squarefree_decompose(f);
        const auto with = squarefree_decompose(f * g * g);
        auto multiplicity_of = [](const auto& sf, const Poly& irreducible_part) {
            for (const auto& s : sf)
                if (gcd(s.factor, irreducible_part).degree() > 0) return s.multiplicity;
            return std::int64_t{0};
        };
        CHECK(multiplicity_of(with, g) == 2);
        for (const auto& s : base) CHECK(multiplicity_of(with, s.factor) == s.multiplicity);
    }
}

TEST_CASE("is_square_perf examples") {
    const auto& f5 = FiniteField::get(5);
    using R = RatFn<Fq>;
    SUBCASE("(t+1)^2 over F_5") { CHECK(is_square_perf(R(poly(f5, {1, 2, 1})))); }
    SUBCASE("t^3 + 1 over F_5") {
        const auto f = poly(f5, {1, 0, 0, 1});
        for (const auto& sf : squarefree_decompose(f)) CHECK(sf.multiplicity == 1);
        CHECK_FALSE(is_square_perf(R(f)));
    }
    SUBCASE("t*s over F_3(s)(t)") {
        const auto& f3 = FiniteField::get(3);
        using Inner = RatFn<Fq>;
        using Outer = RatFn<Inner>;
        const Inner s = Inner::variable(f3.one(), 's');
        const Inner zero = s.zero_like();
        const Outer t = Outer::variable(zero, 't');
        const Outer s_outer = Outer::constant(s, 't');
        CHECK_FALSE(is_square_perf(t * s_outer));
        CHECK_FALSE(is_square_perf(s_outer));
        CHECK(is_square_perf(t * t * s_outer * s_outer));
        // inseparable branch: t^3 - s is a cube root of nothing in F_3(s), odd multiplicity.
        const Outer insep = t * t * t - s_outer;
        CHECK_FALSE(is_square_perf(insep));
        CHECK(is_square_perf(insep * insep));
    }
    SUBCASE("zero rejected") { CHECK_THROWS_AS(is_square_perf(R(Poly(f5.zero()))), DomainError); }
}

TEST_CASE("is_square_perf agrees with the enumeration oracle") {
    std::mt19937_64 rng(14);
    for (std::int64_t p : {3, 5}) {
        const auto& f = FiniteField::get(p);
        for (int trial = 0; trial < 150; ++trial) {
            const auto n = random_nonzero_poly(f, 4, rng);
            CHECK(is_square_polynomial(n) == brute_force_polynomial_square(n));
        }
    }
}

TEST_CASE("is_square_perf of x^2 * c follows finite_field_square(c)") {
    std::mt19937_64 rng(15);
    const auto& f7 = FiniteField::get(7);
    for (int trial = 0; trial < 100; ++trial) {
        const auto x = random_nonzero_ratfn(f7, 3, rng);
        const auto c = random_nonzero(f7, rng);
        CHECK(is_square_perf(x * x));
        CHECK(is_square_perf(x * x * RatFn<Fq>::constant(c)) == finite_field_square(c));
    }
}

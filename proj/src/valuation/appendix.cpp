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

#include "valfield/valuation/appendix.hpp"

#include "valfield/core/errors.hpp"
#include "valfield/core/squarefree.hpp"

namespace valfield::valuation {

namespace {

using Poly = Polynomial<FinFieldElt>;

PerfFq t_of(const PerfFq& like) { return PerfFq::variable(like.body().num().zero_coeff(), like.var()); }

// Polynomial with coefficients given by the base-p digits of `index`, length len.
Poly digits_poly(const FiniteField& f, std::int64_t index, int len, char var) {
    std::vector<FinFieldElt> c;
    for (int i = 0; i < len; ++i) {
        c.push_back(f.from_integer(index % f.characteristic()));
        index /= f.characteristic();
    }
    return Poly(c, f.zero(), var);
}

struct SearchSpace {
    const FiniteField* f;
    int bound;
    std::int64_t numerators;
    std::vector<Poly> denominators;  // monic, degree <= bound
};

SearchSpace make_space(std::int64_t p, int bound) {
    if (bound < 0 || bound > 3) throw DomainError("search bound must be in 0..3");
    const auto& f = FiniteField::get(p);
    SearchSpace s{&f, bound, 1, {}};
    for (int i = 0; i <= bound; ++i) s.numerators *= p;
    for (int d = 0; d <= bound; ++d) {
        std::int64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::int64_t k = 0; k < count; ++k) {
            Poly b = digits_poly(f, k, d, 'u') + Poly::monomial(f.one(), static_cast<std::size_t>(d), 'u');
            s.denominators.push_back(b);
        }
    }
    return s;
}

// Returns the formatted X if candidate number idx is a nonconstant solution.
// X^3 + 1 = (a^3 + b^3) / b^3 is a square iff (a^3 + b^3) b is.
std::optional<std::string> test_candidate(const SearchSpace& s, std::int64_t idx, bool& counted) {
    counted = false;
    const auto& b = s.denominators[static_cast<std::size_t>(idx / s.numerators)];
    const Poly a = digits_poly(*s.f, idx % s.numerators, s.bound + 1, 'u');
    if (a.is_zero() && b.degree() > 0) return std::nullopt;  // 0/b is not reduced
    if (b.degree() == 0 && a.degree() <= 0) return std::nullopt;  // constant X
    if (gcd(a, b).degree() > 0) return std::nullopt;
    counted = true;
    const Poly lhs = (a * a * a + b * b * b) * b;
    if (lhs.is_zero() || !is_square_polynomial(lhs)) return std::nullopt;
    return RatFn<FinFieldElt>(a, b).to_string();
}

}  // namespace

OmegaTwoClass omega_two(const RamifiedQuadratic& ext) {
    if (!ext.c.value.is_zero() || ext.c.residue.is_zero()) {
        throw DomainError("omega_two needs a unit c");
    }
    OmegaTwoClass out{ext.c.residue, {}};
    out.certificate.push_back("a = sqrt(p*c) in " + ext.name + ": a^2/p = c with v(c) = 0");
    out.certificate.push_back("residue of a^2/p is " + ext.c.residue.to_string());
    out.certificate.push_back("Omega_2 = " + ext.c.residue.to_string() + " * (F^x)^2");
    return out;
}

bool same_square_class(const OmegaTwoClass& a, const OmegaTwoClass& b) {
    return is_square_perf(a.representative / b.representative);
}

oag::PointedGroup ramified_quadratic_pointed_group(const RamifiedQuadratic& ext, std::optional<int> depth) {
    const std::int64_t p = ext.c.residue.characteristic();
    const Rational vpc = Rational(1) + ext.c.value;
    const oag::ValueGroup base(oag::Layer::rank_one(p, 1, std::nullopt));
    if (base.divisible_by(base.element(oag::OagElement::scalar(p, vpc)), 2)) {
        throw DomainError("v(p c) is 2-divisible; the extension is not ramified");
    }
    const oag::ValueGroup group(oag::Layer::rank_one(p, 2, depth));
    return {group, group.element(oag::OagElement::scalar(p, Rational(1)))};
}

QuadraticExtension::QuadraticExtension(PerfFq radicand) : r_(std::move(radicand)) {
    if (r_.is_zero()) throw DomainError("zero radicand");
    if (is_square_perf(r_)) throw DomainError("radicand " + r_.to_string() + " is a square; extension is degenerate");
}

std::array<std::array<QuadraticExtension::Elt, 2>, 2> QuadraticExtension::multiplication_table() const {
    const Elt one = embed(r_.one_like());
    const Elt s = root();
    return {{{mul(one, one), mul(one, s)}, {mul(s, one), mul(s, s)}}};
}

std::optional<QuadraticExtension::Elt> QuadraticExtension::sqrt_of_base(const PerfFq& z) const {
    if (z.is_zero()) return embed(z);
    // sqrt(n/d) = sqrt(n d)/d, and n d is a square polynomial exactly when n/d is a square.
    auto root_in_f = [](const PerfFq& x) -> std::optional<PerfFq> {
        if (!is_square_perf(x)) return std::nullopt;
        const Poly& den = x.body().den();
        const Poly nd = x.body().num() * den;
        Poly root = Poly::constant(finite_field_sqrt(nd.leading()), nd.var());
        for (const auto& fac : squarefree_decompose(nd)) {
            for (std::int64_t i = 0; i < fac.multiplicity / 2; ++i) root = root * fac.factor;
        }
        return PerfFq(RatFn<FinFieldElt>(root, den), x.depth());
    };
    if (const auto y = root_in_f(z)) return Elt{*y, z.zero_like()};
    if (const auto y = root_in_f(z / r_)) return Elt{z.zero_like(), *y};
    return std::nullopt;
}

std::string QuadraticExtension::describe() const {
    return "F(sqrt(" + r_.to_string() + ")), F = F_" + std::to_string(r_.characteristic()) +
           "(t)^perf, basis {1, sqrt(r)}, sqrt(r)^2 = " + r_.to_string();
}

std::string QuadraticExtension::format(const Elt& x) const {
    return "(" + x.a.to_string() + ") + (" + x.b.to_string() + ")*sqrt(" + r_.to_string() + ")";
}

CurveSearchResult search_curve_points_serial(std::int64_t p, int bound) {
    const SearchSpace s = make_space(p, bound);
    const auto total = static_cast<std::int64_t>(s.denominators.size()) * s.numerators;
    CurveSearchResult out;
    for (std::int64_t idx = 0; idx < total; ++idx) {
        bool counted = false;
        if (auto sol = test_candidate(s, idx, counted)) out.solutions.push_back(*sol);
        if (counted) ++out.candidates;
    }
    return out;
}

CurveSearchResult search_curve_points_parallel(std::int64_t p, int bound) {
    const SearchSpace s = make_space(p, bound);
    const auto total = static_cast<std::int64_t>(s.denominators.size()) * s.numerators;
    std::vector<std::optional<std::string>> found(static_cast<std::size_t>(total));
    std::int64_t candidates = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : candidates)
    for (std::int64_t idx = 0; idx < total; ++idx) {
        bool counted = false;
        found[static_cast<std::size_t>(idx)] = test_candidate(s, idx, counted);
        if (counted) ++candidates;
    }
    CurveSearchResult out;
    out.candidates = candidates;
    for (auto& sol : found) {
        if (sol) out.solutions.push_back(std::move(*sol));
    }
    return out;
}

std::int64_t affine_points_by_enumeration(std::int64_t p) {
    const auto& f = FiniteField::get(p);
    std::int64_t count = 0;
    for (const auto& x : f.elements()) {
        for (const auto& y : f.elements()) {
            if (y * y == x * x * x + f.one()) ++count;
        }
    }
    return count;
}

std::int64_t affine_points_by_character_sum(std::int64_t p) {
    const auto& f = FiniteField::get(p);
    std::int64_t sum = p;
    for (const auto& x : f.elements()) {
        const auto v = x * x * x + f.one();
        if (v.is_zero()) continue;
        sum += finite_field_square(v) ? 1 : -1;
    }
    return sum;
}

ResidueExtensionReport quadratic_residue_extension_check(const QuadraticExtension& ext, int search_bound,
                                                         bool parallel) {
    ResidueExtensionReport out;
    out.field = ext.describe();
    const PerfFq t = t_of(ext.radicand());
    const PerfFq rhs = t * t * t + t.one_like();
    if (const auto y = ext.sqrt_of_base(rhs)) {
        const auto y2 = ext.mul(*y, *y);
        out.t_point = y2 == ext.embed(rhs);
        out.t_point_certificate = "Y = " + ext.format(*y) + ", Y^2 = " + ext.format(y2) + " = t^3 + 1";
    } else {
        out.t_point = false;
        out.t_point_certificate = "neither t^3+1 nor (t^3+1)/r is a square in F";
    }
    if (ext.radicand() == t) {
        const FinFieldElt one = t.body().num().zero_coeff().one_like();
        const Poly u6 = Poly::monomial(one, 6, 'u') + Poly::constant(one, 'u');
        out.u6_plus_1_square = is_square_perf(RatFn<FinFieldElt>(u6));
        out.search_bound = search_bound;
        out.search = parallel ? search_curve_points_parallel(t.characteristic(), search_bound)
                              : search_curve_points_serial(t.characteristic(), search_bound);
    }
    return out;
}

FundamentalEquality degree_four_bookkeeping(const RamifiedQuadratic& ext) {
    const auto pg = ramified_quadratic_pointed_group(ext, std::nullopt);
    FundamentalEquality out;
    out.degree = 4;
    // [(1/(2p^inf))Z : Z[1/p]] is the ratio of base denominators.
    out.ramification_index = static_cast<int>(pg.group.layers().front().base_denominator);
    out.residue_degree = QuadraticExtension(ext.c.residue).degree();
    return out;
}

}  // namespace valfield::valuation

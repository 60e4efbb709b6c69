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

#ifndef VALFIELD_VALUATION_APPENDIX_HPP
#define VALFIELD_VALUATION_APPENDIX_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "valfield/fields/perf_ratfn.hpp"
#include "valfield/oag/value_group.hpp"

namespace valfield::valuation {

/**
 * An element of a tame base field (K_1, v_1) with v_1 K_1 = Z[1/p] and
 * residue field F = F_p(t)^perf, known through its value and the residue of
 * its unit part. This is all the quadratic-extension arguments below use.
 */
struct LeadingData {
    Rational value;
    PerfFq residue;
};

/// K_1(sqrt(p c)) for an element c of K_1.
struct RamifiedQuadratic {
    std::string name;
    LeadingData c;
};

struct OmegaTwoClass {
    PerfFq representative;
    std::vector<std::string> certificate;
};

/// Omega_2 of K_1(sqrt(p c)) for a unit c: the square class of res(c), since
/// a = sqrt(p c) has a^2/p = c. Throws DomainError if c is not a unit.
OmegaTwoClass omega_two(const RamifiedQuadratic& ext);
/// Equal classes iff the ratio of representatives is a square in F.
bool same_square_class(const OmegaTwoClass& a, const OmegaTwoClass& b);

/// (value group, v(p)) of K_1(sqrt(p c)): v(p c) = 1 is not 2-divisible in
/// Z[1/p], so the extension is ramified with group (1/(2p^depth))Z, where
/// depth = nullopt stands for p^inf. Throws DomainError if v(p c) is 2-divisible.
oag::PointedGroup ramified_quadratic_pointed_group(const RamifiedQuadratic& ext, std::optional<int> depth);

/// F(sqrt r) as the rank-2 F-module with basis 1, sqrt(r).
class QuadraticExtension {
   public:
    struct Elt {
        PerfFq a;  // coefficient of 1
        PerfFq b;  // coefficient of sqrt(r)
        friend bool operator==(const Elt&, const Elt&) = default;
    };

    /// Throws DomainError if r is zero or a square in F.
    explicit QuadraticExtension(PerfFq radicand);

    const PerfFq& radicand() const { return r_; }
    int degree() const { return 2; }
    Elt embed(const PerfFq& x) const { return {x, x.zero_like()}; }
    Elt root() const { return {r_.zero_like(), r_.one_like()}; }
    Elt add(const Elt& x, const Elt& y) const { return {x.a + y.a, x.b + y.b}; }
    Elt mul(const Elt& x, const Elt& y) const { return {x.a * y.a + r_ * x.b * y.b, x.a * y.b + x.b * y.a}; }
    /// Products of the basis elements: [[1, sqrt r], [sqrt r, r]].
    std::array<std::array<Elt, 2>, 2> multiplication_table() const;
    /// For z in F: (a + b sqrt r)^2 in F forces ab = 0, so z is a square in
    /// F(sqrt r) iff z or z r is a square in F. Returns a root when one exists.
    std::optional<Elt> sqrt_of_base(const PerfFq& z) const;
    std::string describe() const;
    std::string format(const Elt& x) const;

   private:
    PerfFq r_;
};

/// Nonconstant X in F_p(u) of height <= bound (X = a/b, deg a, deg b <= bound,
/// b monic, gcd 1) with X^3 + 1 a square in F_p(u).
struct CurveSearchResult {
    std::int64_t candidates = 0;
    std::vector<std::string> solutions;
    friend bool operator==(const CurveSearchResult&, const CurveSearchResult&) = default;
};

CurveSearchResult search_curve_points_serial(std::int64_t p, int bound);
/// OpenMP version; results are merged in the serial enumeration order.
CurveSearchResult search_curve_points_parallel(std::int64_t p, int bound);

/// #{(x, y) in F_p^2 : y^2 = x^3 + 1}.
std::int64_t affine_points_by_enumeration(std::int64_t p);
/// p + sum_x chi(x^3 + 1) with chi the quadratic character.
std::int64_t affine_points_by_character_sum(std::int64_t p);

struct ResidueExtensionReport {
    std::string field;
    /// Whether X = t lifts to a point of Y^2 = X^3 + 1, with the root found.
    bool t_point = false;
    std::string t_point_certificate;
    /// Only for radicand t: F(sqrt t) = F_p(u)^perf with u^2 = t, and
    /// t^3 + 1 becomes u^6 + 1.
    std::optional<bool> u6_plus_1_square;
    std::optional<CurveSearchResult> search;
    int search_bound = 0;
};

/// Residue-level analysis of F(sqrt r): the point over X = t, and for r = t
/// the reduction to u^6 + 1 and a bounded search for nonconstant points.
ResidueExtensionReport quadratic_residue_extension_check(const QuadraticExtension& ext, int search_bound,
                                                         bool parallel = true);

struct FundamentalEquality {
    int degree = 0;
    int ramification_index = 0;
    int residue_degree = 0;
    bool holds() const { return ramification_index * residue_degree == degree; }
};

/// K' = K_1(sqrt(p c), sqrt(p)) over K_1: degree 4, ramification index from
/// the value groups Z[1/p] in (1/(2p^inf))Z, residue degree from F(sqrt(res c)).
FundamentalEquality degree_four_bookkeeping(const RamifiedQuadratic& ext);

}  // namespace valfield::valuation

#endif

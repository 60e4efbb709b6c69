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

#ifndef VALFIELD_FIELDS_HAHN_HPP
#define VALFIELD_FIELDS_HAHN_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "valfield/core/finite_field.hpp"
#include "valfield/oag/oag_element.hpp"

namespace valfield {

using oag::OagElement;

struct LeadingTerm {
    OagElement exponent;
    FinFieldElt coefficient;

    friend bool operator==(const LeadingTerm&, const LeadingTerm&) = default;
};

/**
 * Truncated Hahn series over F_q with exponents in Gamma = (+)_Z Z[1/p].
 *
 * Terms with exponent below the precision are exact; nothing is known at or
 * beyond it. No precision (nullopt) means the finite sum is the exact value.
 * Arithmetic degrades precision as follows:
 *   x + y : min(P_x, P_y)
 *   x * y : min(P_x + lb(y), P_y + lb(x)), lb = valuation or, if unknown, precision
 */
class HahnElt {
   public:
    using Terms = std::map<OagElement, FinFieldElt>;

    /// Exact zero.
    explicit HahnElt(const FiniteField& f) : field_(&f) {}
    HahnElt(const FiniteField& f, Terms terms, std::optional<OagElement> precision);
    static HahnElt monomial(const FinFieldElt& c, const OagElement& exponent);
    static HahnElt constant(const FinFieldElt& c);
    /// t^{e_index}.
    static HahnElt basis_monomial(const FiniteField& f, std::int64_t index);

    const FiniteField& field() const { return *field_; }
    std::int64_t characteristic() const { return field_->characteristic(); }
    const Terms& terms() const { return terms_; }
    const std::optional<OagElement>& precision() const { return prec_; }
    bool is_exact() const { return !prec_.has_value(); }
    /// Exactly zero.
    bool is_zero() const { return terms_.empty() && is_exact(); }
    /// Lowest exponent that could carry a nonzero term (nullopt for exact zero).
    std::optional<OagElement> lower_bound() const;

    /// Forgets everything at and beyond `precision`.
    HahnElt truncated(const OagElement& precision) const;

    HahnElt zero_like() const { return HahnElt(*field_); }
    HahnElt one_like() const { return constant(field_->one()); }
    HahnElt from_integer(std::int64_t n) const { return constant(field_->from_integer(n)); }

    HahnElt operator-() const;
    friend HahnElt operator+(const HahnElt& a, const HahnElt& b);
    friend HahnElt operator-(const HahnElt& a, const HahnElt& b) { return a + (-b); }
    friend HahnElt operator*(const HahnElt& a, const HahnElt& b);
    /// Division by an exact monomial; anything else needs hahn_inv with an
    /// explicit number of terms and throws DomainError here.
    friend HahnElt operator/(const HahnElt& a, const HahnElt& b);
    friend bool operator==(const HahnElt& a, const HahnElt& b) {
        return a.field_ == b.field_ && a.terms_ == b.terms_ && a.prec_ == b.prec_;
    }

    HahnElt frobenius() const;
    HahnElt frobenius_inverse() const;

    /// "3*t^[e1] + 1*t^[2*e2] (prec e5)", leading term first.
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const HahnElt& x) { return os << x.to_string(); }

   private:
    void normalize();

    const FiniteField* field_;
    Terms terms_;
    std::optional<OagElement> prec_;
};

/// Minimum exponent. Throws DomainError on exact zero and
/// InsufficientPrecision when no term is known below the precision.
OagElement hahn_valuation(const HahnElt& x);
LeadingTerm leading_term(const HahnElt& x);

/// Inverse as a geometric series with `terms` terms. With x = c t^g (1 + eps),
/// the result has precision min(P_x - g, terms * v(eps)) - g.
HahnElt hahn_inv(const HahnElt& x, int terms);
/// Square root c^(1/2) t^(g/2) sum_k binom(1/2, k) eps^k with `terms` terms;
/// precision min(P_x - g, terms * v(eps)) + g/2. Throws DomainError if x is
/// not a square.
HahnElt hahn_sqrt(const HahnElt& x, int terms);

struct HahnSquareTest {
    bool is_square = false;
    std::string reason;
    // Certificate, present when is_square.
    std::optional<OagElement> half_valuation;
    std::optional<FinFieldElt> coefficient_root;
    std::optional<HahnElt> root;
};

/// x is a square iff v(x) is 2-divisible in Gamma and the leading
/// coefficient is a square in F_q (Hensel, p odd).
HahnSquareTest hahn_is_square(const HahnElt& x, int root_terms = 4);

/// Value of x under the coarsening of the Hahn valuation with kernel delta.
OagElement coarsen_hahn_valuation(const HahnElt& x, const oag::ConvexSubgroup& delta);

/// t^{e_i} -> t^{e_{i+by}} on finite-support series (and their precision).
HahnElt perf_field_automorphism_shift(const HahnElt& x, std::int64_t by = 1);

HahnElt parse_hahn(std::string_view text, const FiniteField& f);

}  // namespace valfield

#endif

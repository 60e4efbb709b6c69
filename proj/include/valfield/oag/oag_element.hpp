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

#ifndef VALFIELD_OAG_OAG_ELEMENT_HPP
#define VALFIELD_OAG_OAG_ELEMENT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "valfield/core/rational.hpp"

namespace valfield::oag {

/// Lexicographic convention: the coordinate with the smaller index dominates,
/// so e_1 > e_2 > e_3 > ... > 0. Flip here to reverse it everywhere.
inline constexpr bool kSmallerIndexMoreSignificant = true;

enum class Order { less, equal, greater };

/**
 * Finitely supported element of the lexicographic sum of copies of Q indexed
 * by Z, tagged with an ambient prime p. Elements of Gamma = (+)_Z Z[1/p] are
 * the ones whose coordinates have p-power denominators; other coordinate
 * groups ((1/2)Z, (1/(2p^m))Z, ...) reuse the same representation and are
 * told apart by ValueGroup.
 */
class OagElement {
   public:
    explicit OagElement(std::int64_t p) : p_(p) {}
    /// e_i.
    static OagElement unit(std::int64_t p, std::int64_t index);
    /// r * e_index.
    static OagElement scalar(std::int64_t p, const Rational& r, std::int64_t index = 0);

    std::int64_t prime() const { return p_; }
    bool is_zero() const { return coords_.empty(); }
    Rational coord(std::int64_t index) const;
    const std::map<std::int64_t, Rational>& coords() const { return coords_; }
    /// Most significant index in the support; requires a nonzero element.
    std::int64_t leading_index() const;
    /// Sign of the leading coordinate (0 for zero).
    int sign() const;
    /// Whether every coordinate lies in Z[1/p].
    bool in_gamma() const;

    OagElement operator-() const;
    OagElement& operator+=(const OagElement& o);
    OagElement& operator-=(const OagElement& o);
    friend OagElement operator+(OagElement a, const OagElement& b) { return a += b; }
    friend OagElement operator-(OagElement a, const OagElement& b) { return a -= b; }
    friend OagElement operator*(const Rational& r, const OagElement& a);
    friend OagElement operator*(std::int64_t n, const OagElement& a) { return Rational(n) * a; }
    friend bool operator==(const OagElement& a, const OagElement& b) { return a.p_ == b.p_ && a.coords_ == b.coords_; }
    friend bool operator<(const OagElement& a, const OagElement& b);
    friend bool operator>(const OagElement& a, const OagElement& b) { return b < a; }
    friend bool operator<=(const OagElement& a, const OagElement& b) { return !(b < a); }
    friend bool operator>=(const OagElement& a, const OagElement& b) { return !(a < b); }

    /// Keeps only coordinates whose index satisfies keep(index).
    template <class Pred>
    OagElement restricted(Pred&& keep) const {
        OagElement out(p_);
        for (const auto& [i, c] : coords_)
            if (keep(i)) out.coords_.emplace(i, c);
        return out;
    }
    /// Reindexes every coordinate by i -> i + by.
    OagElement shifted(std::int64_t by) const;

    /// Canonical text, e.g. "e1 - e2", "3/p^2*e0 + e4", "0".
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const OagElement& a) { return os << a.to_string(); }

   private:
    void set(std::int64_t index, const Rational& value);

    std::int64_t p_;
    std::map<std::int64_t, Rational> coords_;
};

Order lex_compare(const OagElement& a, const OagElement& b);

/// Formats a coordinate value, writing p-power denominators as "p^k".
std::string format_coefficient(const Rational& r, std::int64_t p);

/// Parses the textual syntax produced by to_string (also accepts "1 * e4",
/// "3/25*e0", "-e-1" for index -1, "0").
OagElement parse_oag(std::string_view text, std::int64_t p);

/// Witness b with n*b = a and b in Gamma, if one exists.
std::optional<OagElement> divide_in_gamma(const OagElement& a, std::int64_t n);
bool divisible_by(const OagElement& a, std::int64_t n);

/**
 * Delta_i = { g : support(g) lies strictly below e_i in significance }, the
 * largest convex subgroup of Gamma not containing e_i.
 */
struct ConvexSubgroup {
    std::int64_t threshold;

    bool contains(const OagElement& a) const;
    /// Whether index i survives in the quotient Gamma / Delta_i.
    bool retains(std::int64_t index) const;
};

/// Class of a in Gamma / Delta, represented by its truncation.
OagElement quotient_map(const OagElement& a, const ConvexSubgroup& delta);
/// Canonical preimage of a class: the element supported on retained indices.
OagElement section(const OagElement& q, const ConvexSubgroup& delta);

/// Archimedean equivalence of nonzero elements (equal leading index).
bool archimedean_equiv(const OagElement& a, const OagElement& b);

}  // namespace valfield::oag

#endif

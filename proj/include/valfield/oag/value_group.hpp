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

#ifndef VALFIELD_OAG_VALUE_GROUP_HPP
#define VALFIELD_OAG_VALUE_GROUP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "valfield/oag/oag_element.hpp"

namespace valfield::oag {

/// One lexicographic layer of a concrete value group.
struct Layer {
    enum class Kind {
        gamma,           // (+)_Z Z[1/p]
        gamma_quotient,  // Gamma / Delta_threshold
        rank_one,        // (1/(b p^m)) Z at index 0, or (1/b) Z[1/p] when m is unbounded
    };

    Kind kind = Kind::gamma;
    std::int64_t p = 3;
    std::int64_t threshold = 0;
    std::int64_t base_denominator = 1;
    std::optional<int> p_depth;

    static Layer gamma(std::int64_t p) { return {Kind::gamma, p, 0, 1, std::nullopt}; }
    static Layer gamma_quotient(std::int64_t p, std::int64_t i) { return {Kind::gamma_quotient, p, i, 1, std::nullopt}; }
    /// (1/(b p^depth)) Z; depth = nullopt gives (1/(b p^inf)) Z.
    static Layer rank_one(std::int64_t p, std::int64_t b, std::optional<int> depth) {
        return {Kind::rank_one, p, 0, b, depth};
    }

    bool contains(const OagElement& a) const;
    std::string name() const;
    std::string format(const OagElement& a) const;
    friend bool operator==(const Layer&, const Layer&) = default;
};

/// Element of a layered group: one OagElement per layer, most significant first.
struct GroupElement {
    std::vector<OagElement> parts;

    friend GroupElement operator+(const GroupElement& a, const GroupElement& b);
    friend GroupElement operator-(const GroupElement& a, const GroupElement& b);
    GroupElement operator-() const;
    friend GroupElement operator*(std::int64_t n, const GroupElement& a);
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    bool is_zero() const;
};

/**
 * Concrete ordered abelian group given as a lexicographic sum of layers
 * (the first layer dominates). Covers Gamma, Gamma/Delta_i, (1/2)Z,
 * (1/(2p^m))Z and their lex sums.
 */
class ValueGroup {
   public:
    explicit ValueGroup(Layer layer) : layers_{layer} {}
    explicit ValueGroup(std::vector<Layer> layers);

    static ValueGroup lex_sum(const ValueGroup& coarse, const ValueGroup& fine);

    const std::vector<Layer>& layers() const { return layers_; }
    std::size_t rank() const { return layers_.size(); }

    GroupElement zero() const;
    GroupElement element(std::vector<OagElement> parts) const;
    /// A single-layer element.
    GroupElement element(const OagElement& a) const { return element(std::vector<OagElement>{a}); }
    bool contains(const GroupElement& a) const;
    Order compare(const GroupElement& a, const GroupElement& b) const;
    /// Witness b in the group with n*b = a, if any.
    std::optional<GroupElement> divide(const GroupElement& a, std::int64_t n) const;
    bool divisible_by(const GroupElement& a, std::int64_t n) const { return divide(a, n).has_value(); }

    std::string name() const;
    std::string format(const GroupElement& a) const;
    friend bool operator==(const ValueGroup&, const ValueGroup&) = default;

   private:
    std::vector<Layer> layers_;
};

/// Element of G1 (+)_lex G2 from its two components.
GroupElement lex_sum_element(const GroupElement& coarse, const GroupElement& fine);

/// A group with a marked point, e.g. (vK, v(p)).
struct PointedGroup {
    ValueGroup group;
    GroupElement point;
};

}  // namespace valfield::oag

#endif

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

#include "valfield/oag/value_group.hpp"

#include "valfield/core/errors.hpp"

namespace valfield::oag {

bool Layer::contains(const OagElement& a) const {
    if (a.prime() != p) return false;
    switch (kind) {
        case Kind::gamma:
            return a.in_gamma();
        case Kind::gamma_quotient: {
            const ConvexSubgroup delta{threshold};
            return a.in_gamma() && quotient_map(a, delta) == a;
        }
        case Kind::rank_one: {
            for (const auto& [i, c] : a.coords())
                if (i != 0) return false;
            const Rational scaled = a.coord(0) * Rational(base_denominator);
            if (!p_depth) return exact_power_exponent(scaled.den(), p) >= 0;
            Integer bound = 1;
            for (int k = 0; k < *p_depth; ++k) bound *= p;
            return (scaled * Rational(bound)).is_integer();
        }
    }
    return false;
}

std::string Layer::name() const {
    switch (kind) {
        case Kind::gamma:
            return "Gamma";
        case Kind::gamma_quotient:
            return "Gamma/Delta_" + std::to_string(threshold);
        case Kind::rank_one: {
            std::string den = base_denominator == 1 ? "" : std::to_string(base_denominator);
            if (!p_depth) {
                den += den.empty() ? "p^inf" : "*p^inf";
            } else if (*p_depth > 0) {
                if (!den.empty()) den += "*";
                den += "p";
                if (*p_depth > 1) den += "^" + std::to_string(*p_depth);
            }
            return den.empty() ? "Z" : "(1/" + den + ")Z";
        }
    }
    return "?";
}

std::string Layer::format(const OagElement& a) const {
    if (kind == Kind::rank_one) return format_coefficient(a.coord(0), p);
    return a.to_string();
}

GroupElement operator+(const GroupElement& a, const GroupElement& b) {
    if (a.parts.size() != b.parts.size()) throw DomainError("group elements of different rank");
    GroupElement out = a;
    for (std::size_t i = 0; i < a.parts.size(); ++i) out.parts[i] += b.parts[i];
    return out;
}

GroupElement GroupElement::operator-() const {
    GroupElement out = *this;
    for (auto& x : out.parts) x = -x;
    return out;
}

GroupElement operator-(const GroupElement& a, const GroupElement& b) { return a + (-b); }

GroupElement operator*(std::int64_t n, const GroupElement& a) {
    GroupElement out = a;
    for (auto& x : out.parts) x = n * x;
    return out;
}

bool GroupElement::is_zero() const {
    for (const auto& x : parts)
        if (!x.is_zero()) return false;
    return true;
}

ValueGroup::ValueGroup(std::vector<Layer> layers) : layers_(std::move(layers)) {
    if (layers_.empty()) throw DomainError("value group needs at least one layer");
}

ValueGroup ValueGroup::lex_sum(const ValueGroup& coarse, const ValueGroup& fine) {
    std::vector<Layer> layers = coarse.layers_;
    layers.insert(layers.end(), fine.layers_.begin(), fine.layers_.end());
    return ValueGroup(std::move(layers));
}

GroupElement ValueGroup::zero() const {
    GroupElement z;
    for (const auto& l : layers_) z.parts.emplace_back(l.p);
    return z;
}

GroupElement ValueGroup::element(std::vector<OagElement> parts) const {
    GroupElement g{std::move(parts)};
    if (!contains(g)) throw DomainError("element does not belong to " + name());
    return g;
}

bool ValueGroup::contains(const GroupElement& a) const {
    if (a.parts.size() != layers_.size()) return false;
    for (std::size_t i = 0; i < layers_.size(); ++i)
        if (!layers_[i].contains(a.parts[i])) return false;
    return true;
}

Order ValueGroup::compare(const GroupElement& a, const GroupElement& b) const {
    if (!contains(a) || !contains(b)) throw DomainError("comparison of elements outside " + name());
    for (std::size_t i = 0; i < layers_.size(); ++i) {
        const Order o = lex_compare(a.parts[i], b.parts[i]);
        if (o != Order::equal) return o;
    }
    return Order::equal;
}

std::optional<GroupElement> ValueGroup::divide(const GroupElement& a, std::int64_t n) const {
    if (n < 1) throw DomainError("divisor must be positive");
    if (!contains(a)) throw DomainError("divisibility test of an element outside " + name());
    // In a lexicographic sum every layer is a direct summand as a group, so
    // the witness is the layerwise quotient whenever each layer contains it.
    GroupElement w;
    const Rational inv(Integer(1), Integer(n));
    for (std::size_t i = 0; i < layers_.size(); ++i) {
        OagElement b = inv * a.parts[i];
        if (!layers_[i].contains(b)) return std::nullopt;
        w.parts.push_back(std::move(b));
    }
    return w;
}

std::string ValueGroup::name() const {
    std::string out;
    for (std::size_t i = 0; i < layers_.size(); ++i) {
        if (i) out += " (+)lex ";
        out += layers_[i].name();
    }
    return out;
}

std::string ValueGroup::format(const GroupElement& a) const {
    if (a.parts.size() != layers_.size()) throw DomainError("element rank does not match " + name());
    if (layers_.size() == 1) return layers_[0].format(a.parts[0]);
    std::string out = "(";
    for (std::size_t i = 0; i < layers_.size(); ++i) {
        if (i) out += ", ";
        out += layers_[i].format(a.parts[i]);
    }
    return out + ")";
}

GroupElement lex_sum_element(const GroupElement& coarse, const GroupElement& fine) {
    GroupElement out = coarse;
    out.parts.insert(out.parts.end(), fine.parts.begin(), fine.parts.end());
    return out;
}

}  // namespace valfield::oag

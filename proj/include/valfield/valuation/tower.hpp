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

#ifndef VALFIELD_VALUATION_TOWER_HPP
#define VALFIELD_VALUATION_TOWER_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "valfield/oag/value_group.hpp"
#include "valfield/witt/ramified.hpp"

namespace valfield::valuation {

using oag::GroupElement;
using oag::OagElement;
using oag::ValueGroup;

/// A valuation on the residue field k, given by its value group and a value map on k^x.
template <PerfectFieldElement K>
struct FineValuation {
    std::string name;
    ValueGroup group;
    std::function<OagElement(const K&)> value;
};

/// Value of the composite valuation: coarse part in vK, fine part in nu k.
struct ComposedValue {
    OagElement coarse;
    OagElement fine;

    friend bool operator==(const ComposedValue&, const ComposedValue&) = default;
    bool is_zero() const { return coarse.is_zero() && fine.is_zero(); }
};

/**
 * nu o v on K = W(k)[1/p](pi)(varpi): v the p-adic valuation with value group
 * (1/(2p^m))Z and residue field k, nu a valuation of k. The splitting of
 * 0 -> nu k -> (nu o v)K -> vK -> 0 is fixed by the section sending the
 * generator 1/(2p^m) to the uniformizer rho = pi varpi^{(1+p^m)/2} / p
 * (rho = pi when m = 0).
 */
template <PerfectFieldElement K>
class ValuationTower {
   public:
    ValuationTower(std::shared_ptr<const witt::RamifiedField<K>> field, FineValuation<K> fine)
        : field_(std::move(field)), fine_(std::move(fine)) {}

    const witt::RamifiedField<K>& field() const { return *field_; }
    const std::shared_ptr<const witt::RamifiedField<K>>& field_ptr() const { return field_; }
    const FineValuation<K>& fine() const { return fine_; }
    std::int64_t prime() const { return field_->prime(); }

    ValueGroup coarse_group() const { return ValueGroup(oag::Layer::rank_one(prime(), 2, field_->depth())); }
    ValueGroup composed_group() const { return ValueGroup::lex_sum(coarse_group(), fine_.group); }
    GroupElement as_group_element(const ComposedValue& v) const { return composed_group().element({v.coarse, v.fine}); }
    std::string section_description() const {
        if (field_->q() == 1) return "1/2 -> pi";
        const std::int64_t q = field_->q();
        return "1/" + std::to_string(2 * q) + " -> pi*w^" + std::to_string((1 + q) / 2) + "/p";
    }

   private:
    std::shared_ptr<const witt::RamifiedField<K>> field_;
    FineValuation<K> fine_;
};

/**
 * (v(x), nu(res(x / rho^k))) with k = 2 p^m v(x). Writing the leading term as
 * c pi^a varpi^b, rho^k = pi^a varpi^b (p c_1)^{floor(k/2)} * p-power, where
 * c_1 lifts alpha, so the fine part is nu(res(c / p^{v_p(c)})) - floor(k/2) nu(alpha).
 */
template <PerfectFieldElement K>
ComposedValue compose_value(const witt::RamExtElt<K>& x, const ValuationTower<K>& tower) {
    const auto lead = x.leading();
    const auto& f = tower.field();
    const Rational k = lead.value * Rational(static_cast<long>(2 * f.q()));
    if (!k.is_integer()) throw InternalError("value outside (1/(2p^m))Z");
    const Integer half = (k * Rational(1, 2)).floor();
    const K unit_residue = lead.coefficient.unit_part().residue();
    OagElement fine = tower.fine().value(unit_residue);
    if (half != 0) fine = fine - Rational(half) * tower.fine().value(f.alpha());
    return {OagElement::scalar(f.prime(), lead.value), fine};
}

/// Whether the marked point is n-divisible; an invariant of the pointed group.
inline bool pointed_divisibility_invariant(const oag::PointedGroup& g, std::int64_t n) {
    return g.group.divisible_by(g.point, n);
}

template <PerfectFieldElement K>
oag::PointedGroup pointed_value_group(const ValuationTower<K>& tower) {
    const auto p = witt::RamExtElt<K>::from_integer(tower.field_ptr(), tower.prime());
    return {tower.composed_group(), tower.as_group_element(compose_value(p, tower))};
}

struct WitnessCheck {
    bool accepted = false;
    bool identity_holds = false;
    bool unit = false;
    std::vector<std::string> certificate;
};

/// Decides Y^2 = pX (at working precision) and (nu o v)(X) = 0.
template <PerfectFieldElement K>
WitnessCheck check_distinguishing_witness(const witt::RamExtElt<K>& x, const witt::RamExtElt<K>& y,
                                          const ValuationTower<K>& tower) {
    WitnessCheck out;
    const auto p = witt::RamExtElt<K>::from_integer(tower.field_ptr(), tower.prime());
    const auto diff = y * y - p * x;
    if (diff.is_exact_zero()) {
        out.identity_holds = true;
        out.certificate.push_back("Y^2 - p*X = 0 exactly");
    } else if (diff.vanishes_at_precision()) {
        out.identity_holds = true;
        out.certificate.push_back("Y^2 - p*X = 0 modulo terms of value >= " + diff.precision()->to_string());
    } else {
        out.certificate.push_back("Y^2 - p*X = " + diff.to_string() + " != 0");
    }
    const ComposedValue vx = compose_value(x, tower);
    out.unit = vx.is_zero();
    out.certificate.push_back(tower.fine().name + " o v(X) = " + tower.composed_group().format(tower.as_group_element(vx)));
    out.accepted = out.identity_holds && out.unit;
    return out;
}

struct Refutation {
    bool refuted = false;
    GroupElement value_of_p;
    std::string group;
    std::vector<std::string> steps;
};

/// If Y^2 = pX with v(X) = 0 then v(p) = 2 v(Y); so v(p) not 2-divisible refutes
/// the sentence "exists X, Y: Y^2 = pX and v(X) = 0".
template <PerfectFieldElement K>
Refutation refute_distinguishing_sentence(const ValuationTower<K>& tower) {
    const auto pg = pointed_value_group(tower);
    Refutation r;
    r.value_of_p = pg.point;
    r.group = pg.group.name();
    const std::string vp = pg.group.format(pg.point);
    r.steps.push_back("Y^2 = p*X and v(X) = 0 imply v(p) = 2*v(Y)");
    if (pointed_divisibility_invariant(pg, 2)) {
        r.steps.push_back("v(p) = " + vp + " is 2-divisible in " + r.group + "; no refutation");
    } else {
        r.refuted = true;
        r.steps.push_back("v(p) = " + vp + " is not 2-divisible in " + r.group);
        r.steps.push_back("hence no X, Y satisfy the sentence");
    }
    return r;
}

}  // namespace valfield::valuation

#endif

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

#ifndef VALFIELD_WITT_RAMIFIED_HPP
#define VALFIELD_WITT_RAMIFIED_HPP

#include <memory>
#include <string>
#include <vector>

#include "valfield/witt/witt_vector.hpp"

namespace valfield::witt {

/**
 * K = W(k)[1/p](pi)(varpi) with pi^2 = p*c, c = teich(alpha) a unit, and
 * varpi^{p^m} = p. Depth m = 0 gives the quadratic extension W(k)(sqrt(p c)).
 * Elements are sums of coef_{a,b} pi^a varpi^b with a < 2, b < p^m; the basis
 * monomial pi^a varpi^b has value a/2 + b/p^m and these are pairwise distinct
 * modulo Z, so the extension is totally ramified of degree 2 p^m.
 */
template <PerfectFieldElement K>
class RamifiedField {
   public:
    RamifiedField(const K& alpha, int witt_length, int depth)
        : alpha_(alpha),
          n_(witt_length),
          m_(depth),
          c_(LocalizedWitt<K>::teichmuller(alpha, witt_length)) {
        if (alpha.is_zero()) throw DomainError("generator needs a unit");
        if (depth < 0 || depth > 3) throw DomainError("ramification depth must be in 0..3");
        q_ = 1;
        for (int i = 0; i < depth; ++i) q_ *= alpha.characteristic();
    }

    const K& alpha() const { return alpha_; }
    const LocalizedWitt<K>& unit() const { return c_; }
    int witt_length() const { return n_; }
    int depth() const { return m_; }
    std::int64_t prime() const { return alpha_.characteristic(); }
    /// p^m, the ramification of varpi.
    std::int64_t q() const { return q_; }
    int dimension() const { return static_cast<int>(2 * q_); }
    /// Basis monomial pi^a varpi^b has value a/2 + b/q.
    Rational basis_value(int a, std::int64_t b) const {
        return Rational(a, 2) + Rational(Integer(static_cast<long>(b)), Integer(static_cast<long>(q_)));
    }

   private:
    K alpha_;
    int n_;
    int m_;
    std::int64_t q_ = 1;
    LocalizedWitt<K> c_;
};

template <PerfectFieldElement K>
struct RamLeading {
    Rational value;
    int a;
    std::int64_t b;
    LocalizedWitt<K> coefficient;
};

template <PerfectFieldElement K>
class RamExtElt {
   public:
    using Field = RamifiedField<K>;

    explicit RamExtElt(std::shared_ptr<const Field> field) : field_(std::move(field)) {
        coef_.assign(static_cast<std::size_t>(field_->dimension()),
                     LocalizedWitt<K>::exact_zero(field_->alpha(), field_->witt_length()));
    }
    static RamExtElt from_base(std::shared_ptr<const Field> field, const LocalizedWitt<K>& x) {
        RamExtElt r(std::move(field));
        r.coef_[0] = x;
        return r;
    }
    static RamExtElt from_integer(std::shared_ptr<const Field> field, std::int64_t m) {
        const auto& f = *field;
        return from_base(std::move(field), LocalizedWitt<K>::from_integer(m, f.alpha(), f.witt_length()));
    }
    /// coef * pi^a varpi^b.
    static RamExtElt basis(std::shared_ptr<const Field> field, int a, std::int64_t b,
                           std::optional<LocalizedWitt<K>> coef = std::nullopt) {
        RamExtElt r(field);
        r.at(a, b) = coef ? *coef : LocalizedWitt<K>::from_integer(1, field->alpha(), field->witt_length());
        return r;
    }
    static RamExtElt pi(std::shared_ptr<const Field> field) { return basis(std::move(field), 1, 0); }
    static RamExtElt varpi(std::shared_ptr<const Field> field) {
        if (field->q() == 1) return from_integer(field, field->prime());
        return basis(std::move(field), 0, 1);
    }
    /// pi varpi^{(1+q)/2} / p, of value 1/(2q); generates the value group.
    static RamExtElt uniformizer(std::shared_ptr<const Field> field) {
        const std::int64_t q = field->q();
        const std::int64_t b = (1 + q) / 2;
        const auto& f = *field;
        auto coef = LocalizedWitt<K>::p_power(b / q - 1, f.alpha(), f.witt_length());
        return basis(std::move(field), 1, b % q, coef);
    }

    const Field& field() const { return *field_; }
    const std::shared_ptr<const Field>& field_ptr() const { return field_; }
    const LocalizedWitt<K>& coefficient(int a, std::int64_t b) const {
        return coef_[static_cast<std::size_t>(a * field_->q() + b)];
    }
    /// No coefficient is known to be nonzero: the element is 0 modulo precision().
    bool vanishes_at_precision() const {
        return std::none_of(coef_.begin(), coef_.end(), [](const auto& c) { return c.is_known_nonzero(); });
    }
    bool is_exact_zero() const {
        return std::all_of(coef_.begin(), coef_.end(), [](const auto& c) { return c.is_exact_zero(); });
    }

    friend RamExtElt operator+(const RamExtElt& x, const RamExtElt& y) {
        check_same(x, y);
        RamExtElt r(x.field_);
        for (std::size_t i = 0; i < r.coef_.size(); ++i) r.coef_[i] = x.coef_[i] + y.coef_[i];
        return r;
    }
    RamExtElt operator-() const {
        RamExtElt r(field_);
        for (std::size_t i = 0; i < r.coef_.size(); ++i) r.coef_[i] = -coef_[i];
        return r;
    }
    friend RamExtElt operator-(const RamExtElt& x, const RamExtElt& y) { return x + (-y); }
    friend RamExtElt operator*(const RamExtElt& x, const RamExtElt& y) {
        check_same(x, y);
        const std::int64_t q = x.field_->q();
        RamExtElt r(x.field_);
        for (int a = 0; a < 2; ++a) {
            for (std::int64_t b = 0; b < q; ++b) {
                const auto& cx = x.coefficient(a, b);
                if (cx.is_exact_zero()) continue;
                for (int a2 = 0; a2 < 2; ++a2) {
                    for (std::int64_t b2 = 0; b2 < q; ++b2) {
                        const auto& cy = y.coefficient(a2, b2);
                        if (cy.is_exact_zero()) continue;
                        LocalizedWitt<K> c = cx * cy;
                        int ra = a + a2;
                        std::int64_t rb = b + b2;
                        if (ra == 2) {  // pi^2 = p c
                            c = (c * x.field_->unit()).times_p_power(1);
                            ra = 0;
                        }
                        if (rb >= q) {  // varpi^q = p
                            c = c.times_p_power(1);
                            rb -= q;
                        }
                        r.at(ra, rb) = r.at(ra, rb) + c;
                    }
                }
            }
        }
        return r;
    }
    RamExtElt pow(std::uint64_t e) const {
        RamExtElt acc = from_integer(field_, 1);
        RamExtElt base = *this;
        while (e > 0) {
            if (e & 1U) acc = acc * base;
            e >>= 1U;
            if (e > 0) base = base * base;
        }
        return acc;
    }

    /// Term of least value. Throws DomainError for exact zero and
    /// InsufficientPrecision if a coefficient known only modulo some p^N could
    /// still undercut the minimum.
    RamLeading<K> leading() const {
        const std::int64_t q = field_->q();
        std::optional<RamLeading<K>> best;
        std::optional<Rational> unknown_floor;
        for (int a = 0; a < 2; ++a) {
            for (std::int64_t b = 0; b < q; ++b) {
                const auto& c = coefficient(a, b);
                if (c.is_exact_zero()) continue;
                const Rational v = Rational(static_cast<long>(c.shift())) + field_->basis_value(a, b);
                if (c.is_known_nonzero()) {
                    if (!best || v < best->value) best = RamLeading<K>{v, a, b, c};
                } else if (!unknown_floor || v < *unknown_floor) {
                    unknown_floor = v;
                }
            }
        }
        if (!best && !unknown_floor) throw DomainError("valuation of zero");
        if (!best) throw InsufficientPrecision("element vanishes at working precision");
        if (unknown_floor && *unknown_floor < best->value) {
            throw InsufficientPrecision("minimum not determined at working precision");
        }
        return *best;
    }
    Rational valuation() const { return leading().value; }
    /// Residue of an element of nonnegative value.
    K residue() const {
        const auto lead = leading();
        if (lead.value.sign() < 0) throw DomainError("residue of an element with negative valuation");
        if (lead.value.sign() > 0) return field_->alpha().zero_like();
        return lead.coefficient.residue();
    }

    /// Smallest absolute precision over the nonzero basis terms, as a value in K.
    std::optional<Rational> precision() const {
        std::optional<Rational> out;
        for (int a = 0; a < 2; ++a) {
            for (std::int64_t b = 0; b < field_->q(); ++b) {
                const auto& c = coefficient(a, b);
                if (c.is_exact_zero()) continue;
                const Rational v = Rational(static_cast<long>(c.absolute_precision())) + field_->basis_value(a, b);
                if (!out || v < *out) out = v;
            }
        }
        return out;
    }

    std::string to_string() const {
        std::string out;
        for (int a = 0; a < 2; ++a) {
            for (std::int64_t b = 0; b < field_->q(); ++b) {
                const auto& c = coefficient(a, b);
                if (c.is_exact_zero()) continue;
                if (!out.empty()) out += " + ";
                out += c.to_string();
                if (a == 1) out += "*pi";
                if (b == 1) out += "*w";
                if (b > 1) out += "*w^" + std::to_string(b);
            }
        }
        return out.empty() ? "0" : out;
    }

   private:
    LocalizedWitt<K>& at(int a, std::int64_t b) { return coef_[static_cast<std::size_t>(a * field_->q() + b)]; }
    static void check_same(const RamExtElt& x, const RamExtElt& y) {
        if (x.field_ != y.field_) throw DomainError("elements of different extensions");
    }

    std::shared_ptr<const Field> field_;
    std::vector<LocalizedWitt<K>> coef_;
};

template <PerfectFieldElement K>
Rational ramext_valuation(const RamExtElt<K>& x) {
    return x.valuation();
}

}  // namespace valfield::witt

#endif

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

#ifndef VALFIELD_WITT_WITT_VECTOR_HPP
#define VALFIELD_WITT_WITT_VECTOR_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "valfield/core/errors.hpp"
#include "valfield/core/field_concepts.hpp"
#include "valfield/core/rational.hpp"
#include "valfield/witt/witt_polynomials.hpp"

namespace valfield::witt {

namespace detail {

/// Evaluates a polynomial with coefficients in F_p at vars (X_0..X_{n-1}, Y_0..Y_{n-1}).
/// Terms containing a variable that is exactly zero are skipped.
template <PerfectFieldElement K>
K evaluate_mod_p(const std::vector<ModTerm>& terms, const MonomialLayout& layout, const std::vector<K>& vars) {
    const int nv = layout.variables();
    std::vector<bool> zero(static_cast<std::size_t>(nv));
    for (int v = 0; v < nv; ++v) zero[static_cast<std::size_t>(v)] = vars[static_cast<std::size_t>(v)].is_zero();

    std::vector<std::uint32_t> max_exp(static_cast<std::size_t>(nv), 0);
    std::vector<const ModTerm*> live;
    for (const auto& t : terms) {
        bool skip = false;
        for (int v = 0; v < nv && !skip; ++v) {
            if (zero[static_cast<std::size_t>(v)] && layout.exponent(t.monomial, v) > 0) skip = true;
        }
        if (skip) continue;
        live.push_back(&t);
        for (int v = 0; v < nv; ++v) {
            max_exp[static_cast<std::size_t>(v)] =
                std::max(max_exp[static_cast<std::size_t>(v)], layout.exponent(t.monomial, v));
        }
    }
    const K& any = vars.front();
    if (live.empty()) return any.zero_like();

    std::vector<std::vector<K>> powers(static_cast<std::size_t>(nv));
    for (int v = 0; v < nv; ++v) {
        auto& table = powers[static_cast<std::size_t>(v)];
        const K& x = vars[static_cast<std::size_t>(v)];
        table.push_back(any.one_like());
        for (std::uint32_t e = 1; e <= max_exp[static_cast<std::size_t>(v)]; ++e) table.push_back(table.back() * x);
    }
    // Group by coefficient to multiply by constants only once per class.
    std::map<std::int64_t, K> by_coef;
    for (const ModTerm* t : live) {
        std::optional<K> prod;
        for (int v = 0; v < nv; ++v) {
            const std::uint32_t e = layout.exponent(t->monomial, v);
            if (e == 0) continue;
            const K& f = powers[static_cast<std::size_t>(v)][e];
            prod = prod ? *prod * f : f;
        }
        const K term = prod ? *prod : any.one_like();
        auto it = by_coef.find(t->coef);
        if (it == by_coef.end()) {
            by_coef.emplace(t->coef, term);
        } else {
            it->second = it->second + term;
        }
    }
    K acc = any.zero_like();
    for (const auto& [c, s] : by_coef) acc = acc + (c == 1 ? s : any.from_integer(c) * s);
    return acc;
}

}  // namespace detail

/**
 * Length-n Witt vector (x_0, ..., x_{n-1}) over a perfect field of odd
 * characteristic p, i.e. an element of W(k)/p^n W(k).
 */
template <PerfectFieldElement K>
class WittVec {
   public:
    explicit WittVec(std::vector<K> components) : c_(std::move(components)) {
        if (c_.empty() || static_cast<int>(c_.size()) > kMaxWittLength) {
            throw DomainError("Witt length must be in 1..4");
        }
        if (c_.front().characteristic() % 2 == 0) throw DomainError("Witt vectors need odd p");
    }

    static WittVec zero(const K& any, int n) { return WittVec(std::vector<K>(static_cast<std::size_t>(n), any.zero_like())); }
    static WittVec teichmuller(const K& a, int n) {
        std::vector<K> c(static_cast<std::size_t>(n), a.zero_like());
        c[0] = a;
        return WittVec(std::move(c));
    }
    static WittVec one(const K& any, int n) { return teichmuller(any.one_like(), n); }
    /// Image of the integer m, by double-and-add with Witt addition.
    static WittVec from_integer(std::int64_t m, const K& any, int n) {
        const bool negative = m < 0;
        std::uint64_t u = negative ? static_cast<std::uint64_t>(-m) : static_cast<std::uint64_t>(m);
        WittVec acc = zero(any, n);
        WittVec base = one(any, n);
        while (u > 0) {
            if (u & 1U) acc = acc + base;
            u >>= 1U;
            if (u > 0) base = base + base;
        }
        return negative ? -acc : acc;
    }

    int length() const { return static_cast<int>(c_.size()); }
    std::int64_t prime() const { return c_.front().characteristic(); }
    const std::vector<K>& components() const { return c_; }
    const K& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    /// Image under W(k) -> k.
    const K& residue() const { return c_.front(); }
    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const K& x) { return x.is_zero(); });
    }
    /// Index of the first nonzero component, or nullopt if all vanish.
    std::optional<int> order() const {
        for (int i = 0; i < length(); ++i) {
            if (!c_[static_cast<std::size_t>(i)].is_zero()) return i;
        }
        return std::nullopt;
    }

    friend WittVec operator+(const WittVec& x, const WittVec& y) { return combine(x, y, true); }
    friend WittVec operator*(const WittVec& x, const WittVec& y) { return combine(x, y, false); }
    /// Componentwise negation; valid because -1 = teich(-1) for odd p.
    WittVec operator-() const {
        std::vector<K> c;
        c.reserve(c_.size());
        for (const auto& x : c_) c.push_back(-x);
        return WittVec(std::move(c));
    }
    friend WittVec operator-(const WittVec& x, const WittVec& y) { return x + (-y); }
    friend bool operator==(const WittVec& x, const WittVec& y) { return x.c_ == y.c_; }

    WittVec frobenius() const { return map([](const K& x) { return x.frobenius(); }); }
    WittVec frobenius_inverse() const { return map([](const K& x) { return x.frobenius_inverse(); }); }

    /// p^d * x = V^d F^d x, truncated to the same length.
    WittVec times_p_power(int d) const {
        std::vector<K> c(c_.size(), c_.front().zero_like());
        for (int i = 0; i + d < length(); ++i) {
            K y = c_[static_cast<std::size_t>(i)];
            for (int k = 0; k < d; ++k) y = y.frobenius();
            c[static_cast<std::size_t>(i + d)] = y;
        }
        return WittVec(std::move(c));
    }
    /// y with p^d * y = x for x whose first d components vanish. The last d
    /// components of y are unknown and returned as zero.
    WittVec divide_p_power(int d) const {
        std::vector<K> c(c_.size(), c_.front().zero_like());
        for (int i = 0; i + d < length(); ++i) {
            if (i < d && !c_[static_cast<std::size_t>(i)].is_zero()) throw DomainError("not divisible by p^d");
            K y = c_[static_cast<std::size_t>(i + d)];
            for (int k = 0; k < d; ++k) y = y.frobenius_inverse();
            c[static_cast<std::size_t>(i)] = y;
        }
        return WittVec(std::move(c));
    }

    /// Inverse of a unit (x_0 != 0) by Newton iteration y <- y (2 - x y),
    /// starting from teich(1/x_0); each step doubles the number of correct components.
    WittVec inverse() const {
        if (c_.front().is_zero()) throw DomainError("Witt vector is not a unit");
        const int n = length();
        const K& any = c_.front();
        const WittVec two = from_integer(2, any, n);
        WittVec y = teichmuller(any.one_like() / c_.front(), n);
        for (int correct = 1; correct < n; correct *= 2) y = y * (two - *this * y);
        return y;
    }

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i > 0) out += ", ";
            out += c_[i].to_string();
        }
        return out + ")";
    }

   private:
    template <class Fn>
    WittVec map(Fn fn) const {
        std::vector<K> c;
        c.reserve(c_.size());
        for (const auto& x : c_) c.push_back(fn(x));
        return WittVec(std::move(c));
    }

    static WittVec combine(const WittVec& x, const WittVec& y, bool add) {
        if (x.length() != y.length() || x.prime() != y.prime()) throw DomainError("Witt vectors of different shape");
        const int n = x.length();
        const WittPolySet& polys = WittPolySet::get(x.prime(), n);
        std::vector<K> vars = x.c_;
        vars.insert(vars.end(), y.c_.begin(), y.c_.end());
        std::vector<K> out;
        out.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            out.push_back(detail::evaluate_mod_p(add ? polys.sum_mod_p(i) : polys.product_mod_p(i), polys.layout(), vars));
        }
        return WittVec(std::move(out));
    }

    std::vector<K> c_;
};

/**
 * Element p^e * x of W(k)[1/p] with x in W_n(k). Either x is a unit known in
 * its first `rel` components, or the element is zero modulo p^e (rel = 0,
 * x = 0), or it is exactly zero. The value is known modulo p^{e + rel}.
 */
template <PerfectFieldElement K>
class LocalizedWitt {
   public:
    /// Exact zero.
    static LocalizedWitt exact_zero(const K& any, int n) {
        LocalizedWitt z(0, WittVec<K>::zero(any, n), 0);
        z.exact_zero_ = true;
        return z;
    }
    /// Zero known only modulo p^precision.
    static LocalizedWitt zero_mod(const K& any, int n, std::int64_t precision) {
        return LocalizedWitt(precision, WittVec<K>::zero(any, n), 0);
    }
    /// p^shift * x for a length-n vector known in all components; normalizes so
    /// that the stored vector is a unit.
    static LocalizedWitt from_witt(const WittVec<K>& x, std::int64_t shift = 0) {
        return LocalizedWitt(shift, x, x.length()).normalized();
    }
    static LocalizedWitt teichmuller(const K& a, int n) {
        if (a.is_zero()) return exact_zero(a, n);
        return from_witt(WittVec<K>::teichmuller(a, n));
    }
    static LocalizedWitt from_integer(std::int64_t m, const K& any, int n) {
        if (m == 0) return exact_zero(any, n);
        const std::int64_t p = any.characteristic();
        std::int64_t e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        return from_witt(WittVec<K>::from_integer(m, any, n), e);
    }
    /// p^e.
    static LocalizedWitt p_power(std::int64_t e, const K& any, int n) {
        return LocalizedWitt(e, WittVec<K>::one(any, n), n);
    }

    int length() const { return x_.length(); }
    std::int64_t prime() const { return x_.prime(); }
    std::int64_t shift() const { return e_; }
    const WittVec<K>& unit_part() const { return x_; }
    int relative_precision() const { return rel_; }
    /// Exponent N such that the value is known modulo p^N (meaningless for exact zero).
    std::int64_t absolute_precision() const { return e_ + rel_; }
    bool is_exact_zero() const { return exact_zero_; }
    bool is_known_nonzero() const { return !exact_zero_ && rel_ > 0; }
    const K& any() const { return x_[0]; }

    /// Valuation, nullopt for exact zero. Throws InsufficientPrecision when the
    /// element is zero at the available precision.
    std::optional<std::int64_t> valuation() const {
        if (exact_zero_) return std::nullopt;
        if (rel_ == 0) {
            throw InsufficientPrecision("Witt vector vanishes modulo p^" + std::to_string(e_));
        }
        return e_;
    }
    /// Lower bound on the valuation: the valuation if known, else the precision.
    std::optional<std::int64_t> valuation_lower_bound() const {
        if (exact_zero_) return std::nullopt;
        return e_;
    }
    /// Image in the residue field; requires valuation >= 0.
    K residue() const {
        if (exact_zero_ || e_ > 0) return x_[0].zero_like();
        if (e_ < 0 && rel_ > 0) throw DomainError("residue of an element with negative valuation");
        if (rel_ == 0) throw InsufficientPrecision("residue undetermined");
        return x_[0];
    }

    LocalizedWitt operator-() const {
        LocalizedWitt r = *this;
        r.x_ = -x_;
        return r;
    }
    friend LocalizedWitt operator+(const LocalizedWitt& a, const LocalizedWitt& b) {
        if (a.exact_zero_) return b;
        if (b.exact_zero_) return a;
        const std::int64_t e = std::min(a.e_, b.e_);
        const std::int64_t abs = std::min(a.absolute_precision(), b.absolute_precision());
        const int n = a.length();
        const std::int64_t rel = std::min<std::int64_t>(abs - e, n);
        if (rel <= 0) return zero_mod(a.any(), n, abs);
        auto aligned = [&](const LocalizedWitt& z) {
            const std::int64_t d = z.e_ - e;
            return d >= n ? WittVec<K>::zero(z.any(), n) : z.x_.times_p_power(static_cast<int>(d));
        };
        WittVec<K> s = aligned(a) + aligned(b);
        return LocalizedWitt(e, truncate(s, static_cast<int>(rel)), static_cast<int>(rel)).normalized();
    }
    friend LocalizedWitt operator-(const LocalizedWitt& a, const LocalizedWitt& b) { return a + (-b); }
    friend LocalizedWitt operator*(const LocalizedWitt& a, const LocalizedWitt& b) {
        if (a.exact_zero_) return a;
        if (b.exact_zero_) return b;
        const int rel = std::min(a.rel_, b.rel_);
        const std::int64_t e = a.e_ + b.e_;
        if (rel == 0) return zero_mod(a.any(), a.length(), e);
        return LocalizedWitt(e, truncate(a.x_ * b.x_, rel), rel);
    }
    LocalizedWitt inverse() const {
        if (exact_zero_) throw DomainError("inverse of zero");
        if (rel_ == 0) throw InsufficientPrecision("inverse of an element that vanishes at working precision");
        return LocalizedWitt(-e_, truncate(x_.inverse(), rel_), rel_);
    }
    friend LocalizedWitt operator/(const LocalizedWitt& a, const LocalizedWitt& b) { return a * b.inverse(); }

    /// Multiplies by p^d without touching components.
    LocalizedWitt times_p_power(std::int64_t d) const {
        LocalizedWitt r = *this;
        if (!exact_zero_) r.e_ += d;
        return r;
    }

    /// "p^e*(x_0, ..., x_{n-1}) [rel r]", "0" or "O(p^N)".
    std::string to_string() const {
        if (exact_zero_) return "0";
        if (rel_ == 0) return "O(p^" + std::to_string(e_) + ")";
        std::string out = e_ == 0 ? "" : "p^" + std::to_string(e_) + "*";
        out += x_.to_string();
        if (rel_ < length()) out += " [rel " + std::to_string(rel_) + "]";
        return out;
    }

   private:
    LocalizedWitt(std::int64_t e, WittVec<K> x, int rel) : e_(e), x_(std::move(x)), rel_(rel) {}

    static WittVec<K> truncate(const WittVec<K>& x, int rel) {
        if (rel >= x.length()) return x;
        std::vector<K> c = x.components();
        for (std::size_t i = static_cast<std::size_t>(rel); i < c.size(); ++i) c[i] = c[i].zero_like();
        return WittVec<K>(std::move(c));
    }

    LocalizedWitt normalized() const {
        if (exact_zero_) return *this;
        for (int i = 0; i < rel_; ++i) {
            if (!x_[i].is_zero()) {
                if (i == 0) return *this;
                return LocalizedWitt(e_ + i, truncate(x_.divide_p_power(i), rel_ - i), rel_ - i);
            }
        }
        return zero_mod(x_[0], length(), e_ + rel_);
    }

    std::int64_t e_ = 0;
    WittVec<K> x_;
    int rel_ = 0;
    bool exact_zero_ = false;
};

/// Valuation as a rational, nullopt for exact zero.
template <PerfectFieldElement K>
std::optional<Rational> witt_valuation(const LocalizedWitt<K>& x) {
    const auto v = x.valuation();
    if (!v) return std::nullopt;
    return Rational(static_cast<long>(*v));
}

}  // namespace valfield::witt

#endif

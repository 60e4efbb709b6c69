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

#ifndef VALFIELD_FIELDS_PERF_RATFN_HPP
#define VALFIELD_FIELDS_PERF_RATFN_HPP

#include <algorithm>
#include <string>

#include "valfield/core/rational.hpp"
#include "valfield/core/squarefree.hpp"

namespace valfield {

namespace detail {
inline std::size_t prime_power(std::int64_t p, int e) {
    std::size_t r = 1;
    for (int i = 0; i < e; ++i) r *= static_cast<std::size_t>(p);
    return r;
}
}  // namespace detail

/**
 * Element of F(t)^perf for a perfect field F, stored as a rational function
 * body(u) in u = t^(1/p^m). The depth m is kept minimal, so equal elements
 * have equal representations.
 */
template <PerfectFieldElement F>
class PerfRatFn {
   public:
    using Coeff = F;

    explicit PerfRatFn(RatFn<F> body, int depth = 0) : body_(std::move(body)), depth_(depth) {
        if (depth_ < 0) throw DomainError("negative perfect-closure depth");
        canonicalize();
    }
    static PerfRatFn constant(const F& c, char var = 't') { return PerfRatFn(RatFn<F>::constant(c, var)); }
    static PerfRatFn variable(const F& any, char var = 't') { return PerfRatFn(RatFn<F>::variable(any, var)); }
    /// t^(1/p^m).
    static PerfRatFn variable_root(const F& any, int m, char var = 't') {
        return PerfRatFn(RatFn<F>::variable(any, var), m);
    }

    int depth() const { return depth_; }
    const RatFn<F>& body() const { return body_; }
    /// The same element written in u = t^(1/p^m) for m >= depth().
    RatFn<F> body_at_depth(int m) const {
        if (m < depth_) throw DomainError("cannot lower the depth of a perfect-closure element");
        return body_.inflate(detail::prime_power(characteristic(), m - depth_));
    }
    char var() const { return body_.var(); }
    bool is_zero() const { return body_.is_zero(); }
    bool is_constant() const { return body_.is_constant(); }
    std::int64_t characteristic() const { return body_.characteristic(); }

    PerfRatFn zero_like() const { return PerfRatFn(body_.zero_like()); }
    PerfRatFn one_like() const { return PerfRatFn(body_.one_like()); }
    PerfRatFn from_integer(std::int64_t n) const { return PerfRatFn(body_.from_integer(n)); }

    PerfRatFn operator-() const { return PerfRatFn(-body_, depth_); }
    friend PerfRatFn operator+(const PerfRatFn& a, const PerfRatFn& b) {
        const int m = std::max(a.depth_, b.depth_);
        return PerfRatFn(a.body_at_depth(m) + b.body_at_depth(m), m);
    }
    friend PerfRatFn operator-(const PerfRatFn& a, const PerfRatFn& b) { return a + (-b); }
    friend PerfRatFn operator*(const PerfRatFn& a, const PerfRatFn& b) {
        const int m = std::max(a.depth_, b.depth_);
        return PerfRatFn(a.body_at_depth(m) * b.body_at_depth(m), m);
    }
    PerfRatFn inverse() const { return PerfRatFn(body_.inverse(), depth_); }
    friend PerfRatFn operator/(const PerfRatFn& a, const PerfRatFn& b) { return a * b.inverse(); }
    friend bool operator==(const PerfRatFn& a, const PerfRatFn& b) {
        return a.depth_ == b.depth_ && a.body_ == b.body_;
    }

    /// x -> x^p: coefficients go through Frobenius and u -> u^p.
    PerfRatFn frobenius() const {
        const auto p = static_cast<std::size_t>(characteristic());
        return PerfRatFn(body_.map_coeffs([](const F& c) { return c.frobenius(); }).inflate(p), depth_);
    }
    /// x -> x^(1/p): one level deeper with p-th roots of the coefficients.
    PerfRatFn frobenius_inverse() const {
        return PerfRatFn(body_.map_coeffs([](const F& c) { return c.frobenius_inverse(); }), depth_ + 1);
    }

    /// Image under the ring map t -> image_of_t, c -> embed(c). R must be perfect.
    template <class R, class Embed>
    R substitute(const R& image_of_t, Embed&& embed) const {
        R u = image_of_t;
        for (int i = 0; i < depth_; ++i) u = u.frobenius_inverse();
        return body_.num().evaluate_in(u, embed) / body_.den().evaluate_in(u, embed);
    }

    std::string to_string() const {
        const std::string s = body_.to_string();
        if (depth_ == 0) return s;
        const std::string root = std::string(1, var()) + "^(1/" + std::to_string(detail::prime_power(characteristic(), depth_)) + ")";
        std::string out;
        for (char c : s) {
            if (c == var())
                out += root;
            else
                out += c;
        }
        return out;
    }
    friend std::ostream& operator<<(std::ostream& os, const PerfRatFn& x) { return os << x.to_string(); }

   private:
    void canonicalize() {
        const auto p = static_cast<std::size_t>(characteristic());
        while (depth_ > 0 && body_.is_inflated(p)) {
            body_ = body_.deflate(p);
            --depth_;
        }
    }

    RatFn<F> body_;
    int depth_ = 0;
};

template <PerfectFieldElement F>
bool is_square_perf(const PerfRatFn<F>& x) {
    // F(t)^perf = F(u)^perf with u = t^(1/p^m), so the body decides.
    return is_square_perf(x.body());
}

template <PerfectFieldElement F>
bool is_square_in_field(const PerfRatFn<F>& x) {
    return is_square_perf(x);
}

/// The t-adic valuation extended to F(t)^perf; value group Z[1/p].
template <PerfectFieldElement F>
Rational variable_adic_valuation(const PerfRatFn<F>& x) {
    return Rational(Integer(x.body().t_adic_order()),
                    Integer(static_cast<unsigned long>(detail::prime_power(x.characteristic(), x.depth()))));
}

/**
 * Gauss extension to F(t)^perf of the variable-adic valuation on the
 * coefficient field F = G(s)^perf: min over coefficients of numerator minus
 * min over coefficients of denominator. On F_p(t, s)^perf this is v_s.
 */
template <PerfectFieldElement G>
Rational coefficient_adic_valuation(const PerfRatFn<PerfRatFn<G>>& x) {
    if (x.is_zero()) throw DomainError("valuation of zero");
    auto gauss = [](const auto& poly) {
        bool first = true;
        Rational best(0);
        for (const auto& c : poly.coeffs()) {
            if (c.is_zero()) continue;
            const Rational v = variable_adic_valuation(c);
            if (first || v < best) best = v;
            first = false;
        }
        return best;
    };
    return gauss(x.body().num()) - gauss(x.body().den());
}

using PerfFq = PerfRatFn<FinFieldElt>;
/// F_q(t, s)^perf viewed as (F_q(s)^perf)(t)^perf.
using PerfFq2 = PerfRatFn<PerfFq>;

/// Generators t, s of F_q(t, s)^perf.
inline PerfFq2 two_var_t(const FiniteField& f) { return PerfFq2::variable(PerfFq::constant(f.zero(), 's'), 't'); }
inline PerfFq2 two_var_s(const FiniteField& f) {
    return PerfFq2::constant(PerfFq::variable(f.one(), 's'), 't');
}

/// The automorphism of F_q(t, s)^perf exchanging t and s.
inline PerfFq2 swap_variables(const PerfFq2& x) {
    const FiniteField& f = x.body().num().zero_coeff().body().num().zero_coeff().field();
    const PerfFq2 t = two_var_t(f), s = two_var_s(f);
    auto embed_fq = [&](const FinFieldElt& c) { return PerfFq2::constant(PerfFq::constant(c, 's'), 't'); };
    auto embed_inner = [&](const PerfFq& c) { return c.substitute(t, embed_fq); };
    return x.substitute(s, embed_inner);
}

}  // namespace valfield

#endif

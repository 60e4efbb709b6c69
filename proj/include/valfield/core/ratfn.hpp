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

#ifndef VALFIELD_CORE_RATFN_HPP
#define VALFIELD_CORE_RATFN_HPP

#include <optional>
#include <string>
#include <utility>

#include "valfield/core/polynomial.hpp"

namespace valfield {

/**
 * Element of F(t): a fraction num/den in lowest terms with den monic.
 * F may itself be a RatFn (or a perfect closure of one), which gives the
 * towers F_q(s)(t) used for two-variable function fields.
 */
template <FieldElement F>
class RatFn {
   public:
    using Coeff = F;

    explicit RatFn(Polynomial<F> num) : num_(std::move(num)), den_(num_.one_like()) {}
    RatFn(Polynomial<F> num, Polynomial<F> den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFn constant(const F& c, char var = 't') { return RatFn(Polynomial<F>::constant(c, var)); }
    static RatFn variable(const F& any, char var = 't') { return RatFn(Polynomial<F>::x(any, var)); }

    const Polynomial<F>& num() const { return num_; }
    const Polynomial<F>& den() const { return den_; }
    char var() const { return num_.var(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    std::int64_t characteristic() const { return num_.zero_coeff().characteristic(); }
    RatFn zero_like() const { return RatFn(num_.zero_like()); }
    RatFn one_like() const { return RatFn(num_.one_like()); }
    RatFn from_integer(std::int64_t n) const {
        return RatFn(Polynomial<F>::constant(num_.zero_coeff().from_integer(n), var()));
    }

    RatFn operator-() const { return RatFn(-num_, den_, Normalized{}); }
    friend RatFn operator+(const RatFn& a, const RatFn& b) {
        if (a.den_ == b.den_) return RatFn(a.num_ + b.num_, a.den_);
        return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }
    friend RatFn operator*(const RatFn& a, const RatFn& b) {
        // Cross-cancel first to keep intermediate degrees small.
        const auto g1 = gcd(a.num_, b.den_);
        const auto g2 = gcd(b.num_, a.den_);
        return RatFn((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
    }
    RatFn inverse() const {
        if (is_zero()) throw DomainError("inverse of zero rational function");
        return RatFn(den_, num_);
    }
    friend RatFn operator/(const RatFn& a, const RatFn& b) { return a * b.inverse(); }
    friend bool operator==(const RatFn& a, const RatFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    /// Substitution t -> t^k in numerator and denominator.
    RatFn inflate(std::size_t k) const { return RatFn(num_.inflate(k), den_.inflate(k), Normalized{}); }
    bool is_inflated(std::size_t k) const { return num_.is_inflated(k) && den_.is_inflated(k); }
    RatFn deflate(std::size_t k) const { return RatFn(num_.deflate(k), den_.deflate(k), Normalized{}); }

    template <class Fn>
    auto map_coeffs(Fn&& fn) const {
        auto n = num_.map_coeffs(fn);
        auto d = den_.map_coeffs(fn);
        return RatFn<typename decltype(n)::value_type>(n, d);
    }

    /// t-adic order: ord_t(num) - ord_t(den).
    int t_adic_order() const {
        if (is_zero()) throw DomainError("t-adic order of zero");
        return num_.low_degree() - den_.low_degree();
    }

    std::string to_string() const {
        if (den_.degree() == 0) return num_.to_string();
        auto wrap = [](const Polynomial<F>& f) {
            std::string s = f.to_string();
            return (f.degree() >= 1 && (f.coeffs().size() > 2 || s.find(' ') != std::string::npos))
                       ? "(" + s + ")"
                       : s;
        };
        return wrap(num_) + "/" + wrap(den_);
    }
    friend std::ostream& operator<<(std::ostream& os, const RatFn& r) { return os << r.to_string(); }

   private:
    struct Normalized {};
    RatFn(Polynomial<F> num, Polynomial<F> den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (den_.is_zero()) throw DomainError("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = num_.one_like();
            return;
        }
        const auto g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        const F lc = den_.leading();
        if (!(lc == lc.one_like())) {
            const F inv = lc.one_like() / lc;
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    Polynomial<F> num_;
    Polynomial<F> den_;
};

/// RatFn over a non-perfect coefficient field: the p-th root exists iff both
/// reduced parts are p-th powers of polynomials.
template <FieldElement F>
std::optional<RatFn<F>> try_pth_root(const RatFn<F>& x);

namespace detail {
template <FieldElement F>
std::optional<Polynomial<F>> try_pth_root_poly(const Polynomial<F>& f) {
    const auto p = static_cast<std::size_t>(f.zero_coeff().characteristic());
    if (!f.is_inflated(p)) return std::nullopt;
    const auto g = f.deflate(p);
    std::vector<F> out;
    out.reserve(g.coeffs().size());
    for (const auto& c : g.coeffs()) {
        auto r = try_pth_root(c);
        if (!r) return std::nullopt;
        out.push_back(*r);
    }
    return Polynomial<F>(std::move(out), f.zero_coeff(), f.var());
}
}  // namespace detail

template <FieldElement F>
std::optional<RatFn<F>> try_pth_root(const RatFn<F>& x) {
    auto n = detail::try_pth_root_poly(x.num());
    if (!n) return std::nullopt;
    auto d = detail::try_pth_root_poly(x.den());
    if (!d) return std::nullopt;
    return RatFn<F>(*n, *d);
}

}  // namespace valfield

#endif

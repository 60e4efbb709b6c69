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

#ifndef VALFIELD_CORE_POLYNOMIAL_HPP
#define VALFIELD_CORE_POLYNOMIAL_HPP

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "valfield/core/errors.hpp"
#include "valfield/core/field_concepts.hpp"

namespace valfield {

/**
 * Dense univariate polynomial over a field F, coefficients stored from the
 * constant term upwards with no trailing zeros. A zero element of F is kept
 * alongside so that the zero polynomial still knows its coefficient field.
 */
template <FieldElement F>
class Polynomial {
   public:
    using value_type = F;

    explicit Polynomial(F zero, char var = 't') : zero_(zero.zero_like()), var_(var) {}
    Polynomial(std::vector<F> coeffs, F zero, char var = 't')
        : c_(std::move(coeffs)), zero_(zero.zero_like()), var_(var) {
        trim();
    }

    static Polynomial constant(const F& c, char var = 't') { return Polynomial({c}, c, var); }
    static Polynomial monomial(const F& c, std::size_t deg, char var = 't') {
        std::vector<F> v(deg + 1, c.zero_like());
        v[deg] = c;
        return Polynomial(std::move(v), c, var);
    }
    /// The variable itself.
    static Polynomial x(const F& any, char var = 't') { return monomial(any.one_like(), 1, var); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<F>& coeffs() const { return c_; }
    F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }
    F leading() const { return c_.empty() ? zero_ : c_.back(); }
    const F& zero_coeff() const { return zero_; }
    char var() const { return var_; }
    Polynomial with_var(char v) const {
        Polynomial r = *this;
        r.var_ = v;
        return r;
    }
    Polynomial zero_like() const { return Polynomial(zero_, var_); }
    Polynomial one_like() const { return constant(zero_.one_like(), var_); }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) { return *this += -o; }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return a.zero_like();
        std::vector<F> out(a.c_.size() + b.c_.size() - 1, a.zero_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(out), a.zero_, a.var_);
    }
    Polynomial scaled(const F& s) const {
        Polynomial r = *this;
        for (auto& c : r.c_) c = c * s;
        r.trim();
        return r;
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    /// Euclidean division; throws on a zero divisor.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        if (d.is_zero()) throw DomainError("polynomial division by zero");
        Polynomial r = *this;
        if (r.degree() < d.degree()) return {zero_like(), r};
        std::vector<F> q(static_cast<std::size_t>(r.degree() - d.degree() + 1), zero_);
        const F lead_inv = d.leading().one_like() / d.leading();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            const auto shift = static_cast<std::size_t>(r.degree() - d.degree());
            const F f = r.leading() * lead_inv;
            q[shift] = f;
            for (std::size_t i = 0; i < d.c_.size(); ++i) r.c_[shift + i] = r.c_[shift + i] - f * d.c_[i];
            r.c_.pop_back();
            r.trim();
        }
        return {Polynomial(std::move(q), zero_, var_), r};
    }
    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return a.divmod(b).first; }
    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return a.divmod(b).second; }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(leading().one_like() / leading());
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return zero_like();
        std::vector<F> out;
        out.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * zero_.from_integer(static_cast<std::int64_t>(i)));
        return Polynomial(std::move(out), zero_, var_);
    }

    /// f(t) -> f(t^k).
    Polynomial inflate(std::size_t k) const {
        if (is_zero()) return *this;
        std::vector<F> out(static_cast<std::size_t>(degree()) * k + 1, zero_);
        for (std::size_t i = 0; i < c_.size(); ++i) out[i * k] = c_[i];
        return Polynomial(std::move(out), zero_, var_);
    }
    /// Whether every nonzero term has exponent divisible by k.
    bool is_inflated(std::size_t k) const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (i % k != 0 && !c_[i].is_zero()) return false;
        return true;
    }
    /// Inverse of inflate; requires is_inflated(k).
    Polynomial deflate(std::size_t k) const {
        if (!is_inflated(k)) throw DomainError("polynomial is not a polynomial in t^k");
        if (is_zero()) return *this;
        std::vector<F> out;
        for (std::size_t i = 0; i < c_.size(); i += k) out.push_back(c_[i]);
        return Polynomial(std::move(out), zero_, var_);
    }

    template <class Fn>
    auto map_coeffs(Fn&& fn) const {
        using G = decltype(fn(zero_));
        std::vector<G> out;
        out.reserve(c_.size());
        for (const auto& c : c_) out.push_back(fn(c));
        return Polynomial<G>(std::move(out), fn(zero_), var_);
    }

    /// Horner evaluation in any algebra R that accepts F-scalars through `embed`.
    template <class R, class Embed>
    R evaluate_in(const R& point, Embed&& embed) const {
        R acc = embed(zero_);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * point + embed(c_[i]);
        return acc;
    }
    F operator()(const F& point) const {
        return evaluate_in(point, [](const F& c) { return c; });
    }

    /// Order of vanishing at t = 0; -1 for the zero polynomial.
    int low_degree() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return static_cast<int>(i);
        return -1;
    }

    std::string to_string() const;

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<F> c_;
    F zero_;
    char var_ = 't';
};

namespace detail {
template <class F>
std::string coeff_string(const F& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}
inline bool needs_parens(const std::string& s) {
    return s.find_first_of("+-/ ", s.front() == '-' ? 1 : 0) != std::string::npos;
}
}  // namespace detail

template <FieldElement F>
std::string Polynomial<F>::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        std::string cs = detail::coeff_string(c_[i]);
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += detail::needs_parens(cs) ? "(" + cs + ")" : cs;
            continue;
        }
        if (!(c_[i] == c_[i].one_like())) out += (detail::needs_parens(cs) ? "(" + cs + ")" : cs) + "*";
        out += var_;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

template <FieldElement F>
std::ostream& operator<<(std::ostream& os, const Polynomial<F>& f) {
    return os << f.to_string();
}

/// Monic gcd; gcd(0, 0) = 0.
template <FieldElement F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
    while (!b.is_zero()) {
        Polynomial<F> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace valfield

#endif

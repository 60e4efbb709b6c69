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

#include "valfield/fields/hahn.hpp"

#include <vector>

#include "valfield/core/errors.hpp"

namespace valfield {

namespace {

std::optional<OagElement> min_opt(const std::optional<OagElement>& a, const std::optional<OagElement>& b) {
    if (!a) return b;
    if (!b) return a;
    return *b < *a ? b : a;
}

void check_same_field(const HahnElt& a, const HahnElt& b) {
    if (!(a.field() == b.field())) throw DomainError("Hahn series over different coefficient fields");
}

// binom(1/2, k) reduced into F_p; its denominator is a power of 2.
FinFieldElt half_binomial(const FiniteField& f, int k) {
    Rational b(1);
    const Rational half(Integer(1), Integer(2));
    for (int j = 0; j < k; ++j) b = b * (half - Rational(j)) / Rational(j + 1);
    const Integer p(f.characteristic());
    Integer num = b.num() % p;
    if (num < 0) num += p;
    Integer den = b.den() % p;
    if (den == 0) throw InternalError("binomial coefficient with denominator divisible by p");
    return f.from_integer(num.get_si()) / f.from_integer(den.get_si());
}

// Unit part of x: x = c t^g (1 + eps). Returns eps.
HahnElt unit_part_minus_one(const HahnElt& x, const LeadingTerm& lt) {
    const HahnElt scale = HahnElt::monomial(lt.coefficient.inverse(), -lt.exponent);
    return x * scale - x.one_like();
}

// Relative precision reached by `terms` terms of a power series in eps.
std::optional<OagElement> series_precision(const HahnElt& eps, int terms) {
    std::optional<OagElement> rel = eps.precision();
    if (!eps.terms().empty()) rel = min_opt(rel, Rational(terms) * eps.terms().begin()->first);
    return rel;
}

HahnElt sum_series(const HahnElt& eps, int terms, const std::optional<OagElement>& rel,
                   const std::vector<FinFieldElt>& coeffs) {
    auto cut = [&](const HahnElt& h) { return rel ? h.truncated(*rel) : h; };
    HahnElt sum = HahnElt::constant(coeffs[0]);
    HahnElt power = eps.one_like();
    for (int k = 1; k < terms; ++k) {
        power = cut(power * eps);
        if (power.is_zero()) break;
        sum = sum + power * HahnElt::constant(coeffs[static_cast<std::size_t>(k)]);
    }
    return cut(sum);
}

}  // namespace

HahnElt::HahnElt(const FiniteField& f, Terms terms, std::optional<OagElement> precision)
    : field_(&f), terms_(std::move(terms)), prec_(std::move(precision)) {
    normalize();
}

void HahnElt::normalize() {
    const std::int64_t p = field_->characteristic();
    if (prec_ && (prec_->prime() != p || !prec_->in_gamma())) throw DomainError("Hahn precision outside Gamma");
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.prime() != p || !it->first.in_gamma()) throw DomainError("Hahn exponent outside Gamma");
        if (!(it->second.field() == *field_)) throw DomainError("Hahn coefficient from a different field");
        if (it->second.is_zero() || (prec_ && !(it->first < *prec_)))
            it = terms_.erase(it);
        else
            ++it;
    }
}

HahnElt HahnElt::monomial(const FinFieldElt& c, const OagElement& exponent) {
    Terms t;
    t.emplace(exponent, c);
    return HahnElt(c.field(), std::move(t), std::nullopt);
}

HahnElt HahnElt::constant(const FinFieldElt& c) { return monomial(c, OagElement(c.field().characteristic())); }

HahnElt HahnElt::basis_monomial(const FiniteField& f, std::int64_t index) {
    return monomial(f.one(), OagElement::unit(f.characteristic(), index));
}

std::optional<OagElement> HahnElt::lower_bound() const {
    if (!terms_.empty()) return terms_.begin()->first;
    return prec_;
}

HahnElt HahnElt::truncated(const OagElement& precision) const {
    return HahnElt(*field_, terms_, min_opt(prec_, precision));
}

HahnElt HahnElt::operator-() const {
    Terms t;
    for (const auto& [e, c] : terms_) t.emplace(e, -c);
    return HahnElt(*field_, std::move(t), prec_);
}

HahnElt operator+(const HahnElt& a, const HahnElt& b) {
    check_same_field(a, b);
    HahnElt::Terms t = a.terms_;
    for (const auto& [e, c] : b.terms_) {
        auto [it, inserted] = t.emplace(e, c);
        if (!inserted) it->second = it->second + c;
    }
    return HahnElt(*a.field_, std::move(t), min_opt(a.prec_, b.prec_));
}

HahnElt operator*(const HahnElt& a, const HahnElt& b) {
    check_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return a.zero_like();
    std::optional<OagElement> prec;
    if (a.prec_) prec = min_opt(prec, *a.prec_ + *b.lower_bound());
    if (b.prec_) prec = min_opt(prec, *b.prec_ + *a.lower_bound());
    HahnElt::Terms t;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            OagElement e = ea + eb;
            if (prec && !(e < *prec)) continue;
            auto [it, inserted] = t.emplace(std::move(e), ca * cb);
            if (!inserted) it->second = it->second + ca * cb;
        }
    }
    return HahnElt(*a.field_, std::move(t), std::move(prec));
}

HahnElt operator/(const HahnElt& a, const HahnElt& b) {
    check_same_field(a, b);
    if (b.is_zero()) throw DomainError("division by zero Hahn series");
    if (!b.is_exact() || b.terms_.size() != 1)
        throw DomainError("Hahn division needs an exact monomial divisor; use hahn_inv for series");
    const auto& [e, c] = *b.terms_.begin();
    return a * HahnElt::monomial(c.inverse(), -e);
}

HahnElt HahnElt::frobenius() const {
    const std::int64_t p = characteristic();
    Terms t;
    for (const auto& [e, c] : terms_) t.emplace(p * e, c.frobenius());
    return HahnElt(*field_, std::move(t), prec_ ? std::optional<OagElement>(p * *prec_) : std::nullopt);
}

HahnElt HahnElt::frobenius_inverse() const {
    const Rational inv(Integer(1), Integer(characteristic()));
    Terms t;
    for (const auto& [e, c] : terms_) t.emplace(inv * e, c.frobenius_inverse());
    return HahnElt(*field_, std::move(t), prec_ ? std::optional<OagElement>(inv * *prec_) : std::nullopt);
}

std::string HahnElt::to_string() const {
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string cs = c.to_string();
        if (cs.find_first_of("+x") != std::string::npos) cs = "(" + cs + ")";
        out += e.is_zero() ? cs : cs + "*t^[" + e.to_string() + "]";
    }
    if (out.empty()) out = "0";
    if (prec_) out += " (prec " + prec_->to_string() + ")";
    return out;
}

OagElement hahn_valuation(const HahnElt& x) {
    if (x.is_zero()) throw DomainError("valuation of zero is infinite");
    if (x.terms().empty())
        throw InsufficientPrecision("no term of the Hahn series is known below " + x.precision()->to_string());
    return x.terms().begin()->first;
}

LeadingTerm leading_term(const HahnElt& x) {
    const OagElement v = hahn_valuation(x);
    return {v, x.terms().begin()->second};
}

HahnElt hahn_inv(const HahnElt& x, int terms) {
    if (terms < 1) throw DomainError("series inverse needs at least one term");
    const LeadingTerm lt = leading_term(x);
    const HahnElt scale = HahnElt::monomial(lt.coefficient.inverse(), -lt.exponent);
    const HahnElt eps = unit_part_minus_one(x, lt);
    if (eps.is_zero()) return scale;
    const auto rel = series_precision(eps, terms);
    std::vector<FinFieldElt> coeffs;
    for (int k = 0; k < terms; ++k) coeffs.push_back(k % 2 == 0 ? x.field().one() : -x.field().one());
    return sum_series(eps, terms, rel, coeffs) * scale;
}

HahnElt hahn_sqrt(const HahnElt& x, int terms) {
    if (terms < 1) throw DomainError("series square root needs at least one term");
    const LeadingTerm lt = leading_term(x);
    const auto half = oag::divide_in_gamma(lt.exponent, 2);
    if (!half) throw DomainError("valuation is not divisible by 2");
    if (!finite_field_square(lt.coefficient)) throw DomainError("leading coefficient is not a square");
    const HahnElt scale = HahnElt::monomial(finite_field_sqrt(lt.coefficient), *half);
    const HahnElt eps = unit_part_minus_one(x, lt);
    if (eps.is_zero()) return scale;
    const auto rel = series_precision(eps, terms);
    std::vector<FinFieldElt> coeffs;
    for (int k = 0; k < terms; ++k) coeffs.push_back(half_binomial(x.field(), k));
    return sum_series(eps, terms, rel, coeffs) * scale;
}

HahnSquareTest hahn_is_square(const HahnElt& x, int root_terms) {
    const LeadingTerm lt = leading_term(x);
    HahnSquareTest out;
    const auto half = oag::divide_in_gamma(lt.exponent, 2);
    if (!half) {
        out.reason = "valuation " + lt.exponent.to_string() + " is not divisible by 2 in Gamma";
        return out;
    }
    if (!finite_field_square(lt.coefficient)) {
        out.reason = "leading coefficient " + lt.coefficient.to_string() + " is not a square";
        return out;
    }
    out.is_square = true;
    out.reason = "valuation 2-divisible and leading coefficient a square";
    out.half_valuation = *half;
    out.coefficient_root = finite_field_sqrt(lt.coefficient);
    out.root = hahn_sqrt(x, root_terms);
    return out;
}

OagElement coarsen_hahn_valuation(const HahnElt& x, const oag::ConvexSubgroup& delta) {
    return oag::quotient_map(hahn_valuation(x), delta);
}

HahnElt perf_field_automorphism_shift(const HahnElt& x, std::int64_t by) {
    HahnElt::Terms t;
    for (const auto& [e, c] : x.terms()) t.emplace(e.shifted(by), c);
    std::optional<OagElement> prec;
    if (x.precision()) prec = x.precision()->shifted(by);
    return HahnElt(x.field(), std::move(t), std::move(prec));
}

namespace {

// Splits on '+' outside brackets and parentheses.
std::vector<std::string> split_terms(std::string_view s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == '+' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace

HahnElt parse_hahn(std::string_view text, const FiniteField& f) {
    const std::int64_t p = f.characteristic();
    std::string body = trim(text);
    auto fail = [&](const std::string& why) -> HahnElt {
        throw DomainError("cannot parse Hahn series '" + std::string(text) + "': " + why);
    };
    std::optional<OagElement> prec;
    const auto pp = body.rfind("(prec");
    if (pp != std::string::npos) {
        if (body.back() != ')') return fail("unterminated precision");
        prec = oag::parse_oag(body.substr(pp + 5, body.size() - pp - 6), p);
        body = trim(body.substr(0, pp));
    }
    HahnElt out = prec ? HahnElt(f).truncated(*prec) : HahnElt(f);
    if (body == "0") return out;
    HahnElt::Terms terms;
    for (const auto& raw : split_terms(body)) {
        const std::string term = trim(raw);
        if (term.empty()) return fail("empty term");
        OagElement e(p);
        std::string coef = term;
        const auto tpos = term.find("t^[");
        if (tpos != std::string::npos) {
            if (term.back() != ']') return fail("expected ']'");
            e = oag::parse_oag(term.substr(tpos + 3, term.size() - tpos - 4), p);
            coef = trim(term.substr(0, tpos));
            if (coef.empty()) {
                coef = "1";
            } else {
                if (coef.back() != '*') return fail("expected '*' before t^[...]");
                coef = trim(coef.substr(0, coef.size() - 1));
            }
        }
        const FinFieldElt c = parse_finite_field_element(coef, f);
        if (prec && !(e < *prec))
            return fail("term t^[" + e.to_string() + "] is not below the precision " + prec->to_string());
        auto [it, inserted] = terms.emplace(e, c);
        if (!inserted) it->second = it->second + c;
    }
    return HahnElt(f, std::move(terms), prec);
}

}  // namespace valfield

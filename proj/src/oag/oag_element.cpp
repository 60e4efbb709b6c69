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

#include "valfield/oag/oag_element.hpp"

#include <cctype>

#include "valfield/core/errors.hpp"

namespace valfield::oag {

namespace {

// Indices in decreasing significance.
template <class Fn>
void for_each_by_significance(const std::map<std::int64_t, Rational>& m, Fn&& fn) {
    if constexpr (kSmallerIndexMoreSignificant) {
        for (const auto& kv : m) fn(kv.first, kv.second);
    } else {
        for (auto it = m.rbegin(); it != m.rend(); ++it) fn(it->first, it->second);
    }
}

}  // namespace

OagElement OagElement::unit(std::int64_t p, std::int64_t index) { return scalar(p, Rational(1), index); }

OagElement OagElement::scalar(std::int64_t p, const Rational& r, std::int64_t index) {
    OagElement a(p);
    a.set(index, r);
    return a;
}

void OagElement::set(std::int64_t index, const Rational& value) {
    if (value.is_zero())
        coords_.erase(index);
    else
        coords_[index] = value;
}

Rational OagElement::coord(std::int64_t index) const {
    auto it = coords_.find(index);
    return it == coords_.end() ? Rational(0) : it->second;
}

std::int64_t OagElement::leading_index() const {
    if (coords_.empty()) throw DomainError("zero element has no leading index");
    return kSmallerIndexMoreSignificant ? coords_.begin()->first : coords_.rbegin()->first;
}

int OagElement::sign() const { return coords_.empty() ? 0 : coord(leading_index()).sign(); }

bool OagElement::in_gamma() const {
    for (const auto& [i, c] : coords_)
        if (exact_power_exponent(c.den(), p_) < 0) return false;
    return true;
}

OagElement OagElement::operator-() const {
    OagElement r(p_);
    for (const auto& [i, c] : coords_) r.coords_.emplace(i, -c);
    return r;
}

OagElement& OagElement::operator+=(const OagElement& o) {
    if (p_ != o.p_) throw DomainError("ordered group elements over different primes");
    for (const auto& [i, c] : o.coords_) set(i, coord(i) + c);
    return *this;
}

OagElement& OagElement::operator-=(const OagElement& o) { return *this += -o; }

OagElement operator*(const Rational& r, const OagElement& a) {
    OagElement out(a.p_);
    if (r.is_zero()) return out;
    for (const auto& [i, c] : a.coords_) out.coords_.emplace(i, r * c);
    return out;
}

bool operator<(const OagElement& a, const OagElement& b) { return lex_compare(a, b) == Order::less; }

OagElement OagElement::shifted(std::int64_t by) const {
    OagElement out(p_);
    for (const auto& [i, c] : coords_) out.coords_.emplace(i + by, c);
    return out;
}

Order lex_compare(const OagElement& a, const OagElement& b) {
    if (a.prime() != b.prime()) throw DomainError("ordered group elements over different primes");
    const int s = (a - b).sign();
    return s < 0 ? Order::less : (s > 0 ? Order::greater : Order::equal);
}

std::string format_coefficient(const Rational& r, std::int64_t p) {
    std::string out = r.num().get_str();
    if (r.is_integer()) return out;
    const int e = exact_power_exponent(r.den(), p);
    if (e == 1) return out + "/p";
    if (e > 1) return out + "/p^" + std::to_string(e);
    return out + "/" + r.den().get_str();
}

std::string OagElement::to_string() const {
    if (coords_.empty()) return "0";
    std::string out;
    bool first = true;
    for_each_by_significance(coords_, [&](std::int64_t i, const Rational& c) {
        const Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        if (!(mag == Rational(1))) out += format_coefficient(mag, p_) + "*";
        out += "e" + std::to_string(i);
    });
    return out;
}

namespace {

class OagParser {
   public:
    OagParser(std::string_view s, std::int64_t p) : s_(s), p_(p) {}

    OagElement parse() {
        OagElement out(p_);
        skip_ws();
        if (at_end()) fail("empty expression");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            out += term(sign);
            skip_ws();
        }
        return out;
    }

   private:
    OagElement term(int sign) {
        Rational coef(sign);
        if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '(') {
            coef = coef * coefficient();
            skip_ws();
            if (at_end() || peek() == '+' || peek() == '-') {
                if (coef.is_zero()) return OagElement(p_);
                fail("bare number is only allowed for 0");
            }
            if (peek() == '*') {
                ++pos_;
                skip_ws();
            }
        }
        if (peek() != 'e') fail("expected e<index>");
        ++pos_;
        const std::int64_t index = integer(true);
        return OagElement::scalar(p_, coef, index);
    }

    Rational coefficient() {
        bool paren = false;
        if (peek() == '(') {
            paren = true;
            ++pos_;
            skip_ws();
        }
        Rational value(Integer(integer(false)));
        skip_ws();
        if (!at_end() && peek() == '/') {
            ++pos_;
            skip_ws();
            Integer den;
            if (peek() == 'p') {
                ++pos_;
                std::int64_t e = 1;
                if (!at_end() && peek() == '^') {
                    ++pos_;
                    e = integer(false);
                }
                den = 1;
                for (std::int64_t i = 0; i < e; ++i) den *= p_;
            } else {
                den = Integer(integer(false));
            }
            if (den == 0) fail("zero denominator");
            value = value / Rational(den);
        }
        skip_ws();
        if (paren) {
            if (peek() != ')') fail("expected ')'");
            ++pos_;
        }
        return value;
    }

    std::int64_t integer(bool allow_sign) {
        bool neg = false;
        if (allow_sign && !at_end() && peek() == '-') {
            neg = true;
            ++pos_;
        }
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        const auto v = std::stoll(std::string(s_.substr(start, pos_ - start)));
        return neg ? -v : v;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw DomainError("cannot parse group element '" + std::string(s_) + "': " + msg + " at offset " +
                          std::to_string(pos_));
    }

    std::string_view s_;
    std::int64_t p_;
    std::size_t pos_ = 0;
};

}  // namespace

OagElement parse_oag(std::string_view text, std::int64_t p) { return OagParser(text, p).parse(); }

std::optional<OagElement> divide_in_gamma(const OagElement& a, std::int64_t n) {
    if (n < 1) throw DomainError("divisor must be positive");
    // n = p^e * m with gcd(m, p) = 1: a/n stays in Z[1/p] iff m divides every numerator.
    const Integer m = strip_prime(Integer(n), a.prime());
    for (const auto& [i, c] : a.coords())
        if (c.num() % m != 0) return std::nullopt;
    return Rational(Integer(1), Integer(n)) * a;
}

bool divisible_by(const OagElement& a, std::int64_t n) { return divide_in_gamma(a, n).has_value(); }

bool ConvexSubgroup::retains(std::int64_t index) const {
    return kSmallerIndexMoreSignificant ? index <= threshold : index >= threshold;
}

bool ConvexSubgroup::contains(const OagElement& a) const {
    for (const auto& [i, c] : a.coords())
        if (retains(i)) return false;
    return true;
}

OagElement quotient_map(const OagElement& a, const ConvexSubgroup& delta) {
    return a.restricted([&](std::int64_t i) { return delta.retains(i); });
}

OagElement section(const OagElement& q, const ConvexSubgroup& delta) {
    if (!(quotient_map(q, delta) == q))
        throw DomainError("class representative has support inside the convex subgroup");
    return q;
}

bool archimedean_equiv(const OagElement& a, const OagElement& b) {
    if (a.is_zero() || b.is_zero()) throw DomainError("archimedean classes are defined for nonzero elements");
    return a.leading_index() == b.leading_index();
}

}  // namespace valfield::oag

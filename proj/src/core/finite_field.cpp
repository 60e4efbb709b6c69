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

#include "valfield/core/finite_field.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "valfield/core/errors.hpp"

namespace valfield {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t p) {
    a %= p;
    return a < 0 ? a + p : a;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

using IntPoly = std::vector<std::int64_t>;  // low to high, trimmed

void trim(IntPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo the monic g over F_p.
IntPoly poly_rem(IntPoly f, const IntPoly& g, std::int64_t p) {
    trim(f);
    const std::size_t dg = g.size() - 1;
    while (f.size() > dg) {
        const std::int64_t lead = f.back();
        const std::size_t shift = f.size() - 1 - dg;
        for (std::size_t i = 0; i <= dg; ++i) f[shift + i] = mod(f[shift + i] - lead * g[i], p);
        trim(f);
    }
    return f;
}

// Monic polynomial number `index` of degree d (coefficients below x^d in base p).
IntPoly monic_from_index(std::int64_t index, int d, std::int64_t p) {
    IntPoly f(static_cast<std::size_t>(d) + 1, 0);
    for (int i = 0; i < d; ++i) {
        f[static_cast<std::size_t>(i)] = index % p;
        index /= p;
    }
    f[static_cast<std::size_t>(d)] = 1;
    return f;
}

bool is_irreducible(const IntPoly& f, std::int64_t p) {
    const int d = static_cast<int>(f.size()) - 1;
    for (int e = 1; 2 * e <= d; ++e) {
        std::int64_t count = 1;
        for (int i = 0; i < e; ++i) count *= p;
        for (std::int64_t idx = 0; idx < count; ++idx)
            if (poly_rem(f, monic_from_index(idx, e, p), p).empty()) return false;
    }
    return true;
}

}  // namespace

FiniteField::FiniteField(std::int64_t p, int k) : p_(p), k_(k), q_(1) {
    for (int i = 0; i < k; ++i) q_ *= p;
    if (k == 1) {
        modulus_ = {0, 1};
    } else {
        for (std::int64_t idx = 0;; ++idx) {
            IntPoly f = monic_from_index(idx, k, p);
            if (is_irreducible(f, p)) {
                modulus_ = std::move(f);
                break;
            }
        }
    }
}

const FiniteField& FiniteField::get(std::int64_t p, int k) {
    if (p == 2 || !is_prime(p) || p >= (1 << 20))
        throw DomainError("finite field characteristic must be an odd prime below 2^20");
    if (k < 1 || k > kMaxDegree) throw DomainError("finite field degree out of range");
    static std::mutex guard;
    static std::map<std::pair<std::int64_t, int>, std::unique_ptr<FiniteField>> registry;
    std::lock_guard lock(guard);
    auto& slot = registry[{p, k}];
    if (!slot) {
        slot.reset(new FiniteField(p, k));
        for (std::int64_t i = 1; i < slot->q_; ++i) {
            if (!finite_field_square(slot->element(i))) {
                slot->nonsquare_index_ = i;
                break;
            }
        }
    }
    return *slot;
}

FinFieldElt FiniteField::zero() const {
    FinFieldElt z;
    z.field_ = this;
    return z;
}

FinFieldElt FiniteField::one() const { return from_integer(1); }

FinFieldElt FiniteField::from_integer(std::int64_t n) const {
    FinFieldElt z = zero();
    z.c_[0] = mod(n, p_);
    return z;
}

FinFieldElt FiniteField::from_coords(const std::vector<std::int64_t>& coords) const {
    if (static_cast<int>(coords.size()) > k_) throw DomainError("too many coordinates for field element");
    FinFieldElt z = zero();
    for (std::size_t i = 0; i < coords.size(); ++i) z.c_[i] = mod(coords[i], p_);
    return z;
}

FinFieldElt FiniteField::generator() const {
    if (k_ == 1) throw DomainError("prime field has no polynomial generator");
    return from_coords({0, 1});
}

FinFieldElt FiniteField::element(std::int64_t index) const {
    if (index < 0 || index >= q_) throw DomainError("field element index out of range");
    FinFieldElt z = zero();
    for (int i = 0; i < k_; ++i) {
        z.c_[static_cast<std::size_t>(i)] = index % p_;
        index /= p_;
    }
    return z;
}

std::vector<FinFieldElt> FiniteField::elements() const {
    std::vector<FinFieldElt> out;
    out.reserve(static_cast<std::size_t>(q_));
    for (std::int64_t i = 0; i < q_; ++i) out.push_back(element(i));
    return out;
}

FinFieldElt FiniteField::nonsquare() const { return element(nonsquare_index_); }

std::int64_t FinFieldElt::index() const {
    std::int64_t idx = 0;
    for (int i = field_->degree() - 1; i >= 0; --i) idx = idx * field_->characteristic() + c_[static_cast<std::size_t>(i)];
    return idx;
}

bool FinFieldElt::is_zero() const {
    for (auto c : c_)
        if (c != 0) return false;
    return true;
}

bool FinFieldElt::is_one() const {
    if (c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool operator==(const FinFieldElt& a, const FinFieldElt& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

FinFieldElt FinFieldElt::operator-() const {
    FinFieldElt r = *this;
    const auto p = field_->characteristic();
    for (auto& c : r.c_) c = c == 0 ? 0 : p - c;
    return r;
}

FinFieldElt& FinFieldElt::operator+=(const FinFieldElt& o) {
    if (field_ != o.field_) throw DomainError("finite field mismatch");
    const auto p = field_->characteristic();
    for (std::size_t i = 0; i < c_.size(); ++i) {
        c_[i] += o.c_[i];
        if (c_[i] >= p) c_[i] -= p;
    }
    return *this;
}

FinFieldElt& FinFieldElt::operator-=(const FinFieldElt& o) { return *this += -o; }

FinFieldElt& FinFieldElt::operator*=(const FinFieldElt& o) {
    if (field_ != o.field_) throw DomainError("finite field mismatch");
    const auto p = field_->characteristic();
    const int k = field_->degree();
    if (k == 1) {
        c_[0] = (c_[0] * o.c_[0]) % p;
        return *this;
    }
    std::array<std::int64_t, 2 * FiniteField::kMaxDegree> prod{};
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[static_cast<std::size_t>(i + j)] = (prod[static_cast<std::size_t>(i + j)] + c_[static_cast<std::size_t>(i)] * o.c_[static_cast<std::size_t>(j)]) % p;
    const auto& m = field_->modulus();
    for (int d = 2 * k - 2; d >= k; --d) {
        const std::int64_t lead = prod[static_cast<std::size_t>(d)];
        if (lead == 0) continue;
        for (int i = 0; i <= k; ++i) {
            auto& slot = prod[static_cast<std::size_t>(d - k + i)];
            slot = mod(slot - lead * m[static_cast<std::size_t>(i)], p);
        }
    }
    for (int i = 0; i < k; ++i) c_[static_cast<std::size_t>(i)] = prod[static_cast<std::size_t>(i)];
    return *this;
}

FinFieldElt& FinFieldElt::operator/=(const FinFieldElt& o) { return *this *= o.inverse(); }

FinFieldElt FinFieldElt::pow(std::uint64_t e) const {
    FinFieldElt base = *this;
    FinFieldElt acc = field_->one();
    while (e > 0) {
        if (e & 1U) acc *= base;
        base *= base;
        e >>= 1U;
    }
    return acc;
}

FinFieldElt FinFieldElt::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero in finite field");
    return pow(static_cast<std::uint64_t>(field_->order() - 2));
}

FinFieldElt FinFieldElt::frobenius() const { return pow(static_cast<std::uint64_t>(field_->characteristic())); }

FinFieldElt FinFieldElt::frobenius_inverse() const {
    // x^{p^{k-1}} since x^{q} = x.
    return pow(static_cast<std::uint64_t>(field_->order() / field_->characteristic()));
}

std::string FinFieldElt::to_string() const {
    const int k = field_->degree();
    if (k == 1) return std::to_string(c_[0]);
    std::string out;
    for (int i = k - 1; i >= 0; --i) {
        const auto c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c) + "*";
            out += i == 1 ? "x" : "x^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

bool finite_field_square(const FinFieldElt& a) {
    if (a.is_zero()) throw DomainError("square-class test of zero");
    return a.pow(static_cast<std::uint64_t>((a.field().order() - 1) / 2)).is_one();
}

FinFieldElt finite_field_sqrt(const FinFieldElt& a) {
    if (a.is_zero()) return a;
    if (!finite_field_square(a)) throw DomainError("finite field element is not a square");
    const auto q = static_cast<std::uint64_t>(a.field().order());
    std::uint64_t s = 0;
    std::uint64_t odd = q - 1;
    while (odd % 2 == 0) {
        odd /= 2;
        ++s;
    }
    const FinFieldElt z = a.field().nonsquare();
    FinFieldElt c = z.pow(odd);
    FinFieldElt x = a.pow((odd + 1) / 2);
    FinFieldElt t = a.pow(odd);
    std::uint64_t m = s;
    while (!t.is_one()) {
        std::uint64_t i = 0;
        FinFieldElt t2 = t;
        while (!t2.is_one()) {
            t2 *= t2;
            ++i;
        }
        FinFieldElt b = c;
        for (std::uint64_t j = 0; j + i + 1 < m; ++j) b *= b;
        x *= b;
        c = b * b;
        t *= c;
        m = i;
    }
    const FinFieldElt y = -x;
    return y.index() < x.index() ? y : x;
}

FinFieldElt parse_finite_field_element(std::string_view text, const FiniteField& f) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto fail = [&]() -> FinFieldElt {
        throw DomainError("cannot parse finite field element '" + std::string(text) + "'");
    };
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    if (s.empty()) return fail();
    std::vector<std::int64_t> coords(static_cast<std::size_t>(f.degree()), 0);
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::int64_t sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        std::int64_t coef = 1;
        bool have_digits = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            const std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            coef = std::stoll(s.substr(start, pos - start));
            have_digits = true;
        }
        int exponent = 0;
        if (pos < s.size() && (s[pos] == '*' || s[pos] == 'x')) {
            if (s[pos] == '*') {
                if (!have_digits) return fail();
                ++pos;
            }
            if (pos >= s.size() || s[pos] != 'x') return fail();
            ++pos;
            exponent = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                const std::size_t start = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (start == pos) return fail();
                exponent = std::stoi(s.substr(start, pos - start));
            }
        } else if (!have_digits) {
            return fail();
        }
        if (exponent >= f.degree()) return fail();
        coords[static_cast<std::size_t>(exponent)] += sign * coef;
        if (pos < s.size() && s[pos] != '+' && s[pos] != '-') return fail();
    }
    for (auto& c : coords) c = ((c % f.characteristic()) + f.characteristic()) % f.characteristic();
    return f.from_coords(coords);
}

}  // namespace valfield

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

#ifndef VALFIELD_CORE_FINITE_FIELD_HPP
#define VALFIELD_CORE_FINITE_FIELD_HPP

#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace valfield {

class FinFieldElt;

/**
 * The finite field F_q, q = p^k, as F_p[x]/(m(x)) for the lexicographically
 * first monic irreducible m of degree k. Instances are interned: get() returns
 * the same object for the same (p, k) for the lifetime of the program, so
 * elements can hold a plain pointer to their field.
 */
class FiniteField {
   public:
    static constexpr int kMaxDegree = 4;

    /// p must be an odd prime below 2^20 and 1 <= k <= kMaxDegree.
    static const FiniteField& get(std::int64_t p, int k = 1);

    std::int64_t characteristic() const { return p_; }
    int degree() const { return k_; }
    std::int64_t order() const { return q_; }
    /// Coefficients m_0..m_k of the defining modulus (m_k = 1).
    const std::vector<std::int64_t>& modulus() const { return modulus_; }

    FinFieldElt zero() const;
    FinFieldElt one() const;
    FinFieldElt from_integer(std::int64_t n) const;
    /// Element with the given coordinates in the basis 1, x, ..., x^{k-1}.
    FinFieldElt from_coords(const std::vector<std::int64_t>& coords) const;
    /// The class of x in F_p[x]/(m).
    FinFieldElt generator() const;
    /// Element number `index` in base-p enumeration of coordinate vectors, 0 <= index < q.
    FinFieldElt element(std::int64_t index) const;
    std::vector<FinFieldElt> elements() const;
    /// A fixed non-square, found by enumeration.
    FinFieldElt nonsquare() const;

    bool operator==(const FiniteField& o) const { return this == &o; }

   private:
    FiniteField(std::int64_t p, int k);

    std::int64_t p_;
    int k_;
    std::int64_t q_;
    std::vector<std::int64_t> modulus_;
    std::int64_t nonsquare_index_ = 0;
};

/// Element of an interned FiniteField. Trivially copyable value.
class FinFieldElt {
   public:
    FinFieldElt() = default;

    const FiniteField& field() const { return *field_; }
    std::int64_t characteristic() const { return field_->characteristic(); }
    std::int64_t coord(int i) const { return c_[static_cast<std::size_t>(i)]; }
    /// Inverse of FiniteField::element.
    std::int64_t index() const;

    bool is_zero() const;
    bool is_one() const;

    FinFieldElt zero_like() const { return field_->zero(); }
    FinFieldElt one_like() const { return field_->one(); }
    FinFieldElt from_integer(std::int64_t n) const { return field_->from_integer(n); }

    FinFieldElt operator-() const;
    FinFieldElt& operator+=(const FinFieldElt& o);
    FinFieldElt& operator-=(const FinFieldElt& o);
    FinFieldElt& operator*=(const FinFieldElt& o);
    FinFieldElt& operator/=(const FinFieldElt& o);
    friend FinFieldElt operator+(FinFieldElt a, const FinFieldElt& b) { return a += b; }
    friend FinFieldElt operator-(FinFieldElt a, const FinFieldElt& b) { return a -= b; }
    friend FinFieldElt operator*(FinFieldElt a, const FinFieldElt& b) { return a *= b; }
    friend FinFieldElt operator/(FinFieldElt a, const FinFieldElt& b) { return a /= b; }
    friend bool operator==(const FinFieldElt& a, const FinFieldElt& b);

    FinFieldElt pow(std::uint64_t e) const;
    FinFieldElt inverse() const;
    /// x -> x^p.
    FinFieldElt frobenius() const;
    /// The unique p-th root.
    FinFieldElt frobenius_inverse() const;

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const FinFieldElt& a) { return os << a.to_string(); }

   private:
    friend class FiniteField;
    const FiniteField* field_ = nullptr;
    std::array<std::int64_t, FiniteField::kMaxDegree> c_{};
};

/// Euler criterion a^((q-1)/2) = 1. Rejects a = 0.
bool finite_field_square(const FinFieldElt& a);

/// The square root of a with the smaller element index (Tonelli-Shanks);
/// throws DomainError on non-squares.
FinFieldElt finite_field_sqrt(const FinFieldElt& a);

/// Parses the output of FinFieldElt::to_string ("3", "2*x+1", "x^2"), optionally
/// wrapped in parentheses; integers may be negative.
FinFieldElt parse_finite_field_element(std::string_view text, const FiniteField& f);

}  // namespace valfield

#endif

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

#ifndef VALFIELD_WITT_WITT_POLYNOMIALS_HPP
#define VALFIELD_WITT_WITT_POLYNOMIALS_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "valfield/core/rational.hpp"

namespace valfield::witt {

inline constexpr int kMaxWittLength = 4;

/// Packs exponents of X_0..X_{n-1}, Y_0..Y_{n-1} into one word. Field widths
/// come from the degree bound deg_{X_j} <= p^{n-1-j} of every Witt polynomial.
class MonomialLayout {
   public:
    MonomialLayout(std::int64_t p, int n);
    int variables() const { return 2 * n_; }
    std::uint64_t pack(const std::vector<std::uint32_t>& exps) const;
    std::vector<std::uint32_t> unpack(std::uint64_t key) const;
    std::uint32_t exponent(std::uint64_t key, int var) const {
        return static_cast<std::uint32_t>((key >> shift_[static_cast<std::size_t>(var)]) &
                                          mask_[static_cast<std::size_t>(var)]);
    }
    /// Monomial X_j (var = j) or Y_j (var = n + j) raised to e.
    std::uint64_t single(int var, std::uint32_t e) const;

   private:
    int n_;
    std::vector<int> shift_;
    std::vector<std::uint64_t> mask_;
};

struct IntTerm {
    std::uint64_t monomial;
    Integer coef;
};

/// Term with coefficient reduced into 1..p-1, for evaluation in characteristic p.
struct ModTerm {
    std::uint64_t monomial;
    std::int64_t coef;
};

/// Polynomial with integer coefficients in 2n variables, sorted by monomial key.
struct IntPoly {
    std::vector<IntTerm> terms;

    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const IntPoly& a, const IntPoly& b);
};

IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_scale(const IntPoly& a, const Integer& c);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_pow(const IntPoly& a, std::uint64_t e);

/**
 * Witt addition and multiplication polynomials S_0..S_{n-1}, P_0..P_{n-1}
 * over Z, obtained from the ghost equations
 *   w_i(S) = w_i(X) + w_i(Y),  w_i(P) = w_i(X) w_i(Y),
 *   w_i(Z) = sum_{j<=i} p^j Z_j^{p^{i-j}}.
 * Each step divides by p^i and throws InternalError if a coefficient is not
 * divisible, so a returned set is integral by construction.
 */
class WittPolySet {
   public:
    static WittPolySet generate(std::int64_t p, int n);
    /// Process-wide cache; generation happens once per (p, n). If the
    /// environment variable VALFIELD_WITT_CACHE names a directory, sets are
    /// read from and written to it via load_or_generate.
    static const WittPolySet& get(std::int64_t p, int n);

    std::int64_t prime() const { return p_; }
    int length() const { return n_; }
    const MonomialLayout& layout() const { return layout_; }
    const IntPoly& sum(int i) const { return s_[static_cast<std::size_t>(i)]; }
    const IntPoly& product(int i) const { return m_[static_cast<std::size_t>(i)]; }
    const std::vector<ModTerm>& sum_mod_p(int i) const { return s_mod_[static_cast<std::size_t>(i)]; }
    const std::vector<ModTerm>& product_mod_p(int i) const { return m_mod_[static_cast<std::size_t>(i)]; }

    /// Ghost component w_i as a polynomial in the X (second = false) or Y variables.
    IntPoly ghost(int i, bool y_variables) const;
    /// Substitutes polynomials for X_0..X_{n-1}, Y_0..Y_{n-1}.
    IntPoly compose(const IntPoly& f, const std::vector<IntPoly>& values) const;

    /// Text form: header "valfield-witt-polys 1 <p> <n>", then per polynomial
    /// a line "S <i> <terms>" or "P <i> <terms>" followed by lines
    /// "<coef> <e_X0> ... <e_Y{n-1}>".
    std::string serialize() const;
    static WittPolySet deserialize(const std::string& text);
    /// Reads <dir>/witt_<p>_<n>.txt if present, otherwise generates and writes it.
    static WittPolySet load_or_generate(std::int64_t p, int n, const std::filesystem::path& dir);

    std::string format(const IntPoly& f) const;

   private:
    WittPolySet(std::int64_t p, int n) : p_(p), n_(n), layout_(p, n) {}
    void reduce();

    std::int64_t p_;
    int n_;
    MonomialLayout layout_;
    std::vector<IntPoly> s_;
    std::vector<IntPoly> m_;
    std::vector<std::vector<ModTerm>> s_mod_;
    std::vector<std::vector<ModTerm>> m_mod_;
};

}  // namespace valfield::witt

#endif

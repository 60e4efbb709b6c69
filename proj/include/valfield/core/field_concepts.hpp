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

#ifndef VALFIELD_CORE_FIELD_CONCEPTS_HPP
#define VALFIELD_CORE_FIELD_CONCEPTS_HPP

#include <concepts>
#include <cstdint>
#include <optional>

namespace valfield {

// Field elements carry their own context (prime, modulus, variable), so
// constants are produced from an existing element rather than from the type.
template <class F>
concept FieldElement = std::copyable<F> && requires(const F a, const F b, std::int64_t n) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.zero_like() } -> std::convertible_to<F>;
    { a.one_like() } -> std::convertible_to<F>;
    { a.from_integer(n) } -> std::convertible_to<F>;
    { a.characteristic() } -> std::convertible_to<std::int64_t>;
};

// A perfect field of characteristic p: Frobenius is onto.
template <class F>
concept PerfectFieldElement = FieldElement<F> && requires(const F a) {
    { a.frobenius() } -> std::convertible_to<F>;
    { a.frobenius_inverse() } -> std::convertible_to<F>;
};

/// p-th root if it exists in the field itself; always engaged for perfect fields.
template <PerfectFieldElement F>
std::optional<F> try_pth_root(const F& a) {
    return a.frobenius_inverse();
}

template <FieldElement F>
F power(const F& a, std::uint64_t e) {
    F base = a;
    F acc = a.one_like();
    while (e > 0) {
        if (e & 1U) acc = acc * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return acc;
}

}  // namespace valfield

#endif

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

#ifndef VALFIELD_FIELDS_HAHN_SWEEP_HPP
#define VALFIELD_FIELDS_HAHN_SWEEP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "valfield/oag/oag_element.hpp"

namespace valfield {

/// Exhaustive check of hahn_is_square(c t^g) == (g 2-divisible and c a square)
/// over g supported on `indices` with coordinates n/d, |n| <= max_numerator,
/// d in {1, p, ..., p^max_den_exp}, and all c in F_p^x.
struct HahnSquareSweep {
    std::int64_t cases = 0;
    std::int64_t squares = 0;
    std::vector<std::string> mismatches;
    friend bool operator==(const HahnSquareSweep&, const HahnSquareSweep&) = default;
};

struct HahnSweepRange {
    std::int64_t p = 5;
    std::vector<std::int64_t> indices{0, 1, 2};
    int max_numerator = 2;
    int max_den_exp = 2;
};

/// The exponents covered by the sweep, in a fixed order.
std::vector<oag::OagElement> sweep_exponents(const HahnSweepRange& range);
HahnSquareSweep sweep_hahn_squares_serial(const HahnSweepRange& range);
/// OpenMP over exponents; results merged in serial order.
HahnSquareSweep sweep_hahn_squares_parallel(const HahnSweepRange& range);

}  // namespace valfield

#endif

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

#ifndef VALFIELD_CORE_ERRORS_HPP
#define VALFIELD_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace valfield {

/// Raised when an operation leaves the domain it is defined on
/// (zero where a unit is required, mismatched primes, bad parameters).
class DomainError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a truncated object does not carry enough terms or
/// components to decide the requested quantity.
class InsufficientPrecision : public std::runtime_error {
   public:
    explicit InsufficientPrecision(const std::string& what)
        : std::runtime_error("insufficient precision: " + what) {}
};

/// Internal consistency failure (for instance a non-integral Witt polynomial).
class InternalError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace valfield

#endif

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

#include "valfield/core/rational.hpp"

#include "valfield/core/errors.hpp"

namespace valfield {

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero rational");
    q_ /= o.q_;
    return *this;
}

Integer Rational::floor() const {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return out;
}

int exact_power_exponent(const Integer& n, std::int64_t p) {
    if (n <= 0) return -1;
    Integer m = n;
    int e = 0;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    return m == 1 ? e : -1;
}

Integer strip_prime(const Integer& n, std::int64_t p) {
    Integer m = abs(n);
    if (m == 0) return m;
    while (m % p == 0) m /= p;
    return m;
}

}  // namespace valfield

/*
   Copyright 2026 The invar-lattice Authors

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

#ifndef INVLAT_INTEGER_HPP
#define INVLAT_INTEGER_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "invlat/error.hpp"

namespace invlat {

using Int = std::int64_t;
using Vec = std::vector<Int>;
using IntMatrix = std::vector<Vec>;

// Checked 64-bit arithmetic. Overflow raises ErrorCode::overflow; nothing
// in the library is allowed to wrap silently.

[[noreturn]] void throw_overflow(const char* op);

inline Int checked_add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw_overflow("addition");
    return r;
}

inline Int checked_sub(Int a, Int b)
{
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw_overflow("subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw_overflow("multiplication");
    return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

inline Int checked_abs(Int a) { return a < 0 ? checked_neg(a) : a; }

// Representative of a mod n in [0, n). Requires n > 0.
inline Int floor_mod(Int a, Int n)
{
    Int r = a % n;
    return r < 0 ? r + n : r;
}

// floor(a / b) for b != 0.
inline Int floor_div(Int a, Int b)
{
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

Int gcd(Int a, Int b);
Int lcm(Int a, Int b);
Int checked_pow(Int base, Int exp);

// g = gcd(a, b) >= 0 with x*a + y*b = g.
struct ExtGcd {
    Int g;
    Int x;
    Int y;
};
ExtGcd ext_gcd(Int a, Int b);

bool is_prime(Int n);

// Sum of absolute values: the degree of the Laurent monomial x^a.
Int l1_norm(std::span<const Int> a);

std::string format_vector(std::span<const Int> a);

} // namespace invlat

#endif
